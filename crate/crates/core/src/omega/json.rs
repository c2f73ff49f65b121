//! JSON forms of ν-elements and tabulated ω-categories.

use serde::{Deserialize, Serialize};

use crate::adc::json::{chain_from_json, chain_to_json, ChainJson, ComplexJson};
use crate::{Error, Result, Sign};

use super::{NuElement, OmegaTable};

/// `[[x_0^-, x_0^+], [x_1^-, x_1^+], …]`.
pub type NuJson = Vec<[ChainJson; 2]>;

pub fn nu_to_json(x: &NuElement) -> NuJson {
    x.pairs().iter().map(|(m, p)| [chain_to_json(m), chain_to_json(p)]).collect()
}

pub fn nu_from_json(j: &NuJson) -> Result<NuElement> {
    let pairs = j
        .iter()
        .enumerate()
        .map(|(q, [m, p])| Ok((chain_from_json(q, m)?, chain_from_json(q, p)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(NuElement::new(pairs))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DTableJson {
    pub m: usize,
    pub sign: Sign,
    pub map: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompTableJson {
    pub m: usize,
    /// `[left, right, composite]` index triples, sorted.
    pub entries: Vec<[usize; 3]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OmegaTableJson {
    pub complex: ComplexJson,
    pub elements: Vec<NuJson>,
    pub atoms: std::collections::BTreeMap<String, usize>,
    pub d: Vec<DTableJson>,
    pub comp: Vec<CompTableJson>,
}

impl From<&OmegaTable> for OmegaTableJson {
    fn from(t: &OmegaTable) -> Self {
        let d = (0..t.top_dim())
            .flat_map(|m| {
                Sign::BOTH.into_iter().map(move |sign| DTableJson {
                    m,
                    sign,
                    map: (0..t.len()).map(|i| t.d(m, sign, i)).collect(),
                })
            })
            .collect();
        let comp = (0..t.top_dim())
            .map(|m| {
                let mut entries: Vec<[usize; 3]> = t.composites(m).map(|(a, b, c)| [a, b, c]).collect();
                entries.sort();
                CompTableJson { m, entries }
            })
            .collect();
        OmegaTableJson {
            complex: t.complex().into(),
            elements: t.elements().iter().map(nu_to_json).collect(),
            atoms: t.atoms().map(|(b, i)| (b.to_string(), i)).collect(),
            d,
            comp,
        }
    }
}

pub fn nu_list_to_string(xs: &[NuElement]) -> String {
    serde_json::to_string_pretty(&xs.iter().map(nu_to_json).collect::<Vec<_>>()).expect("serializable")
}

pub fn nu_list_from_str(s: &str) -> Result<Vec<NuElement>> {
    let j: Vec<NuJson> = serde_json::from_str(s).map_err(|e| Error::Input(e.to_string()))?;
    j.iter().map(nu_from_json).collect()
}

pub fn table_to_string(t: &OmegaTable) -> String {
    serde_json::to_string_pretty(&OmegaTableJson::from(t)).expect("serializable")
}
