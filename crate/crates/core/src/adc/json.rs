//! JSON forms of complexes, morphisms and chains.
//!
//! A complex is `{dims, boundary, augmentation}` with basis elements named by
//! their labels (`"[0,1]"` for simplex tuples); a chain is a `{label: coeff}`
//! object; a morphism is `{source, target, image}`. All maps are ordered, so
//! serializing a parsed document reproduces it byte for byte.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{Cell, Chain, ComplexMorphism, DirectedComplex};
use crate::{Error, Result};

pub type ChainJson = BTreeMap<String, i64>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexJson {
    pub dims: Vec<Vec<String>>,
    pub boundary: BTreeMap<String, ChainJson>,
    pub augmentation: BTreeMap<String, i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorphismJson {
    pub source: ComplexJson,
    pub target: ComplexJson,
    pub image: BTreeMap<String, ChainJson>,
}

pub fn chain_to_json(c: &Chain) -> ChainJson {
    c.terms().map(|(cell, k)| (cell.to_string(), k)).collect()
}

pub fn chain_from_json(dim: usize, j: &ChainJson) -> Result<Chain> {
    let terms = j
        .iter()
        .map(|(label, &k)| Ok((label.parse::<Cell>()?, k)))
        .collect::<Result<Vec<_>>>()?;
    Ok(Chain::from_terms(dim, terms))
}

impl From<&DirectedComplex> for ComplexJson {
    fn from(k: &DirectedComplex) -> Self {
        let dims = (0..k.top_dim().map_or(0, |t| t + 1))
            .map(|d| k.basis(d).iter().map(Cell::to_string).collect())
            .collect();
        let boundary = k
            .boundary_table()
            .iter()
            .map(|(cell, c)| (cell.to_string(), chain_to_json(c)))
            .collect();
        let augmentation = k
            .basis(0)
            .iter()
            .map(|c| (c.to_string(), k.augmentation_of(c)))
            .filter(|(_, e)| *e != 0)
            .collect();
        ComplexJson { dims, boundary, augmentation }
    }
}

impl TryFrom<&ComplexJson> for DirectedComplex {
    type Error = Error;

    fn try_from(j: &ComplexJson) -> Result<Self> {
        let bases = j
            .dims
            .iter()
            .map(|labels| labels.iter().map(|s| s.parse::<Cell>()).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        let dim_of: BTreeMap<&Cell, usize> = bases
            .iter()
            .enumerate()
            .flat_map(|(d, cells)| cells.iter().map(move |c| (c, d)))
            .collect();
        let mut boundary = BTreeMap::new();
        for (label, cj) in &j.boundary {
            let cell: Cell = label.parse()?;
            let d = *dim_of
                .get(&cell)
                .ok_or_else(|| Error::Input(format!("boundary given for unknown label {label}")))?;
            if d == 0 {
                if !cj.is_empty() {
                    return Err(Error::Input(format!("vertex {label} has a non-zero boundary")));
                }
                continue;
            }
            boundary.insert(cell, chain_from_json(d - 1, cj)?);
        }
        let augmentation = j
            .augmentation
            .iter()
            .map(|(label, &k)| Ok((label.parse::<Cell>()?, k)))
            .collect::<Result<_>>()?;
        DirectedComplex::new(bases, boundary, augmentation)
    }
}

impl From<&ComplexMorphism> for MorphismJson {
    fn from(f: &ComplexMorphism) -> Self {
        MorphismJson {
            source: f.source().into(),
            target: f.target().into(),
            image: f
                .image_table()
                .iter()
                .map(|(cell, c)| (cell.to_string(), chain_to_json(c)))
                .collect(),
        }
    }
}

impl TryFrom<&MorphismJson> for ComplexMorphism {
    type Error = Error;

    fn try_from(j: &MorphismJson) -> Result<Self> {
        let source = DirectedComplex::try_from(&j.source)?;
        let target = DirectedComplex::try_from(&j.target)?;
        let mut image = BTreeMap::new();
        for (label, cj) in &j.image {
            let cell: Cell = label.parse()?;
            let d = source
                .dim_of(&cell)
                .ok_or_else(|| Error::Input(format!("image given for unknown label {label}")))?;
            image.insert(cell, chain_from_json(d, cj)?);
        }
        ComplexMorphism::new(source, target, image)
    }
}

pub fn complex_to_string(k: &DirectedComplex) -> String {
    serde_json::to_string_pretty(&ComplexJson::from(k)).expect("serializable")
}

pub fn complex_from_str(s: &str) -> Result<DirectedComplex> {
    let j: ComplexJson = serde_json::from_str(s).map_err(|e| Error::Input(e.to_string()))?;
    DirectedComplex::try_from(&j)
}

pub fn morphism_to_string(f: &ComplexMorphism) -> String {
    serde_json::to_string_pretty(&MorphismJson::from(f)).expect("serializable")
}

pub fn morphism_from_str(s: &str) -> Result<ComplexMorphism> {
    let j: MorphismJson = serde_json::from_str(s).map_err(|e| Error::Input(e.to_string()))?;
    ComplexMorphism::try_from(&j)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplex::{delta, face_map};

    #[test]
    fn delta_round_trips_bit_exact() {
        let k = delta(3);
        let s = complex_to_string(&k);
        let back = complex_from_str(&s).unwrap();
        assert_eq!(back, k);
        assert_eq!(complex_to_string(&back), s);
    }

    #[test]
    fn morphism_round_trips() {
        let f = face_map(2, 1).unwrap();
        let s = morphism_to_string(&f);
        let back = morphism_from_str(&s).unwrap();
        assert!(back.same_map(&f));
        assert_eq!(morphism_to_string(&back), s);
    }

    #[test]
    fn malformed_json_is_an_input_error() {
        assert!(matches!(complex_from_str("{\"dims\": 3}"), Err(Error::Input(_))));
    }
}
