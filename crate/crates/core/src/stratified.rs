//! Finite, dimension-truncated stratified simplicial sets and a checker for
//! the complicial-set conditions.
//!
//! Elements are indices into per-dimension lists. Horns of dimension `D`
//! (whose fillers would live in dimension `D + 1`) are counted as
//! indeterminate rather than judged.

use std::cell::RefCell;
use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::nerve::Nerve;
use crate::{Error, Result};

/// A simplicial set truncated at dimension `D`, with face and degeneracy
/// tables and thin flags.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StratifiedSet {
    /// Number of elements in each dimension `0..=D`.
    pub dims: Vec<usize>,
    /// `faces[n][x] = [∂_0 x, …, ∂_n x]`; empty lists in dimension 0.
    pub faces: Vec<Vec<Vec<usize>>>,
    /// `degeneracies[n][x] = [ε_0 x, …, ε_n x]` for `n < D`; dimension `D`
    /// has none.
    pub degeneracies: Vec<Vec<Vec<usize>>>,
    /// Thin flags; dimension 0 flags must be false.
    pub thin: Vec<Vec<bool>>,
}

/// An `(n−1)`-dimensional `k`-horn, faces listed with `z_k` omitted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct HornRecord {
    pub n: usize,
    pub k: usize,
    pub faces: Vec<usize>,
}

impl HornRecord {
    /// `z_i` for `i ≠ k`.
    pub fn face(&self, i: usize) -> Option<usize> {
        match i.cmp(&self.k) {
            std::cmp::Ordering::Less => self.faces.get(i).copied(),
            std::cmp::Ordering::Equal => None,
            std::cmp::Ordering::Greater => self.faces.get(i - 1).copied(),
        }
    }
}

impl StratifiedSet {
    pub fn max_dim(&self) -> usize {
        self.dims.len().saturating_sub(1)
    }

    pub fn len(&self, n: usize) -> usize {
        self.dims.get(n).copied().unwrap_or(0)
    }

    pub fn face(&self, n: usize, x: usize, i: usize) -> usize {
        self.faces[n][x][i]
    }

    pub fn degeneracy(&self, n: usize, x: usize, i: usize) -> usize {
        self.degeneracies[n][x][i]
    }

    pub fn is_thin(&self, n: usize, x: usize) -> bool {
        self.thin[n][x]
    }

    /// Whether `x ∈ X_n` is `ε_i y` for some `y ∈ X_{n−1}`.
    pub fn is_degenerate(&self, n: usize, x: usize) -> bool {
        n > 0 && (0..n).any(|i| self.degeneracy(n - 1, self.face(n, x, i), i) == x)
    }

    /// The restriction to dimensions `≤ d`.
    pub fn truncate(&self, d: usize) -> StratifiedSet {
        let d = d.min(self.max_dim());
        let mut degeneracies = self.degeneracies[..=d].to_vec();
        degeneracies[d] = vec![Vec::new(); self.len(d)];
        StratifiedSet {
            dims: self.dims[..=d].to_vec(),
            faces: self.faces[..=d].to_vec(),
            degeneracies,
            thin: self.thin[..=d].to_vec(),
        }
    }

    /// Checks table shapes, index ranges, the simplicial identities and that
    /// degenerate elements are thin.
    pub fn validate(&self) -> Result<()> {
        let top = self.dims.len();
        if top == 0 {
            return Err(Error::Integrity("a stratified set needs at least dimension 0".into()));
        }
        if self.faces.len() != top || self.degeneracies.len() != top || self.thin.len() != top {
            return Err(Error::Integrity("faces, degeneracies and thin must have one entry per dimension".into()));
        }
        let d = top - 1;
        for n in 0..=d {
            let size = self.dims[n];
            if self.faces[n].len() != size || self.degeneracies[n].len() != size || self.thin[n].len() != size {
                return Err(Error::Integrity(format!("tables in dimension {n} do not have {size} entries")));
            }
            for x in 0..size {
                let nf = if n == 0 { 0 } else { n + 1 };
                if self.faces[n][x].len() != nf || self.faces[n][x].iter().any(|&y| y >= self.dims[n - 1]) {
                    return Err(Error::Integrity(format!("faces of element {x} in dimension {n} are malformed")));
                }
                let nd = if n < d { n + 1 } else { 0 };
                if self.degeneracies[n][x].len() != nd || self.degeneracies[n][x].iter().any(|&y| y >= self.dims[n + 1]) {
                    return Err(Error::Integrity(format!("degeneracies of element {x} in dimension {n} are malformed")));
                }
            }
            if n == 0 && self.thin[0].iter().any(|&t| t) {
                return Err(Error::Integrity("0-dimensional elements cannot be thin".into()));
            }
        }
        let fail = |law: &str, n: usize, x: usize| Err(Error::Integrity(format!("{law} fails at element {x} in dimension {n}")));
        for n in 2..=d {
            for x in 0..self.dims[n] {
                for j in 0..=n {
                    for i in 0..j {
                        if self.face(n - 1, self.face(n, x, j), i) != self.face(n - 1, self.face(n, x, i), j - 1) {
                            return fail(&format!("∂_{i}∂_{j} = ∂_{}∂_{i}", j - 1), n, x);
                        }
                    }
                }
            }
        }
        for n in 0..d {
            for x in 0..self.dims[n] {
                for j in 0..=n {
                    let e = self.degeneracy(n, x, j);
                    if !self.thin[n + 1][e] {
                        return fail(&format!("thinness of ε_{j} x"), n, x);
                    }
                    for i in 0..=n + 1 {
                        let lhs = self.face(n + 1, e, i);
                        let ok = if i == j || i == j + 1 {
                            lhs == x
                        } else if i < j {
                            lhs == self.degeneracy(n - 1, self.face(n, x, i), j - 1)
                        } else {
                            lhs == self.degeneracy(n - 1, self.face(n, x, i - 1), j)
                        };
                        if !ok {
                            return fail(&format!("∂_{i}ε_{j}"), n, x);
                        }
                    }
                    if n + 1 < d {
                        for i in 0..=j {
                            if self.degeneracy(n + 1, e, i) != self.degeneracy(n + 1, self.degeneracy(n, x, i), j + 1) {
                                return fail(&format!("ε_{i}ε_{j} = ε_{}ε_{i}", j + 1), n, x);
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Validates the compatibilities `∂_i z_j = ∂_{j−1} z_i` for `i < j`.
    pub fn horn(&self, n: usize, k: usize, faces: Vec<usize>) -> Result<HornRecord> {
        if n == 0 || k > n || faces.len() != n || n - 1 > self.max_dim() {
            return Err(Error::Horn(format!("not an {}-dimensional {k}-horn in this set", n.saturating_sub(1))));
        }
        if faces.iter().any(|&z| z >= self.len(n - 1)) {
            return Err(Error::Horn("face index out of range".into()));
        }
        let h = HornRecord { n, k, faces };
        if n >= 2 {
            for j in 0..=n {
                for i in 0..j {
                    if let (Some(zi), Some(zj)) = (h.face(i), h.face(j)) {
                        if self.face(n - 1, zj, i) != self.face(n - 1, zi, j - 1) {
                            return Err(Error::Horn(format!("∂_{i} z_{j} ≠ ∂_{} z_{i}", j - 1)));
                        }
                    }
                }
            }
        }
        Ok(h)
    }

    /// The `k`-horn of `x ∈ X_n`.
    pub fn horn_of(&self, n: usize, x: usize, k: usize) -> HornRecord {
        HornRecord { n, k, faces: (0..=n).filter(|&i| i != k).map(|i| self.face(n, x, i)).collect() }
    }

    /// Thin elements of `X_n` whose faces agree with the horn.
    pub fn thin_fillers(&self, h: &HornRecord) -> Vec<usize> {
        if h.n > self.max_dim() {
            return Vec::new();
        }
        (0..self.len(h.n)).filter(|&x| self.thin[h.n][x] && self.horn_of(h.n, x, h.k) == *h).collect()
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("stratified sets serialize")
    }

    pub fn from_json_str(s: &str) -> Result<StratifiedSet> {
        let set: StratifiedSet =
            serde_json::from_str(s).map_err(|e| Error::Input(e.to_string()))?;
        set.validate()?;
        Ok(set)
    }
}

/// The stratified set underlying a nerve truncated at `d`.
pub fn from_nerve(nerve: &Nerve, d: usize) -> Result<StratifiedSet> {
    if d > nerve.max_dim() {
        return Err(Error::NotTabulated(format!("nerve is tabulated to dimension {}, not {d}", nerve.max_dim())));
    }
    let lookup = |x| nerve.index_of(&x).ok_or_else(|| Error::Invariant("simplicial operator left the nerve".into()));
    let mut set = StratifiedSet { dims: Vec::new(), faces: Vec::new(), degeneracies: Vec::new(), thin: Vec::new() };
    for n in 0..=d {
        let els = nerve.elements(n);
        set.dims.push(els.len());
        let mut faces = Vec::with_capacity(els.len());
        let mut degens = Vec::with_capacity(els.len());
        let mut thin = Vec::with_capacity(els.len());
        for x in els {
            faces.push(if n == 0 { Vec::new() } else { (0..=n).map(|i| lookup(nerve.face(x, i)?)).collect::<Result<_>>()? });
            degens.push(if n < d { (0..=n).map(|i| lookup(nerve.degeneracy(x, i)?)).collect::<Result<_>>()? } else { Vec::new() });
            thin.push(n > 0 && nerve.is_thin(x)?);
        }
        set.faces.push(faces);
        set.degeneracies.push(degens);
        set.thin.push(thin);
    }
    Ok(set)
}

/// Memoized evaluation of the complicial classes of elements and horns.
pub struct Classifier<'a> {
    set: &'a StratifiedSet,
    memo: RefCell<HashMap<(usize, usize, usize), bool>>,
}

impl<'a> Classifier<'a> {
    pub fn new(set: &'a StratifiedSet) -> Self {
        Classifier { set, memo: RefCell::new(HashMap::new()) }
    }

    /// Whether `x ∈ X_n` is a thin filler of a `k`-complicial horn, namely its
    /// own `k`-horn.
    pub fn is_complicial_element(&self, n: usize, x: usize, k: usize) -> bool {
        if k == 0 || k >= n {
            return false;
        }
        if let Some(&v) = self.memo.borrow().get(&(n, x, k)) {
            return v;
        }
        let v = self.set.is_thin(n, x) && self.is_complicial_horn(&self.set.horn_of(n, x, k));
        self.memo.borrow_mut().insert((n, x, k), v);
        v
    }

    /// Faces `z_i` with `i < k − 1` must be `(k−1)`-complicial and faces with
    /// `i > k + 1` must be `k`-complicial.
    pub fn is_complicial_horn(&self, h: &HornRecord) -> bool {
        let (n, k) = (h.n, h.k);
        if k == 0 || k >= n {
            return false;
        }
        (0..k.saturating_sub(1)).all(|i| self.is_complicial_element(n - 1, h.face(i).expect("face"), k - 1))
            && (k + 2..=n).all(|i| self.is_complicial_element(n - 1, h.face(i).expect("face"), k))
    }

    /// All `(n−1)`-dimensional `k`-complicial horns, in lexicographic order
    /// of their face lists.
    pub fn complicial_horns(&self, n: usize, k: usize) -> Vec<HornRecord> {
        let set = self.set;
        if k == 0 || k >= n || n - 1 > set.max_dim() {
            return Vec::new();
        }
        let candidates: Vec<Vec<usize>> = (0..=n)
            .map(|i| {
                (0..set.len(n - 1))
                    .filter(|&z| {
                        if i == k {
                            false
                        } else if i + 1 < k {
                            self.is_complicial_element(n - 1, z, k - 1)
                        } else if i > k + 1 {
                            self.is_complicial_element(n - 1, z, k)
                        } else {
                            true
                        }
                    })
                    .collect()
            })
            .collect();
        let mut out = Vec::new();
        let mut chosen: Vec<Option<usize>> = vec![None; n + 1];
        self.extend_horn(n, k, 0, &candidates, &mut chosen, &mut out);
        out
    }

    fn extend_horn(
        &self,
        n: usize,
        k: usize,
        j: usize,
        candidates: &[Vec<usize>],
        chosen: &mut Vec<Option<usize>>,
        out: &mut Vec<HornRecord>,
    ) {
        if j > n {
            out.push(HornRecord { n, k, faces: chosen.iter().flatten().copied().collect() });
            return;
        }
        if j == k {
            return self.extend_horn(n, k, j + 1, candidates, chosen, out);
        }
        for &zj in &candidates[j] {
            let compatible = n < 2
                || (0..j).all(|i| match chosen[i] {
                    Some(zi) => self.set.face(n - 1, zj, i) == self.set.face(n - 1, zi, j - 1),
                    None => true,
                });
            if compatible {
                chosen[j] = Some(zj);
                self.extend_horn(n, k, j + 1, candidates, chosen, out);
                chosen[j] = None;
            }
        }
    }
}

pub fn is_complicial_element(set: &StratifiedSet, n: usize, x: usize, k: usize) -> bool {
    Classifier::new(set).is_complicial_element(n, x, k)
}

pub fn is_complicial_horn(set: &StratifiedSet, h: &HornRecord) -> bool {
    Classifier::new(set).is_complicial_horn(h)
}

/// A violated condition with the indices that witness it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    /// 1: thin 1-elements are degenerate; 2: unique thin fillers;
    /// 3: thin middle faces.
    pub clause: u8,
    pub dim: usize,
    pub k: Option<usize>,
    pub horn: Option<HornRecord>,
    pub elements: Vec<usize>,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomReport {
    pub max_dim: usize,
    pub horns_checked: usize,
    /// Complicial horns of dimension `D`, whose fillers are not tabulated.
    pub indeterminate: usize,
    pub violations: Vec<Violation>,
}

impl AxiomReport {
    pub fn is_empty(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks the three complicial-set conditions up to the truncation
/// dimension, searching fillers exhaustively.
pub fn check_complicial_axioms(set: &StratifiedSet) -> Result<AxiomReport> {
    set.validate()?;
    let d = set.max_dim();
    let classes = Classifier::new(set);
    let mut report = AxiomReport { max_dim: d, ..AxiomReport::default() };
    if d >= 1 {
        for x in 0..set.len(1) {
            if set.is_thin(1, x) && !set.is_degenerate(1, x) {
                report.violations.push(Violation {
                    clause: 1,
                    dim: 1,
                    k: None,
                    horn: None,
                    elements: vec![x],
                    detail: "thin 1-dimensional element is not degenerate".into(),
                });
            }
        }
    }
    for n in 2..=d + 1 {
        for k in 1..n {
            let horns = classes.complicial_horns(n, k);
            if n > d {
                report.indeterminate += horns.len();
                continue;
            }
            let mut fillers: HashMap<HornRecord, Vec<usize>> = HashMap::new();
            for x in (0..set.len(n)).filter(|&x| set.is_thin(n, x)) {
                fillers.entry(set.horn_of(n, x, k)).or_default().push(x);
            }
            for h in horns {
                report.horns_checked += 1;
                let found = fillers.get(&h).cloned().unwrap_or_default();
                if found.len() != 1 {
                    report.violations.push(Violation {
                        clause: 2,
                        dim: n,
                        k: Some(k),
                        detail: format!("complicial horn has {} thin fillers", found.len()),
                        horn: Some(h),
                        elements: found,
                    });
                }
            }
            for x in 0..set.len(n) {
                if classes.is_complicial_element(n, x, k)
                    && set.is_thin(n - 1, set.face(n, x, k - 1))
                    && set.is_thin(n - 1, set.face(n, x, k + 1))
                    && !set.is_thin(n - 1, set.face(n, x, k))
                {
                    report.violations.push(Violation {
                        clause: 3,
                        dim: n,
                        k: Some(k),
                        horn: None,
                        elements: vec![x],
                        detail: format!("∂_{} and ∂_{} are thin but ∂_{k} is not", k - 1, k + 1),
                    });
                }
            }
        }
    }
    Ok(report)
}
