//! Free augmented directed complexes and the chain-level operations on them.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use petgraph::algo::{astar, toposort};
use petgraph::graphmap::DiGraphMap;
use serde::{Deserialize, Serialize};

use super::chain::{BasisElement, Cell, Chain};
use crate::{Error, Result, Sign};

/// A free augmented chain complex with prescribed bases.
///
/// Basis labels are unique across the whole complex. Construction only checks
/// the structural shape of the data; the algebraic conditions (`∂∂ = 0`,
/// `ε∂ = 0`, grading) are reported by [`DirectedComplex::validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DirectedComplex {
    bases: Vec<Vec<Cell>>,
    boundary: BTreeMap<Cell, Chain>,
    augmentation: BTreeMap<Cell, i64>,
    dims: HashMap<Cell, usize>,
}

/// One failed well-formedness or morphism condition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Issue {
    pub kind: IssueKind,
    pub subject: String,
    pub detail: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum IssueKind {
    Unregistered,
    Grading,
    BoundaryOfBoundary,
    Augmentation,
    ChainMap,
    NotSumOfBasis,
}

/// A list of issues; empty means valid.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub issues: Vec<Issue>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.issues.is_empty()
    }

    pub fn has(&self, kind: IssueKind) -> bool {
        self.issues.iter().any(|i| i.kind == kind)
    }

    pub(crate) fn push(&mut self, kind: IssueKind, subject: impl ToString, detail: impl Into<String>) {
        self.issues.push(Issue { kind, subject: subject.to_string(), detail: detail.into() });
    }
}

/// Result of the loop-freeness decision: the generating relation `a < a'`,
/// and a cycle of its transitive closure when one exists.
#[derive(Clone, Debug)]
pub struct LoopFreeness {
    pub relation: BTreeSet<(BasisElement, BasisElement)>,
    pub witness: Option<Vec<BasisElement>>,
}

impl LoopFreeness {
    pub fn is_loop_free(&self) -> bool {
        self.witness.is_none()
    }
}

impl DirectedComplex {
    /// Builds a complex from per-dimension bases, a boundary table for the
    /// positive-dimensional elements and an augmentation for the vertices.
    ///
    /// Missing boundary entries are zero and missing augmentation entries are
    /// zero. Fails only on duplicate labels or on table entries for
    /// unregistered labels.
    pub fn new(
        bases: Vec<Vec<Cell>>,
        boundary: BTreeMap<Cell, Chain>,
        augmentation: BTreeMap<Cell, i64>,
    ) -> Result<Self> {
        let mut dims = HashMap::new();
        let mut sorted = Vec::with_capacity(bases.len());
        for (d, cells) in bases.into_iter().enumerate() {
            let mut cells = cells;
            cells.sort();
            for c in &cells {
                if dims.insert(c.clone(), d).is_some() {
                    return Err(Error::Integrity(format!("basis label {c} registered twice")));
                }
            }
            sorted.push(cells);
        }
        while sorted.last().is_some_and(|v| v.is_empty()) {
            sorted.pop();
        }
        for c in boundary.keys().chain(augmentation.keys()) {
            if !dims.contains_key(c) {
                return Err(Error::Integrity(format!("table entry for unregistered label {c}")));
            }
        }
        let mut boundary = boundary;
        for (c, &d) in &dims {
            if d > 0 {
                boundary.entry(c.clone()).or_insert_with(|| Chain::zero(d - 1));
            }
        }
        let augmentation = augmentation.into_iter().filter(|(_, k)| *k != 0).collect();
        Ok(DirectedComplex { bases: sorted, boundary, augmentation, dims })
    }

    pub fn empty() -> Self {
        DirectedComplex::new(Vec::new(), BTreeMap::new(), BTreeMap::new()).expect("empty complex")
    }

    /// Number of the highest non-empty dimension, or `None` for the empty
    /// complex.
    pub fn top_dim(&self) -> Option<usize> {
        self.bases.len().checked_sub(1)
    }

    pub fn basis(&self, dim: usize) -> &[Cell] {
        self.bases.get(dim).map(Vec::as_slice).unwrap_or(&[])
    }

    /// All basis elements, by dimension then canonical cell order.
    pub fn basis_elements(&self) -> impl Iterator<Item = BasisElement> + '_ {
        self.bases
            .iter()
            .enumerate()
            .flat_map(|(d, cells)| cells.iter().map(move |c| BasisElement::new(d, c.clone())))
    }

    pub fn basis_len(&self) -> usize {
        self.bases.iter().map(Vec::len).sum()
    }

    pub fn dim_of(&self, cell: &Cell) -> Option<usize> {
        self.dims.get(cell).copied()
    }

    pub fn contains(&self, b: &BasisElement) -> bool {
        self.dim_of(&b.cell) == Some(b.dim)
    }

    /// The boundary of a single positive-dimensional basis element, as stored.
    pub fn boundary_of(&self, cell: &Cell) -> Option<&Chain> {
        self.boundary.get(cell)
    }

    pub fn augmentation_of(&self, cell: &Cell) -> i64 {
        self.augmentation.get(cell).copied().unwrap_or(0)
    }

    pub(crate) fn boundary_table(&self) -> &BTreeMap<Cell, Chain> {
        &self.boundary
    }

    fn check_chain(&self, c: &Chain) -> Result<()> {
        for cell in c.support() {
            match self.dim_of(cell) {
                Some(d) if d == c.dim() => {}
                Some(d) => {
                    return Err(Error::Integrity(format!(
                        "{cell} has dimension {d}, chain has dimension {}",
                        c.dim()
                    )))
                }
                None => return Err(Error::Integrity(format!("{cell} is not a basis element"))),
            }
        }
        Ok(())
    }

    /// The linear extension of the boundary table.
    pub fn boundary(&self, c: &Chain) -> Result<Chain> {
        if c.dim() == 0 {
            return Err(Error::Domain("the boundary of a 0-dimensional chain is undefined".into()));
        }
        self.check_chain(c)?;
        let mut out = Chain::zero(c.dim() - 1);
        for (cell, k) in c.terms() {
            out.add_scaled(&self.boundary[cell], k);
        }
        Ok(out)
    }

    /// `ε` of a 0-dimensional chain.
    pub fn augment(&self, c: &Chain) -> Result<i64> {
        if c.dim() != 0 {
            return Err(Error::Domain(format!("augmentation of a {}-dimensional chain", c.dim())));
        }
        self.check_chain(c)?;
        Ok(c.terms().map(|(cell, k)| k * self.augmentation_of(cell)).sum())
    }

    /// `(∂⁺c, ∂⁻c)`: the positive and negative parts of `∂c`.
    pub fn split_boundary(&self, c: &Chain) -> Result<(Chain, Chain)> {
        let b = self.boundary(c)?;
        Ok((b.signed_part(Sign::Plus), b.signed_part(Sign::Minus)))
    }

    pub fn signed_boundary(&self, c: &Chain, sign: Sign) -> Result<Chain> {
        Ok(self.boundary(c)?.signed_part(sign))
    }

    /// `(∂^α)^r c`.
    pub fn iterated_sign_boundary(&self, c: &Chain, sign: Sign, r: usize) -> Result<Chain> {
        if r > c.dim() {
            return Err(Error::Domain(format!(
                "cannot take {r} signed boundaries of a {}-dimensional chain",
                c.dim()
            )));
        }
        let mut cur = c.clone();
        for _ in 0..r {
            cur = self.signed_boundary(&cur, sign)?;
        }
        Ok(cur)
    }

    /// Reports every violation of grading, `∂∂ = 0` and `ε∂ = 0`.
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        for (cell, chain) in &self.boundary {
            let d = self.dims[cell];
            for term in chain.support() {
                match self.dim_of(term) {
                    None => report.push(
                        IssueKind::Unregistered,
                        cell,
                        format!("boundary mentions unregistered {term}"),
                    ),
                    Some(td) if td + 1 != d || chain.dim() + 1 != d => report.push(
                        IssueKind::Grading,
                        cell,
                        format!("{d}-dimensional element has boundary term {term} of dimension {td}"),
                    ),
                    _ => {}
                }
            }
        }
        if report.has(IssueKind::Unregistered) || report.has(IssueKind::Grading) {
            return report;
        }
        for (cell, chain) in &self.boundary {
            if chain.dim() >= 1 {
                let bb = self.boundary(chain).expect("graded boundary");
                if !bb.is_zero() {
                    report.push(IssueKind::BoundaryOfBoundary, cell, format!("∂∂ = {bb}"));
                }
            } else {
                let e = self.augment(chain).expect("graded boundary");
                if e != 0 {
                    report.push(IssueKind::Augmentation, cell, format!("ε∂ = {e}"));
                }
            }
        }
        for (cell, &k) in &self.augmentation {
            if self.dims[cell] != 0 {
                report.push(IssueKind::Augmentation, cell, format!("augmentation {k} on a positive-dimensional element"));
            }
        }
        report
    }

    /// `ε(∂⁻)^p a = ε(∂⁺)^p a = 1` for every basis element `a` of dimension `p`.
    pub fn is_unital(&self) -> bool {
        self.non_unital_elements().is_empty()
    }

    /// Basis elements `a` of dimension `p` with `ε(∂^α)^p a ≠ 1` for some sign.
    pub fn non_unital_elements(&self) -> Vec<BasisElement> {
        self.basis_elements()
            .filter(|b| {
                let a = Chain::from_basis(b);
                !Sign::BOTH.iter().all(|&s| {
                    self.iterated_sign_boundary(&a, s, b.dim)
                        .and_then(|c| self.augment(&c))
                        .is_ok_and(|e| e == 1)
                })
            })
            .collect()
    }

    /// Pairs `a < a'` where `a` is a term of `(∂⁻)^r b` and `a'` a term of
    /// `(∂⁺)^r b` for some basis element `b` and `r > 0`.
    pub fn precedence_relation(&self) -> Result<BTreeSet<(BasisElement, BasisElement)>> {
        let mut rel = BTreeSet::new();
        for b in self.basis_elements() {
            let mut minus = Chain::from_basis(&b);
            let mut plus = minus.clone();
            for _ in 1..=b.dim {
                minus = self.signed_boundary(&minus, Sign::Minus)?;
                plus = self.signed_boundary(&plus, Sign::Plus)?;
                for (lo, _) in minus.basis_terms() {
                    for (hi, _) in plus.basis_terms() {
                        rel.insert((lo.clone(), hi));
                    }
                }
            }
        }
        Ok(rel)
    }

    /// Decides whether the transitive closure of `<` is a strict partial order,
    /// returning a witness cycle when it is not.
    pub fn loop_freeness(&self) -> Result<LoopFreeness> {
        let relation = self.precedence_relation()?;
        let witness = find_cycle(&relation);
        Ok(LoopFreeness { relation, witness })
    }

    pub fn is_loop_free(&self) -> bool {
        self.loop_freeness().is_ok_and(|l| l.is_loop_free())
    }

    /// The subcomplex spanned by the basis elements accepted by `keep`.
    ///
    /// Fails if some kept element has a boundary term that is not kept.
    pub fn subcomplex(&self, keep: impl Fn(&BasisElement) -> bool) -> Result<DirectedComplex> {
        let mut bases = vec![Vec::new(); self.bases.len()];
        let mut boundary = BTreeMap::new();
        let mut augmentation = BTreeMap::new();
        for b in self.basis_elements().filter(|b| keep(b)) {
            if b.dim > 0 {
                let db = &self.boundary[&b.cell];
                for (t, _) in db.basis_terms() {
                    if !keep(&t) {
                        return Err(Error::Integrity(format!(
                            "subcomplex keeps {b} but not its boundary term {t}"
                        )));
                    }
                }
                boundary.insert(b.cell.clone(), db.clone());
            } else {
                augmentation.insert(b.cell.clone(), self.augmentation_of(&b.cell));
            }
            bases[b.dim].push(b.cell);
        }
        DirectedComplex::new(bases, boundary, augmentation)
    }

    /// A copy with extra basis elements adjoined.
    pub fn extend(&self, cells: Vec<(BasisElement, Chain)>) -> Result<DirectedComplex> {
        let mut bases = self.bases.clone();
        let mut boundary = self.boundary.clone();
        for (b, db) in cells {
            if bases.len() <= b.dim {
                bases.resize(b.dim + 1, Vec::new());
            }
            bases[b.dim].push(b.cell.clone());
            if b.dim > 0 {
                boundary.insert(b.cell, db);
            }
        }
        DirectedComplex::new(bases, boundary, self.augmentation.clone())
    }
}

fn find_cycle(relation: &BTreeSet<(BasisElement, BasisElement)>) -> Option<Vec<BasisElement>> {
    let graph: DiGraphMap<&BasisElement, ()> = relation.iter().map(|(a, b)| (a, b)).collect();
    let start = toposort(&graph, None).err()?.node_id();
    let (_, path) = graph
        .neighbors(start)
        .filter_map(|next| astar(&graph, next, |n| n == start, |_| 1, |_| 0))
        .min_by_key(|(len, _)| *len)?;
    Some(std::iter::once(start).chain(path).cloned().collect())
}
