use std::collections::BTreeMap;

use super::chain::{BasisElement, Cell, Chain};
use super::complex::{DirectedComplex, IssueKind, ValidationReport};
use crate::{Error, Result};

/// A basis-to-chain map between free augmented directed complexes.
///
/// Admissible morphisms commute with `∂`, preserve `ε` and send every basis
/// element to a sum of basis elements; [`ComplexMorphism::validate`] reports
/// which of these fail.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexMorphism {
    source: DirectedComplex,
    target: DirectedComplex,
    image: BTreeMap<Cell, Chain>,
}

impl ComplexMorphism {
    /// Builds a morphism from images of source basis elements. Missing images
    /// are zero.
    pub fn new(
        source: DirectedComplex,
        target: DirectedComplex,
        image: BTreeMap<Cell, Chain>,
    ) -> Result<Self> {
        for cell in image.keys() {
            if source.dim_of(cell).is_none() {
                return Err(Error::Integrity(format!("image given for {cell}, not in the source")));
            }
        }
        let mut image = image;
        for b in source.basis_elements() {
            image.entry(b.cell).or_insert_with(|| Chain::zero(b.dim));
        }
        Ok(ComplexMorphism { source, target, image })
    }

    /// Builds a morphism from a function on source basis elements.
    pub fn from_fn(
        source: DirectedComplex,
        target: DirectedComplex,
        f: impl Fn(&BasisElement) -> Chain,
    ) -> Result<Self> {
        let image = source.basis_elements().map(|b| (b.cell.clone(), f(&b))).collect();
        ComplexMorphism::new(source, target, image)
    }

    pub fn identity(k: &DirectedComplex) -> Self {
        ComplexMorphism::from_fn(k.clone(), k.clone(), Chain::from_basis).expect("identity")
    }

    /// The inclusion of a subcomplex (matching labels).
    pub fn inclusion(sub: &DirectedComplex, sup: &DirectedComplex) -> Result<Self> {
        for b in sub.basis_elements() {
            if !sup.contains(&b) {
                return Err(Error::Integrity(format!("{b} is not in the ambient complex")));
            }
        }
        ComplexMorphism::from_fn(sub.clone(), sup.clone(), Chain::from_basis)
    }

    pub fn source(&self) -> &DirectedComplex {
        &self.source
    }

    pub fn target(&self) -> &DirectedComplex {
        &self.target
    }

    pub fn image_of(&self, cell: &Cell) -> Option<&Chain> {
        self.image.get(cell)
    }

    pub(crate) fn image_table(&self) -> &BTreeMap<Cell, Chain> {
        &self.image
    }

    /// Linear extension to chains of the source.
    pub fn apply(&self, c: &Chain) -> Result<Chain> {
        let mut out = Chain::zero(c.dim());
        for (cell, k) in c.terms() {
            let img = self
                .image
                .get(cell)
                .filter(|_| self.source.dim_of(cell) == Some(c.dim()))
                .ok_or_else(|| Error::Integrity(format!("{cell} is not a source basis element")))?;
            out.add_scaled(img, k);
        }
        Ok(out)
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &ComplexMorphism) -> Result<ComplexMorphism> {
        if first.target.basis_elements().ne(self.source.basis_elements()) {
            return Err(Error::Domain("composing morphisms with mismatched complexes".into()));
        }
        let image = first
            .image
            .iter()
            .map(|(cell, c)| Ok((cell.clone(), self.apply(c)?)))
            .collect::<Result<_>>()?;
        ComplexMorphism::new(first.source.clone(), self.target.clone(), image)
    }

    /// Same source basis, same target basis and the same images.
    pub fn same_map(&self, other: &ComplexMorphism) -> bool {
        self.source.basis_elements().eq(other.source.basis_elements())
            && self.target.basis_elements().eq(other.target.basis_elements())
            && self.image == other.image
    }

    /// Reports chain-map failures, augmentation failures and images that are
    /// not sums of basis elements.
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        for b in self.source.basis_elements() {
            let img = &self.image[&b.cell];
            if img.dim() != b.dim && !img.is_zero() {
                report.push(IssueKind::Grading, &b, format!("image {img} has dimension {}", img.dim()));
                continue;
            }
            if img.support().any(|c| self.target.dim_of(c) != Some(b.dim)) {
                report.push(IssueKind::Unregistered, &b, format!("image {img} leaves the target"));
                continue;
            }
            if !img.is_sum_of_basis() {
                report.push(IssueKind::NotSumOfBasis, &b, format!("image {img} is not a sum of basis elements"));
            }
            if b.dim == 0 {
                let (Ok(src), Ok(tgt)) = (self.source.augment(&Chain::from_basis(&b)), self.target.augment(img))
                else {
                    continue;
                };
                if src != tgt {
                    report.push(IssueKind::Augmentation, &b, format!("ε changes from {src} to {tgt}"));
                }
            } else {
                let lhs = self.source.boundary(&Chain::from_basis(&b)).and_then(|db| self.apply(&db));
                let rhs = self.target.boundary(&img.clone().with_dim(b.dim));
                match (lhs, rhs) {
                    (Ok(l), Ok(r)) if l == r => {}
                    (Ok(l), Ok(r)) => {
                        report.push(IssueKind::ChainMap, &b, format!("f∂ = {l} but ∂f = {r}"))
                    }
                    (l, r) => report.push(
                        IssueKind::ChainMap,
                        &b,
                        format!("cannot compare f∂ and ∂f: {:?} / {:?}", l.err(), r.err()),
                    ),
                }
            }
        }
        report
    }
}

impl Chain {
    pub(crate) fn with_dim(mut self, dim: usize) -> Chain {
        if self.is_zero() {
            self = Chain::zero(dim);
        }
        self
    }
}
