//! ω-functors between tabulated ω-categories, determined by atom images.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::adc::{BasisElement, ComplexMorphism};
use crate::{Error, Result, Sign};

use super::{Derivation, NuElement, OmegaTable};

/// An ω-functor tabulated on every element of its source.
#[derive(Clone, Debug)]
pub struct FunctorTable {
    source: Arc<OmegaTable>,
    target: Arc<OmegaTable>,
    images: Vec<usize>,
}

impl PartialEq for FunctorTable {
    fn eq(&self, other: &Self) -> bool {
        self.images == other.images
            && Arc::ptr_eq(&self.source, &other.source)
            && Arc::ptr_eq(&self.target, &other.target)
    }
}

impl Eq for FunctorTable {}

impl FunctorTable {
    /// Wraps a precomputed image table; the caller vouches for functoriality.
    pub(crate) fn from_images_unchecked(
        source: Arc<OmegaTable>,
        target: Arc<OmegaTable>,
        images: Vec<usize>,
    ) -> Self {
        debug_assert_eq!(images.len(), source.len());
        FunctorTable { source, target, images }
    }

    pub fn identity(table: &Arc<OmegaTable>) -> Self {
        FunctorTable { source: table.clone(), target: table.clone(), images: (0..table.len()).collect() }
    }

    pub fn source(&self) -> &Arc<OmegaTable> {
        &self.source
    }

    pub fn target(&self) -> &Arc<OmegaTable> {
        &self.target
    }

    /// Image indices, one per source element.
    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn image(&self, i: usize) -> usize {
        self.images[i]
    }

    /// Image index of every atom of the source.
    pub fn atom_images(&self) -> BTreeMap<BasisElement, usize> {
        self.source.atoms().map(|(b, i)| (b.clone(), self.images[i])).collect()
    }

    /// The tabulated image of `x`.
    pub fn evaluate(&self, x: &NuElement) -> Result<NuElement> {
        let i = self
            .source
            .index_of(x)
            .ok_or_else(|| Error::NotTabulated(format!("{x} is not an element of the source")))?;
        Ok(self.target.element(self.images[i]).clone())
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &FunctorTable) -> Result<FunctorTable> {
        if !Arc::ptr_eq(&first.target, &self.source) {
            return Err(Error::Domain("composing functors through different tables".into()));
        }
        Ok(FunctorTable {
            source: first.source.clone(),
            target: self.target.clone(),
            images: first.images.iter().map(|&i| self.images[i]).collect(),
        })
    }
}

/// `evaluate(F, x)`.
pub fn evaluate(f: &FunctorTable, x: &NuElement) -> Result<NuElement> {
    f.evaluate(x)
}

/// Propagates images along the recorded derivations of `source`, filling only
/// entries that are still `None` and whose derivation is available. Elements
/// of dimension above `max_dim` are skipped.
pub(crate) fn propagate(
    source: &OmegaTable,
    target: &OmegaTable,
    images: &mut [Option<usize>],
    max_dim: usize,
) -> Result<()> {
    for &u in source.derivation_order() {
        if images[u].is_some() || source.dim(u) > max_dim {
            continue;
        }
        images[u] = match source.derivation(u) {
            Derivation::Atom(b) => {
                return Err(Error::Inconsistency(format!("no image assigned to the atom of {b}")))
            }
            Derivation::Boundary { m, sign, of } => images[*of].map(|g| target.d(*m, *sign, g)),
            Derivation::Composite { m, left, right } => match (images[*left], images[*right]) {
                (Some(a), Some(b)) => Some(target.compose(*m, a, b).ok_or_else(|| {
                    Error::Inconsistency(format!(
                        "images of the operands of element #{u} are not {m}-composable in the target"
                    ))
                })?),
                _ => None,
            },
        };
    }
    Ok(())
}

/// Checks that `images` commutes with every `d_m^α` and every defined `#_m`
/// among source elements of dimension at most `max_dim`.
pub(crate) fn functor_violation(
    source: &OmegaTable,
    target: &OmegaTable,
    images: &[usize],
    max_dim: usize,
) -> Option<String> {
    let levels = source.top_dim().max(target.top_dim());
    for u in (0..source.len()).filter(|&u| source.dim(u) <= max_dim) {
        for m in 0..levels {
            for s in Sign::BOTH {
                let lhs = images[source.d(m, s, u)];
                let rhs = target.d(m, s, images[u]);
                if lhs != rhs {
                    return Some(format!(
                        "element {}: image of d_{m}^{s} is #{lhs} but d_{m}^{s} of the image is #{rhs}",
                        source.element(u)
                    ));
                }
            }
        }
    }
    for m in 0..source.top_dim() {
        for (a, b, c) in source.composites(m) {
            if source.dim(c) > max_dim {
                continue;
            }
            if target.compose(m, images[a], images[b]) != Some(images[c]) {
                return Some(format!(
                    "element {}: images of its #_{m} factors do not compose to its image",
                    source.element(c)
                ));
            }
        }
    }
    None
}

/// The unique ω-functor extending an assignment of target elements to the
/// atoms of `source`, or a report naming the element where propagation
/// breaks down.
pub fn functor_from_atoms(
    source: &Arc<OmegaTable>,
    target: &Arc<OmegaTable>,
    assignment: &BTreeMap<BasisElement, usize>,
) -> Result<FunctorTable> {
    let mut images = vec![None; source.len()];
    for (b, i) in source.atoms() {
        let g = assignment
            .get(b)
            .copied()
            .ok_or_else(|| Error::Inconsistency(format!("no image assigned to the atom of {b}")))?;
        if g >= target.len() {
            return Err(Error::Inconsistency(format!("image #{g} of {b} is not a target element")));
        }
        images[i] = Some(g);
    }
    propagate(source, target, &mut images, usize::MAX)?;
    let images: Vec<usize> = images
        .into_iter()
        .enumerate()
        .map(|(u, g)| g.ok_or_else(|| Error::Inconsistency(format!("element #{u} was never derived"))))
        .collect::<Result<_>>()?;
    if let Some(msg) = functor_violation(source, target, &images, usize::MAX) {
        return Err(Error::Inconsistency(msg));
    }
    Ok(FunctorTable { source: source.clone(), target: target.clone(), images })
}

/// The index map `νf : source → target` induced by a complex morphism.
pub fn induced_index_map(f: &ComplexMorphism, source: &OmegaTable, target: &OmegaTable) -> Result<Vec<usize>> {
    source
        .elements()
        .iter()
        .map(|x| {
            let y = x.map(f)?;
            target
                .index_of(&y)
                .ok_or_else(|| Error::NotTabulated(format!("{y} is missing from the target table")))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::omega::{closure_from_atoms, DEFAULT_BUDGET};
    use crate::simplex::{delta, face_map};

    fn oriental(n: usize) -> Arc<OmegaTable> {
        Arc::new(closure_from_atoms(&delta(n), n, DEFAULT_BUDGET).unwrap())
    }

    #[test]
    fn identity_from_atoms() {
        let t = oriental(2);
        let assignment = t.atoms().map(|(b, i)| (b.clone(), i)).collect();
        assert_eq!(functor_from_atoms(&t, &t, &assignment).unwrap(), FunctorTable::identity(&t));
    }

    #[test]
    fn constant_functor_to_a_vertex() {
        let (s, c) = (oriental(2), oriental(1));
        let v = c.atom_index(&BasisElement::simplex(&[0])).unwrap();
        let assignment = s.atoms().map(|(b, _)| (b.clone(), v)).collect();
        let f = functor_from_atoms(&s, &c, &assignment).unwrap();
        assert!(f.images().iter().all(|&g| g == v));
    }

    #[test]
    fn inconsistent_assignment_is_rejected() {
        let (s, c) = (oriental(1), oriental(1));
        let at = |t: &[u32]| c.atom_index(&BasisElement::simplex(t)).unwrap();
        // the edge goes to the vertex [1] while its source goes to [0]
        let assignment = [(BasisElement::simplex(&[0]), at(&[0])), (BasisElement::simplex(&[1]), at(&[1])), (BasisElement::simplex(&[0, 1]), at(&[1]))]
            .into_iter()
            .collect();
        assert!(matches!(functor_from_atoms(&s, &c, &assignment), Err(Error::Inconsistency(_))));
        let missing = BTreeMap::new();
        assert!(matches!(functor_from_atoms(&s, &c, &missing), Err(Error::Inconsistency(_))));
    }

    #[test]
    fn induced_maps_agree_with_atom_extension() {
        let (s, t) = (oriental(1), oriental(2));
        let f = face_map(2, 1).unwrap();
        let images = induced_index_map(&f, &s, &t).unwrap();
        let assignment = s
            .atoms()
            .map(|(b, i)| (b.clone(), t.index_of(&s.element(i).map(&f).unwrap()).unwrap()))
            .collect();
        assert_eq!(functor_from_atoms(&s, &t, &assignment).unwrap().images(), &images[..]);
        assert!(induced_index_map(&f, &t, &s).is_err());
    }
}
