//! Nerves of tabulated ω-categories: elements, simplicial operators,
//! thinness, horns and the closed-form thin fillers obtained through the
//! pair-of-faces complexes `V_n^k`.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::adc::BasisElement;
use crate::omega::{
    closure_from_atoms, functor_from_atoms, functor_violation, induced_index_map, propagate, FunctorTable,
    OmegaTable, DEFAULT_BUDGET,
};
use crate::simplex::{degeneracy_map, delta, face_map, pi, vee_complex};
use crate::{Error, Result, Sign};

/// Tables for `νV_n^k` together with the inclusion into `νΔ_n` and the
/// retraction `νΠ_n^k`, both as index maps.
#[derive(Debug)]
pub struct VeeTables {
    pub n: usize,
    pub k: usize,
    pub table: Arc<OmegaTable>,
    pub inclusion: Vec<usize>,
    pub retraction: Vec<usize>,
}

/// The orientals `νΔ_0, …, νΔ_D` with face, degeneracy and retraction maps
/// between them.
#[derive(Debug)]
pub struct Orientals {
    simplices: Vec<Arc<OmegaTable>>,
    faces: Vec<Vec<Vec<usize>>>,
    degeneracies: Vec<Vec<Vec<usize>>>,
    vees: BTreeMap<(usize, usize), VeeTables>,
}

impl Orientals {
    pub fn new(max_dim: usize) -> Result<Self> {
        let simplices: Vec<Arc<OmegaTable>> = (0..=max_dim)
            .map(|n| closure_from_atoms(&delta(n), n, DEFAULT_BUDGET).map(Arc::new))
            .collect::<Result<_>>()?;
        let mut faces = vec![Vec::new()];
        for n in 1..=max_dim {
            faces.push(
                (0..=n)
                    .map(|i| induced_index_map(&face_map(n, i)?, &simplices[n - 1], &simplices[n]))
                    .collect::<Result<_>>()?,
            );
        }
        let degeneracies = (0..max_dim)
            .map(|n| {
                (0..=n)
                    .map(|i| induced_index_map(&degeneracy_map(n, i)?, &simplices[n + 1], &simplices[n]))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let mut vees = BTreeMap::new();
        for (n, simplex) in simplices.iter().enumerate().skip(2) {
            for k in 1..n {
                let vee = vee_complex(n, k)?;
                let table = Arc::new(closure_from_atoms(&vee.complex, n, DEFAULT_BUDGET)?);
                let inclusion = induced_index_map(&vee.into_simplex, &table, simplex)?;
                let retraction = induced_index_map(&pi(n, k)?.full, simplex, &table)?;
                vees.insert((n, k), VeeTables { n, k, table, inclusion, retraction });
            }
        }
        Ok(Orientals { simplices, faces, degeneracies, vees })
    }

    pub fn max_dim(&self) -> usize {
        self.simplices.len() - 1
    }

    /// `νΔ_n`.
    pub fn simplex(&self, n: usize) -> Result<&Arc<OmegaTable>> {
        self.simplices
            .get(n)
            .ok_or_else(|| Error::NotTabulated(format!("νΔ_{n} is beyond the tabulated dimension {}", self.max_dim())))
    }

    /// `ν∂_i^∨ : νΔ_{n−1} → νΔ_n` as an index map.
    pub fn face_map(&self, n: usize, i: usize) -> Result<&[usize]> {
        self.faces
            .get(n)
            .and_then(|f| f.get(i))
            .map(Vec::as_slice)
            .ok_or_else(|| Error::IndexOutOfRange(format!("face ∂_{i} on dimension {n}")))
    }

    /// `νε_i^∨ : νΔ_{n+1} → νΔ_n` as an index map.
    pub fn degeneracy_map(&self, n: usize, i: usize) -> Result<&[usize]> {
        self.degeneracies
            .get(n)
            .and_then(|f| f.get(i))
            .map(Vec::as_slice)
            .ok_or_else(|| Error::IndexOutOfRange(format!("degeneracy ε_{i} on dimension {n}")))
    }

    pub fn vee(&self, n: usize, k: usize) -> Result<&VeeTables> {
        self.vees.get(&(n, k)).ok_or_else(|| Error::UnsupportedHorn(format!("no V_{n}^{k} (need 0 < k < n ≤ {})", self.max_dim())))
    }
}

/// An element of `N_n C = Hom(νΔ_n, C)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NerveElement {
    dim: usize,
    table: FunctorTable,
}

impl NerveElement {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn table(&self) -> &FunctorTable {
        &self.table
    }

    pub fn images(&self) -> &[usize] {
        self.table.images()
    }

    /// Target index of `x⟨a⟩` for every basis element `a` of `Δ_n`.
    pub fn atom_images(&self) -> BTreeMap<BasisElement, usize> {
        self.table.atom_images()
    }
}

/// An `(n−1)`-dimensional `k`-horn `(z_0, …, ẑ_k, …, z_n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NerveHorn {
    pub n: usize,
    pub k: usize,
    faces: Vec<Option<NerveElement>>,
}

impl NerveHorn {
    /// `z_i` for `i ≠ k`.
    pub fn face(&self, i: usize) -> Option<&NerveElement> {
        self.faces.get(i).and_then(Option::as_ref)
    }

    pub fn faces(&self) -> impl Iterator<Item = (usize, &NerveElement)> + '_ {
        self.faces.iter().enumerate().filter_map(|(i, z)| z.as_ref().map(|z| (i, z)))
    }
}

/// The nerve of a tabulated ω-category, truncated at `max_dim`.
#[derive(Debug)]
pub struct Nerve {
    target: Arc<OmegaTable>,
    orientals: Arc<Orientals>,
    elements: Vec<Vec<NerveElement>>,
    index: Vec<HashMap<Vec<usize>, usize>>,
}

/// `Hom(νΔ_n, C)` for all `n ≤ max_dim`.
pub fn nerve_enumerate(target: Arc<OmegaTable>, max_dim: usize) -> Result<Nerve> {
    let orientals = Arc::new(Orientals::new(max_dim)?);
    Nerve::enumerate(target, orientals, max_dim, DEFAULT_BUDGET)
}

impl Nerve {
    /// Enumerates the nerve with explicitly shared oriental tables.
    ///
    /// Atom images are chosen one dimension at a time; before the
    /// `p`-dimensional atoms are assigned, images of all lower elements are
    /// propagated and checked, and each `p`-atom may only go to elements whose
    /// `(p−1)`-boundaries match the images of its own.
    pub fn enumerate(target: Arc<OmegaTable>, orientals: Arc<Orientals>, max_dim: usize, budget: usize) -> Result<Nerve> {
        let mut elements = Vec::new();
        let mut index = Vec::new();
        for n in 0..=max_dim {
            let source = orientals.simplex(n)?.clone();
            let found = enumerate_dim(&source, &target, budget)?;
            let els: Vec<NerveElement> = found
                .into_iter()
                .map(|images| NerveElement {
                    dim: n,
                    table: FunctorTable::from_images_unchecked(source.clone(), target.clone(), images),
                })
                .collect();
            index.push(els.iter().enumerate().map(|(i, x)| (x.images().to_vec(), i)).collect());
            elements.push(els);
        }
        Ok(Nerve { target, orientals, elements, index })
    }

    pub fn target(&self) -> &Arc<OmegaTable> {
        &self.target
    }

    pub fn orientals(&self) -> &Arc<Orientals> {
        &self.orientals
    }

    pub fn max_dim(&self) -> usize {
        self.elements.len() - 1
    }

    pub fn elements(&self, n: usize) -> &[NerveElement] {
        self.elements.get(n).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn index_of(&self, x: &NerveElement) -> Option<usize> {
        self.index.get(x.dim)?.get(x.images()).copied()
    }

    /// Builds a nerve element from atom images, checking functoriality.
    pub fn element_from_atoms(&self, n: usize, assignment: &BTreeMap<BasisElement, usize>) -> Result<NerveElement> {
        let source = self.orientals.simplex(n)?;
        let table = functor_from_atoms(source, &self.target, assignment)?;
        Ok(NerveElement { dim: n, table })
    }

    fn precompose(&self, x: &NerveElement, dim: usize, map: &[usize]) -> Result<NerveElement> {
        let source = self.orientals.simplex(dim)?.clone();
        let images = map.iter().map(|&u| x.images()[u]).collect();
        Ok(NerveElement { dim, table: FunctorTable::from_images_unchecked(source, self.target.clone(), images) })
    }

    /// `∂_i x = x ∘ ν∂_i^∨`.
    pub fn face(&self, x: &NerveElement, i: usize) -> Result<NerveElement> {
        if x.dim == 0 || i > x.dim {
            return Err(Error::IndexOutOfRange(format!("∂_{i} of a {}-dimensional element", x.dim)));
        }
        self.precompose(x, x.dim - 1, self.orientals.face_map(x.dim, i)?)
    }

    /// `ε_i x = x ∘ νε_i^∨`.
    pub fn degeneracy(&self, x: &NerveElement, i: usize) -> Result<NerveElement> {
        if i > x.dim {
            return Err(Error::IndexOutOfRange(format!("ε_{i} of a {}-dimensional element", x.dim)));
        }
        self.precompose(x, x.dim + 1, self.orientals.degeneracy_map(x.dim, i)?)
    }

    /// Thinness tested on atoms: `d_{n−1}^α x⟨a⟩ = x⟨a⟩` for every basis
    /// element `a` of `Δ_n` and both signs. Atoms generate `νΔ_n`, so this is
    /// equivalent to the condition on all elements.
    pub fn is_thin(&self, x: &NerveElement) -> Result<bool> {
        if x.dim == 0 {
            return Err(Error::Domain("thinness is only defined in positive dimensions".into()));
        }
        let source = self.orientals.simplex(x.dim)?;
        Ok(source.atoms().all(|(_, u)| self.lowers(x.images()[u], x.dim - 1)))
    }

    /// Thinness tested on every element of `νΔ_n`.
    pub fn is_thin_on_all_elements(&self, x: &NerveElement) -> Result<bool> {
        if x.dim == 0 {
            return Err(Error::Domain("thinness is only defined in positive dimensions".into()));
        }
        Ok(x.images().iter().all(|&g| self.lowers(g, x.dim - 1)))
    }

    fn lowers(&self, g: usize, m: usize) -> bool {
        Sign::BOTH.iter().all(|&s| self.target.d(m, s, g) == g)
    }

    /// Validates the horn compatibilities `∂_i z_j = ∂_{j−1} z_i` (`i < j`)
    /// for faces listed in order with `z_k` omitted.
    pub fn horn_assemble(&self, n: usize, k: usize, faces: Vec<NerveElement>) -> Result<NerveHorn> {
        if n == 0 || k > n || faces.len() != n {
            return Err(Error::Horn(format!("a {}-dimensional {k}-horn has {n} faces, got {}", n.saturating_sub(1), faces.len())));
        }
        let mut slots: Vec<Option<NerveElement>> = Vec::with_capacity(n + 1);
        let mut it = faces.into_iter();
        for i in 0..=n {
            slots.push(if i == k { None } else { it.next() });
        }
        for (i, z) in slots.iter().enumerate().filter_map(|(i, z)| z.as_ref().map(|z| (i, z))) {
            if z.dim + 1 != n {
                return Err(Error::Horn(format!("z_{i} has dimension {}, expected {}", z.dim, n - 1)));
            }
        }
        for j in 0..=n {
            for i in 0..j {
                if let (Some(zi), Some(zj)) = (&slots[i], &slots[j]) {
                    if self.face(zj, i)? != self.face(zi, j - 1)? {
                        return Err(Error::Horn(format!("∂_{i} z_{j} ≠ ∂_{} z_{i}", j - 1)));
                    }
                }
            }
        }
        Ok(NerveHorn { n, k, faces: slots })
    }

    /// The `k`-horn of `x`: all codimension-one faces except `∂_k x`.
    pub fn horn_of(&self, x: &NerveElement, k: usize) -> Result<NerveHorn> {
        let faces = (0..=x.dim).filter(|&i| i != k).map(|i| self.face(x, i)).collect::<Result<Vec<_>>>()?;
        self.horn_assemble(x.dim, k, faces)
    }

    /// `∂_i x = z_i` for every `i ≠ k`.
    pub fn filler_check(&self, x: &NerveElement, h: &NerveHorn) -> Result<bool> {
        if x.dim != h.n {
            return Ok(false);
        }
        for (i, z) in h.faces() {
            if &self.face(x, i)? != z {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Reads off `y : νV_n^k → C` from the faces `z_{k−1}` and `z_{k+1}` and
    /// returns it when `y ∘ νπ_n^k` reproduces the whole horn.
    pub fn factor_through_vee(&self, h: &NerveHorn) -> Result<FunctorTable> {
        let (n, k) = (h.n, h.k);
        if k == 0 || k >= n {
            return Err(Error::UnsupportedHorn(format!("outer horn (n = {n}, k = {k})")));
        }
        let vee = self.orientals.vee(n, k)?;
        let lower = self.orientals.simplex(n - 1)?;
        let mut assignment = BTreeMap::new();
        for (b, _) in vee.table.atoms() {
            let t = b.cell.as_tuple().expect("simplex tuple");
            let j = if t.contains(&(k as u32 + 1)) { k - 1 } else { k + 1 };
            let pre: Vec<u32> = t.iter().map(|&v| if v > j as u32 { v - 1 } else { v }).collect();
            let u = lower
                .atom_index(&BasisElement::simplex(&pre))
                .ok_or_else(|| Error::Invariant(format!("{b} has no preimage under ∂_{j}")))?;
            let z = h.face(j).expect("k ± 1 faces are present");
            assignment.insert(b.clone(), z.images()[u]);
        }
        let y = functor_from_atoms(&vee.table, &self.target, &assignment)
            .map_err(|e| Error::NotComplicial(format!("faces z_{} and z_{} do not glue: {e}", k - 1, k + 1)))?;
        for (i, z) in h.faces() {
            let face = self.orientals.face_map(n, i)?;
            let reproduced = face.iter().zip(z.images()).all(|(&u, &img)| y.image(vee.retraction[u]) == img);
            if !reproduced {
                return Err(Error::NotComplicial(format!("z_{i} is not of the form y ∘ νπ_{n}^{k} ∘ ν∂_{i}^∨")));
            }
        }
        Ok(y)
    }

    /// `y ∘ νΠ_n^k`, the thin filler of a horn that factors through `νV_n^k`.
    pub fn thin_filler(&self, h: &NerveHorn) -> Result<NerveElement> {
        let y = self.factor_through_vee(h).map_err(|e| match e {
            Error::NotComplicial(msg) => Error::UnsupportedHorn(msg),
            other => other,
        })?;
        let vee = self.orientals.vee(h.n, h.k)?;
        let images = vee.retraction.iter().map(|&v| y.image(v)).collect();
        let source = self.orientals.simplex(h.n)?.clone();
        Ok(NerveElement { dim: h.n, table: FunctorTable::from_images_unchecked(source, self.target.clone(), images) })
    }

    /// Whether `x` equals `y ∘ νΠ_n^k` for its own restriction `y` to
    /// `νV_n^k`.
    pub fn is_complicial(&self, x: &NerveElement, k: usize) -> Result<bool> {
        if k == 0 || k >= x.dim {
            return Err(Error::IndexOutOfRange(format!("k-complicial needs 0 < k < n (n = {}, k = {k})", x.dim)));
        }
        let vee = self.orientals.vee(x.dim, k)?;
        let img = x.images();
        Ok(vee.retraction.iter().enumerate().all(|(u, &v)| img[u] == img[vee.inclusion[v]]))
    }

    pub fn to_json(&self) -> NerveJson {
        let dims = self
            .elements
            .iter()
            .enumerate()
            .map(|(n, els)| NerveDimJson {
                dim: n,
                elements: els
                    .iter()
                    .map(|x| x.atom_images().into_iter().map(|(b, g)| (b.to_string(), g)).collect())
                    .collect(),
                thin: els.iter().map(|x| n > 0 && self.is_thin(x).unwrap_or(false)).collect(),
            })
            .collect();
        NerveJson { dims }
    }
}

/// Nerve export: per dimension, atom label ↦ target element index, with thin
/// flags.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NerveJson {
    pub dims: Vec<NerveDimJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NerveDimJson {
    pub dim: usize,
    pub elements: Vec<BTreeMap<String, usize>>,
    pub thin: Vec<bool>,
}

fn enumerate_dim(source: &OmegaTable, target: &OmegaTable, budget: usize) -> Result<Vec<Vec<usize>>> {
    let atoms: Vec<(usize, usize)> = source.atoms().map(|(b, u)| (b.dim, u)).collect();
    // candidates by dimension bound and (d^-, d^+) at the level below
    let mut by_boundary: Vec<HashMap<(usize, usize), Vec<usize>>> = Vec::new();
    for p in 0..=source.top_dim() {
        let mut m: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
        for g in (0..target.len()).filter(|&g| target.dim(g) <= p) {
            let key = if p == 0 {
                (0, 0)
            } else {
                (target.d(p - 1, Sign::Minus, g), target.d(p - 1, Sign::Plus, g))
            };
            m.entry(key).or_default().push(g);
        }
        by_boundary.push(m);
    }
    let mut out = Vec::new();
    let images = vec![None; source.len()];
    let mut search = Search { source, target, atoms: &atoms, by_boundary: &by_boundary, out: &mut out, budget };
    search.assign(0, images)?;
    out.sort();
    Ok(out)
}

struct Search<'a> {
    source: &'a OmegaTable,
    target: &'a OmegaTable,
    atoms: &'a [(usize, usize)],
    by_boundary: &'a [HashMap<(usize, usize), Vec<usize>>],
    out: &'a mut Vec<Vec<usize>>,
    budget: usize,
}

impl Search<'_> {
    fn assign(&mut self, pos: usize, mut images: Vec<Option<usize>>) -> Result<()> {
        let level_start = pos == self.atoms.len() || pos == 0 || self.atoms[pos - 1].0 < self.atoms[pos].0;
        if level_start && pos > 0 {
            let below = self.atoms.get(pos).map_or(usize::MAX, |&(p, _)| p - 1);
            if propagate(self.source, self.target, &mut images, below).is_err() {
                return Ok(());
            }
            let settled = images.iter().enumerate().all(|(u, g)| g.is_some() || self.source.dim(u) > below);
            let filled: Vec<usize> = images.iter().map(|g| g.unwrap_or(0)).collect();
            if settled && functor_violation(self.source, self.target, &filled, below).is_some() {
                return Ok(());
            }
            if pos == self.atoms.len() {
                if !settled {
                    return Err(Error::Invariant("some source element is not derived from atoms".into()));
                }
                if self.out.len() >= self.budget {
                    return Err(Error::Budget { budget: self.budget, context: "enumerating nerve elements".into() });
                }
                self.out.push(filled);
                return Ok(());
            }
        }
        if pos == self.atoms.len() {
            // only reachable for an empty source
            return Ok(());
        }
        let (p, u) = self.atoms[pos];
        let key = if p == 0 {
            (0, 0)
        } else {
            let img = |s| images[self.source.d(p - 1, s, u)].expect("lower images propagated");
            (img(Sign::Minus), img(Sign::Plus))
        };
        let Some(cands) = self.by_boundary[p].get(&key) else {
            return Ok(());
        };
        for &g in cands {
            let mut next = images.clone();
            next[u] = Some(g);
            self.assign(pos + 1, next)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nerve_of_simplex(m: usize, max_dim: usize) -> Nerve {
        let target = Arc::new(closure_from_atoms(&delta(m), m, DEFAULT_BUDGET).unwrap());
        nerve_enumerate(target, max_dim).unwrap()
    }

    fn labelled(nerve: &Nerve, x: &NerveElement) -> Vec<String> {
        x.atom_images().values().map(|&g| nerve.target().element(g).to_string()).collect()
    }

    #[test]
    fn nerve_of_a_point_has_one_element_per_dimension() {
        let nerve = nerve_of_simplex(0, 3);
        for n in 0..=3 {
            assert_eq!(nerve.elements(n).len(), 1);
        }
        assert!(nerve.is_thin(&nerve.elements(2)[0]).unwrap());
    }

    #[test]
    fn nerve_of_an_arrow() {
        let nerve = nerve_of_simplex(1, 2);
        assert_eq!(nerve.elements(0).len(), 2);
        assert_eq!(nerve.elements(1).len(), 3);
        // 2-simplices of the nerve of the category 0 → 1: composable pairs
        assert_eq!(nerve.elements(2).len(), 4);
        let thin: Vec<&NerveElement> = nerve.elements(1).iter().filter(|x| nerve.is_thin(x).unwrap()).collect();
        assert_eq!(thin.len(), 2);
        for x in thin {
            let d = nerve.degeneracy(&nerve.face(x, 0).unwrap(), 0).unwrap();
            assert_eq!(&d, x);
        }
        assert!(nerve.is_thin(&nerve.elements(0)[0]).is_err());
    }

    #[test]
    fn thinness_on_atoms_matches_all_elements() {
        let nerve = nerve_of_simplex(2, 3);
        for n in 1..=3 {
            for x in nerve.elements(n) {
                assert_eq!(nerve.is_thin(x).unwrap(), nerve.is_thin_on_all_elements(x).unwrap());
            }
        }
    }

    #[test]
    fn faces_and_degeneracies_stay_in_the_nerve() {
        let nerve = nerve_of_simplex(2, 3);
        for n in 1..=3 {
            for x in nerve.elements(n) {
                for i in 0..=n {
                    assert!(nerve.index_of(&nerve.face(x, i).unwrap()).is_some());
                }
            }
        }
        for n in 0..3 {
            for x in nerve.elements(n) {
                for i in 0..=n {
                    let d = nerve.degeneracy(x, i).unwrap();
                    assert!(nerve.index_of(&d).is_some());
                    assert!(nerve.is_thin(&d).unwrap());
                }
            }
        }
    }

    #[test]
    fn inner_horn_in_an_arrow_nerve_has_its_thin_filler() {
        let nerve = nerve_of_simplex(1, 2);
        let arrow = nerve.elements(1).iter().find(|x| !nerve.is_thin(x).unwrap()).unwrap().clone();
        let id0 = nerve.degeneracy(&nerve.face(&arrow, 1).unwrap(), 0).unwrap();
        let h = nerve.horn_assemble(2, 1, vec![arrow.clone(), id0.clone()]).unwrap();
        let x = nerve.thin_filler(&h).unwrap();
        assert!(nerve.filler_check(&x, &h).unwrap());
        assert!(nerve.is_thin(&x).unwrap());
        assert_eq!(nerve.face(&x, 1).unwrap(), arrow);
        assert!(nerve.is_complicial(&x, 1).unwrap());
        assert_eq!(labelled(&nerve, &x).len(), 7);
    }

    #[test]
    fn incompatible_and_outer_horns_are_rejected() {
        let nerve = nerve_of_simplex(1, 2);
        let arrow = nerve.elements(1).iter().find(|x| !nerve.is_thin(x).unwrap()).unwrap().clone();
        assert!(matches!(nerve.horn_assemble(2, 1, vec![arrow.clone(), arrow.clone()]), Err(Error::Horn(_))));
        let id0 = nerve.degeneracy(&nerve.face(&arrow, 1).unwrap(), 0).unwrap();
        let outer = nerve.horn_assemble(2, 0, vec![arrow.clone(), id0]).unwrap();
        assert!(matches!(nerve.thin_filler(&outer), Err(Error::UnsupportedHorn(_))));
    }

    #[test]
    fn non_thin_two_simplex_is_not_complicial() {
        let nerve = nerve_of_simplex(2, 2);
        let top = nerve
            .elements(2)
            .iter()
            .find(|x| x.atom_images().values().any(|&g| nerve.target().dim(g) == 2))
            .unwrap();
        assert!(!nerve.is_thin(top).unwrap());
        assert!(!nerve.is_complicial(top, 1).unwrap());
        let h = nerve.horn_of(top, 1).unwrap();
        let filler = nerve.thin_filler(&h).unwrap();
        assert_ne!(&filler, top);
        assert_ne!(nerve.face(&filler, 1).unwrap(), nerve.face(top, 1).unwrap());
    }

    #[test]
    fn json_export_lists_atoms_and_thin_flags() {
        let nerve = nerve_of_simplex(1, 1);
        let json = nerve.to_json();
        assert_eq!(json.dims.len(), 2);
        assert_eq!(json.dims[1].thin.iter().filter(|&&t| t).count(), 2);
        assert_eq!(json.dims[1].elements[0].len(), 3);
    }
}
