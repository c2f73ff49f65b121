//! Finite tabulated ω-categories built by closing the atoms of a complex.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use crate::adc::{BasisElement, DirectedComplex};
use crate::{Error, Result, Sign};

use super::{atom, NuElement};

/// Default element budget for [`closure_from_atoms`].
pub const DEFAULT_BUDGET: usize = 100_000;

/// How an element was first reached during closure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Derivation {
    Atom(BasisElement),
    Boundary { m: usize, sign: Sign, of: usize },
    Composite { m: usize, left: usize, right: usize },
}

/// A finite sub-ω-category of `νK` with its operation tables.
///
/// Elements are kept in canonical order. `d_m^α` is tabulated for
/// `m < top_dim`, and `#_m` for every composable pair with `m` below the
/// larger of the two operand dimensions; everything above is an identity and
/// is answered by the accessors directly.
#[derive(Clone, Debug)]
pub struct OmegaTable {
    complex: DirectedComplex,
    elements: Vec<NuElement>,
    index: HashMap<NuElement, usize>,
    dims: Vec<usize>,
    top: usize,
    d: Vec<[Vec<usize>; 2]>,
    comp: Vec<HashMap<(usize, usize), usize>>,
    atoms: BTreeMap<BasisElement, usize>,
    derivations: Vec<Derivation>,
    derivation_order: Vec<usize>,
}

impl OmegaTable {
    pub fn complex(&self) -> &DirectedComplex {
        &self.complex
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[NuElement] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &NuElement {
        &self.elements[i]
    }

    pub fn index_of(&self, x: &NuElement) -> Option<usize> {
        self.index.get(x).copied()
    }

    pub fn dim(&self, i: usize) -> usize {
        self.dims[i]
    }

    /// The largest element dimension.
    pub fn top_dim(&self) -> usize {
        self.top
    }

    /// Indices of the elements of dimension exactly `q`.
    pub fn of_dim(&self, q: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(move |&i| self.dims[i] == q)
    }

    pub fn d(&self, m: usize, sign: Sign, i: usize) -> usize {
        if m >= self.dims[i] {
            i
        } else {
            self.d[m][sign.index()][i]
        }
    }

    /// `a #_m b` when defined.
    pub fn compose(&self, m: usize, a: usize, b: usize) -> Option<usize> {
        if m >= self.dims[a].max(self.dims[b]) {
            return (a == b).then_some(a);
        }
        self.comp[m].get(&(a, b)).copied()
    }

    /// All defined composites `(a, b) ↦ a #_m b` with `m` below the operand
    /// dimensions.
    pub fn composites(&self, m: usize) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        self.comp.get(m).into_iter().flat_map(|t| t.iter().map(|(&(a, b), &c)| (a, b, c)))
    }

    pub fn atom_index(&self, b: &BasisElement) -> Option<usize> {
        self.atoms.get(b).copied()
    }

    /// Basis elements and the indices of their atoms.
    pub fn atoms(&self) -> impl Iterator<Item = (&BasisElement, usize)> + '_ {
        self.atoms.iter().map(|(b, &i)| (b, i))
    }

    pub fn derivation(&self, i: usize) -> &Derivation {
        &self.derivations[i]
    }

    /// Element indices in an order where every derivation refers only to
    /// earlier elements.
    pub fn derivation_order(&self) -> &[usize] {
        &self.derivation_order
    }

    /// The least subset containing `gens` and closed under every tabulated
    /// `d_m^α` and `#_m`.
    pub fn generated_by(&self, gens: &[usize]) -> BTreeSet<usize> {
        let mut set: BTreeSet<usize> = gens.iter().copied().collect();
        loop {
            let mut new = BTreeSet::new();
            for &x in &set {
                for m in 0..self.top {
                    for s in Sign::BOTH {
                        new.insert(self.d(m, s, x));
                    }
                }
            }
            for m in 0..self.top {
                for (a, b, c) in self.composites(m) {
                    if set.contains(&a) && set.contains(&b) {
                        new.insert(c);
                    }
                }
            }
            let before = set.len();
            set.extend(new);
            if set.len() == before {
                return set;
            }
        }
    }

    /// Checks the ω-category laws on the tabulated elements and returns
    /// descriptions of every violation found.
    pub fn law_violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        let levels = self.top + 1;
        for x in 0..self.len() {
            for m in 0..levels {
                for n in 0..levels {
                    for a in Sign::BOTH {
                        for b in Sign::BOTH {
                            if m != n && self.d(m, a, self.d(n, b, x)) != self.d(n, b, self.d(m, a, x)) {
                                out.push(format!("d_{m}^{a} d_{n}^{b} ≠ d_{n}^{b} d_{m}^{a} on #{x}"));
                            }
                        }
                    }
                }
                if self.compose(m, x, self.d(m, Sign::Plus, x)) != Some(x)
                    || self.compose(m, self.d(m, Sign::Minus, x), x) != Some(x)
                {
                    out.push(format!("unit law for #_{m} fails on #{x}"));
                }
            }
        }
        for n in 0..self.top {
            for (x, y, xy) in self.composites(n) {
                for m in (0..levels).filter(|&m| m != n) {
                    for a in Sign::BOTH {
                        let lhs = self.d(m, a, xy);
                        let rhs = self.compose(n, self.d(m, a, x), self.d(m, a, y));
                        if rhs != Some(lhs) {
                            out.push(format!("d_{m}^{a}(#{x} #_{n} #{y}) is not preserved"));
                        }
                    }
                }
                if self.d(n, Sign::Minus, xy) != self.d(n, Sign::Minus, x)
                    || self.d(n, Sign::Plus, xy) != self.d(n, Sign::Plus, y)
                {
                    out.push(format!("#{x} #_{n} #{y} has the wrong n-boundaries"));
                }
            }
        }
        // associativity
        for n in 0..self.top {
            let by_left: HashMap<usize, Vec<(usize, usize)>> =
                self.composites(n).fold(HashMap::new(), |mut acc, (a, b, c)| {
                    acc.entry(a).or_default().push((b, c));
                    acc
                });
            for (x, y, xy) in self.composites(n) {
                for &(z, yz) in by_left.get(&y).map(Vec::as_slice).unwrap_or(&[]) {
                    let lhs = self.compose(n, xy, z);
                    let rhs = self.compose(n, x, yz);
                    if lhs.is_none() || lhs != rhs {
                        out.push(format!("associativity of #_{n} fails on #{x}, #{y}, #{z}"));
                    }
                }
            }
        }
        // interchange
        for n in 0..self.top {
            let pairs: Vec<_> = self.composites(n).collect();
            for m in 0..n {
                for &(x, y, xy) in &pairs {
                    for &(z, w, zw) in &pairs {
                        if let Some(lhs) = self.compose(m, xy, zw) {
                            let rhs = self
                                .compose(m, x, z)
                                .zip(self.compose(m, y, w))
                                .and_then(|(xz, yw)| self.compose(n, xz, yw));
                            if rhs != Some(lhs) {
                                out.push(format!("interchange of #_{m}, #_{n} fails on #{x}, #{y}, #{z}, #{w}"));
                            }
                        }
                    }
                }
            }
        }
        out
    }
}

/// The least subset of `νK` containing every atom of dimension at most
/// `dim_bound` and closed under `d_m^α` and `#_m`, with operation tables.
///
/// Atoms are added one dimension at a time and each stage is closed before
/// the next begins, so derivations of `q`-dimensional elements only use
/// elements of dimension at most `q`.
pub fn closure_from_atoms(k: &DirectedComplex, dim_bound: usize, budget: usize) -> Result<OmegaTable> {
    let mut st = Closure::default();
    let top = k.top_dim().map_or(0, |t| t.min(dim_bound));
    if k.top_dim().is_some() {
        for p in 0..=top {
            for cell in k.basis(p) {
                let b = BasisElement::new(p, cell.clone());
                let x = atom(k, &b)?;
                let i = st.insert(x, Derivation::Atom(b.clone()), budget)?;
                st.atoms.insert(b, i);
            }
            st.close(budget)?;
        }
    }
    Ok(st.finish(k.clone()))
}

#[derive(Default)]
struct Closure {
    elements: Vec<NuElement>,
    index: HashMap<NuElement, usize>,
    derivations: Vec<Derivation>,
    dvals: Vec<Vec<[usize; 2]>>,
    comp: BTreeMap<(usize, usize, usize), usize>,
    atoms: BTreeMap<BasisElement, usize>,
    processed: Vec<usize>,
    next: usize,
}

impl Closure {
    fn insert(&mut self, x: NuElement, how: Derivation, budget: usize) -> Result<usize> {
        if let Some(&i) = self.index.get(&x) {
            return Ok(i);
        }
        if self.elements.len() >= budget {
            return Err(Error::Budget { budget, context: "closing atoms under d and #".into() });
        }
        let i = self.elements.len();
        self.index.insert(x.clone(), i);
        self.elements.push(x);
        self.derivations.push(how);
        self.dvals.push(Vec::new());
        Ok(i)
    }

    fn dval(&self, m: usize, sign: Sign, i: usize) -> usize {
        self.dvals[i].get(m).map_or(i, |p| p[sign.index()])
    }

    fn close(&mut self, budget: usize) -> Result<()> {
        while self.next < self.elements.len() {
            let e = self.next;
            self.next += 1;
            let dim = self.elements[e].dim();
            let mut ds = Vec::with_capacity(dim);
            for m in 0..dim {
                let mut pair = [0; 2];
                for s in Sign::BOTH {
                    let x = self.elements[e].d(s, m);
                    pair[s.index()] = self.insert(x, Derivation::Boundary { m, sign: s, of: e }, budget)?;
                }
                ds.push(pair);
            }
            self.dvals[e] = ds;
            self.processed.push(e);
            let processed = self.processed.clone();
            for &f in &processed {
                let top = dim.max(self.elements[f].dim());
                for m in 0..top {
                    for (l, r) in [(e, f), (f, e)] {
                        if self.comp.contains_key(&(m, l, r)) {
                            continue;
                        }
                        if self.dval(m, Sign::Plus, l) == self.dval(m, Sign::Minus, r) {
                            let x = self.elements[l].compose(m, &self.elements[r])?;
                            let c = self.insert(x, Derivation::Composite { m, left: l, right: r }, budget)?;
                            self.comp.insert((m, l, r), c);
                        }
                    }
                }
            }
        }
        Ok(())
    }

    fn finish(self, complex: DirectedComplex) -> OmegaTable {
        let mut order: Vec<usize> = (0..self.elements.len()).collect();
        order.sort_by(|&a, &b| self.elements[a].cmp(&self.elements[b]));
        let mut remap = vec![0; order.len()];
        for (new, &old) in order.iter().enumerate() {
            remap[old] = new;
        }
        let elements: Vec<NuElement> = order.iter().map(|&o| self.elements[o].clone()).collect();
        let dims: Vec<usize> = elements.iter().map(NuElement::dim).collect();
        let top = dims.iter().copied().max().unwrap_or(0);
        let index = elements.iter().enumerate().map(|(i, x)| (x.clone(), i)).collect();
        let mut d = vec![[vec![0; elements.len()], vec![0; elements.len()]]; top];
        for (m, table) in d.iter_mut().enumerate() {
            for s in Sign::BOTH {
                for old in 0..elements.len() {
                    table[s.index()][remap[old]] = remap[self.dval(m, s, old)];
                }
            }
        }
        let mut comp = vec![HashMap::new(); top];
        for (&(m, l, r), &c) in &self.comp {
            comp[m].insert((remap[l], remap[r]), remap[c]);
        }
        let derivations = order
            .iter()
            .map(|&o| match &self.derivations[o] {
                Derivation::Atom(b) => Derivation::Atom(b.clone()),
                Derivation::Boundary { m, sign, of } => Derivation::Boundary { m: *m, sign: *sign, of: remap[*of] },
                Derivation::Composite { m, left, right } => {
                    Derivation::Composite { m: *m, left: remap[*left], right: remap[*right] }
                }
            })
            .collect();
        OmegaTable {
            complex,
            elements,
            index,
            dims,
            top,
            d,
            comp,
            atoms: self.atoms.into_iter().map(|(b, i)| (b, remap[i])).collect(),
            derivations,
            derivation_order: (0..order.len()).map(|old| remap[old]).collect(),
        }
    }
}
