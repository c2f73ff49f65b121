//! Wedges `x ∧_i y` in a finite complicial set and an exhaustive checker for
//! the complicial identities they satisfy.
//!
//! The wedge of `x, y ∈ X_m` with `∂_i x = ∂_{i+1} y` is the unique thin
//! filler of the `m`-dimensional `(i+1)`-horn
//! `(∂_0 x ∧_{i−1} ∂_0 y, …, y, ·, x, …, ∂_m x ∧_i ∂_m y)`, built bottom-up
//! from lower wedges.

use std::cell::RefCell;
use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::nerve::{Nerve, NerveElement};
use crate::stratified::{check_complicial_axioms, StratifiedSet};
use crate::{Error, Result};

type FillerCache = HashMap<(usize, usize), HashMap<Vec<usize>, Vec<usize>>>;

/// A stratified set with memoized wedges and thin-filler lookups.
#[derive(Debug)]
pub struct WedgeContext {
    set: StratifiedSet,
    fillers: RefCell<FillerCache>,
    memo: RefCell<HashMap<(usize, usize, usize, usize), usize>>,
    images: RefCell<BTreeSet<(usize, usize, usize)>>,
}

impl WedgeContext {
    /// Checks the complicial-set conditions up to the truncation dimension
    /// before accepting the set.
    pub fn new(set: StratifiedSet) -> Result<Self> {
        let report = check_complicial_axioms(&set)?;
        if let Some(v) = report.violations.first() {
            return Err(Error::ComplicialStructure(format!(
                "not a complicial set: clause ({}) fails in dimension {}: {}",
                v.clause, v.dim, v.detail
            )));
        }
        Ok(Self::unchecked(set))
    }

    /// Skips the complicial-set check; wedge computations report missing or
    /// repeated fillers as they meet them.
    pub fn unchecked(set: StratifiedSet) -> Self {
        WedgeContext {
            set,
            fillers: RefCell::new(HashMap::new()),
            memo: RefCell::new(HashMap::new()),
            images: RefCell::new(BTreeSet::new()),
        }
    }

    pub fn set(&self) -> &StratifiedSet {
        &self.set
    }

    /// Thin elements of `X_n` whose `k`-horn has the given faces.
    pub fn thin_fillers(&self, n: usize, k: usize, faces: &[usize]) -> Vec<usize> {
        let mut fillers = self.fillers.borrow_mut();
        let table = fillers.entry((n, k)).or_insert_with(|| {
            let mut t: HashMap<Vec<usize>, Vec<usize>> = HashMap::new();
            for x in (0..self.set.len(n)).filter(|&x| self.set.is_thin(n, x)) {
                t.entry(self.set.horn_of(n, x, k).faces).or_default().push(x);
            }
            t
        });
        table.get(faces).cloned().unwrap_or_default()
    }

    /// `x ∧_i y ∈ X_{m+1}` for `x, y ∈ X_m`.
    pub fn wedge(&self, m: usize, x: usize, y: usize, i: usize) -> Result<usize> {
        let set = &self.set;
        if m == 0 || i >= m {
            return Err(Error::IndexOutOfRange(format!("∧_{i} is not defined on dimension {m}")));
        }
        if m + 1 > set.max_dim() {
            return Err(Error::NotTabulated(format!("wedges of {m}-elements live beyond dimension {}", set.max_dim())));
        }
        if x >= set.len(m) || y >= set.len(m) {
            return Err(Error::IndexOutOfRange(format!("no {m}-elements {x} and {y}")));
        }
        if set.face(m, x, i) != set.face(m, y, i + 1) {
            return Err(Error::NotComposable(format!("∂_{i} x ≠ ∂_{} y for x = {x}, y = {y}", i + 1)));
        }
        if let Some(&w) = self.memo.borrow().get(&(m, x, y, i)) {
            return Ok(w);
        }
        let mut faces = Vec::with_capacity(m + 1);
        for j in 0..=m + 1 {
            let z = match j {
                _ if j < i => self.wedge(m - 1, set.face(m, x, j), set.face(m, y, j), i - 1)?,
                _ if j == i => y,
                _ if j == i + 1 => continue,
                _ if j == i + 2 => x,
                _ => self.wedge(m - 1, set.face(m, x, j - 1), set.face(m, y, j - 1), i)?,
            };
            faces.push(z);
        }
        let found = self.thin_fillers(m + 1, i + 1, &faces);
        let [w] = found[..] else {
            return Err(Error::ComplicialStructure(format!(
                "the horn defining {x} ∧_{i} {y} in dimension {m} has {} thin fillers",
                found.len()
            )));
        };
        self.memo.borrow_mut().insert((m, x, y, i), w);
        self.images.borrow_mut().insert((m + 1, w, i));
        Ok(w)
    }

    /// Whether `w ∈ X_n` has been produced as a wedge `∧_i`.
    pub fn is_wedge(&self, n: usize, w: usize, i: usize) -> bool {
        self.images.borrow().contains(&(n, w, i))
    }

    /// Computes every wedge that lands within the truncation; returns how
    /// many pairs were wedged.
    pub fn compute_all(&self) -> Result<usize> {
        let mut count = 0;
        for m in 1..self.set.max_dim() {
            for i in 0..m {
                for (x, y) in self.composable_pairs(m, i) {
                    self.wedge(m, x, y, i)?;
                    count += 1;
                }
            }
        }
        Ok(count)
    }

    /// Pairs `(x, y)` in `X_m` with `∂_i x = ∂_{i+1} y`.
    pub fn composable_pairs(&self, m: usize, i: usize) -> Vec<(usize, usize)> {
        let set = &self.set;
        let mut by_face: HashMap<usize, Vec<usize>> = HashMap::new();
        for y in 0..set.len(m) {
            by_face.entry(set.face(m, y, i + 1)).or_default().push(y);
        }
        (0..set.len(m))
            .flat_map(|x| {
                let ys = by_face.get(&set.face(m, x, i)).cloned().unwrap_or_default();
                ys.into_iter().map(move |y| (x, y))
            })
            .collect()
    }

    fn ev(&self, m: usize, x: usize, y: usize, i: usize) -> Ev {
        if m == 0 || i >= m || self.set.face(m, x, i) != self.set.face(m, y, i + 1) {
            return Err(Stop::Undefined);
        }
        if m + 1 > self.set.max_dim() {
            return Err(Stop::Beyond);
        }
        self.wedge(m, x, y, i).map_err(|e| Stop::Broken(e.to_string()))
    }

    fn degeneracy(&self, m: usize, x: usize, i: usize) -> Ev {
        if m + 1 > self.set.max_dim() {
            return Err(Stop::Beyond);
        }
        Ok(self.set.degeneracy(m, x, i))
    }
}

enum Stop {
    Undefined,
    Beyond,
    Broken(String),
}

type Ev = std::result::Result<usize, Stop>;

/// `x ∧_i y` in a nerve, computed through the closed-form thin filler
/// `y ∘ νΠ_n^k` of the same horn, with no search.
pub fn wedge_via_retraction(nerve: &Nerve, x: &NerveElement, y: &NerveElement, i: usize) -> Result<NerveElement> {
    let m = x.dim();
    if y.dim() != m || m == 0 || i >= m {
        return Err(Error::IndexOutOfRange(format!("∧_{i} of elements of dimensions {m} and {}", y.dim())));
    }
    if nerve.face(x, i)? != nerve.face(y, i + 1)? {
        return Err(Error::NotComposable(format!("∂_{i} x ≠ ∂_{} y", i + 1)));
    }
    let mut faces = Vec::with_capacity(m + 1);
    for j in 0..=m + 1 {
        let z = match j {
            _ if j < i => wedge_via_retraction(nerve, &nerve.face(x, j)?, &nerve.face(y, j)?, i - 1)?,
            _ if j == i => y.clone(),
            _ if j == i + 1 => continue,
            _ if j == i + 2 => x.clone(),
            _ => wedge_via_retraction(nerve, &nerve.face(x, j - 1)?, &nerve.face(y, j - 1)?, i)?,
        };
        faces.push(z);
    }
    let h = nerve.horn_assemble(m + 1, i + 1, faces)?;
    nerve.thin_filler(&h)
}

/// Outcome of one identity over all its instances.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomTally {
    pub axiom: u8,
    pub instances_checked: usize,
    /// Instances abandoned at the first operation that would leave the
    /// truncation.
    pub skipped_at_boundary: usize,
    /// Witness tuples: `[m, i, (j,) variables…]`, where `m` is the dimension
    /// of the first variable.
    pub violations: Vec<Vec<usize>>,
}

impl AxiomTally {
    fn record(&mut self, lhs: Ev, rhs: Ev, either_side: bool, witness: impl FnOnce() -> Vec<usize>) {
        match (lhs, rhs) {
            (Err(Stop::Undefined), Err(Stop::Undefined)) => {}
            (Err(Stop::Undefined), _) if !either_side => {}
            (Err(Stop::Broken(_)), _) | (_, Err(Stop::Broken(_))) => self.violations.push(witness()),
            (Err(Stop::Beyond), _) | (_, Err(Stop::Beyond)) => self.skipped_at_boundary += 1,
            (Ok(a), Ok(b)) => {
                self.instances_checked += 1;
                if a != b {
                    self.violations.push(witness());
                }
            }
            _ => {
                self.instances_checked += 1;
                self.violations.push(witness());
            }
        }
    }
}

/// Per-identity results, in order (1) to (7).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub max_dim: usize,
    pub axioms: Vec<AxiomTally>,
}

impl IdentityReport {
    pub fn is_empty(&self) -> bool {
        self.axioms.iter().all(|a| a.violations.is_empty())
    }

    pub fn axiom(&self, n: u8) -> &AxiomTally {
        &self.axioms[usize::from(n) - 1]
    }
}

/// Instantiates every identity over all element tuples of the truncated
/// set and compares both sides exactly.
pub fn check_identities(ctx: &WedgeContext) -> IdentityReport {
    let set = ctx.set();
    let d = set.max_dim();
    let f = |n: usize, x: usize, j: usize| set.face(n, x, j);
    let mut tallies: Vec<AxiomTally> = (1..=7).map(|axiom| AxiomTally { axiom, ..AxiomTally::default() }).collect();
    let dims = |lo: usize| lo..=d;

    // (1) faces of a wedge
    for m in dims(1) {
        for i in 0..m {
            for (x, y) in ctx.composable_pairs(m, i) {
                let t = &mut tallies[0];
                let w = match ctx.ev(m, x, y, i) {
                    Ok(w) => w,
                    Err(Stop::Beyond) => {
                        t.skipped_at_boundary += 1;
                        continue;
                    }
                    Err(_) => {
                        t.violations.push(vec![m, i, x, y]);
                        continue;
                    }
                };
                for j in (0..=m + 1).filter(|&j| j != i + 1) {
                    let expected = match j {
                        _ if j < i => ctx.ev(m - 1, f(m, x, j), f(m, y, j), i - 1),
                        _ if j == i => Ok(y),
                        _ if j == i + 2 => Ok(x),
                        _ => ctx.ev(m - 1, f(m, x, j - 1), f(m, y, j - 1), i),
                    };
                    t.record(Ok(f(m + 1, w, j)), expected, false, || vec![m, i, x, y]);
                }
            }
        }
    }

    // (2) degeneracies as wedges
    for m in dims(1) {
        for i in 0..m {
            for x in 0..set.len(m) {
                let t = &mut tallies[1];
                let lhs = ctx.degeneracy(m, x, i);
                let rhs = ctx.degeneracy(m - 1, f(m, x, i + 1), i).and_then(|e| ctx.ev(m, e, x, i));
                t.record(lhs, rhs, false, || vec![m, i, x]);
                let lhs = ctx.degeneracy(m, x, i + 1);
                let rhs = ctx.degeneracy(m - 1, f(m, x, i), i).and_then(|e| ctx.ev(m, x, e, i));
                t.record(lhs, rhs, false, || vec![m, i, x]);
            }
        }
    }

    // (3) A = b ∧_i (y ∧_i z)  ⇒  A = (∂_{i+2} b ∧_i y) ∧_{i+1} ∂_{i+1} A
    for m in dims(1) {
        for i in 0..m {
            for (y, z) in ctx.composable_pairs(m, i) {
                let yz = match ctx.ev(m, y, z, i) {
                    Ok(w) => w,
                    Err(Stop::Beyond) => {
                        tallies[2].skipped_at_boundary += 1;
                        continue;
                    }
                    Err(_) => {
                        tallies[2].violations.push(vec![m, i, y, z]);
                        continue;
                    }
                };
                for b in 0..set.len(m + 1) {
                    let a = ctx.ev(m + 1, b, yz, i);
                    let rhs = match &a {
                        Ok(a) => ctx
                            .ev(m, f(m + 1, b, i + 2), y, i)
                            .and_then(|by| ctx.ev(m + 1, by, f(m + 2, *a, i + 1), i + 1)),
                        _ => Err(Stop::Undefined),
                    };
                    tallies[2].record(a, rhs, false, || vec![m, i, b, y, z]);
                }
            }
        }
    }

    // (4) A = (x ∧_i y) ∧_{i+1} c  ⇒  A = ∂_{i+2} A ∧_i (y ∧_i ∂_i c)
    for m in dims(1) {
        for i in 0..m {
            for (x, y) in ctx.composable_pairs(m, i) {
                let xy = match ctx.ev(m, x, y, i) {
                    Ok(w) => w,
                    Err(Stop::Beyond) => {
                        tallies[3].skipped_at_boundary += 1;
                        continue;
                    }
                    Err(_) => {
                        tallies[3].violations.push(vec![m, i, x, y]);
                        continue;
                    }
                };
                for c in 0..set.len(m + 1) {
                    let a = ctx.ev(m + 1, xy, c, i + 1);
                    let rhs = match &a {
                        Ok(a) => ctx
                            .ev(m, y, f(m + 1, c, i), i)
                            .and_then(|yc| ctx.ev(m + 1, f(m + 2, *a, i + 2), yc, i)),
                        _ => Err(Stop::Undefined),
                    };
                    tallies[3].record(a, rhs, false, || vec![m, i, x, y, c]);
                }
            }
        }
    }

    // (5) [x ∧_i ∂_{i+1}(y ∧_i z)] ∧_i (y ∧_i z) = (x ∧_i y) ∧_{i+1} [∂_{i+1}(x ∧_i y) ∧_i z]
    for m in dims(1) {
        for i in 0..m {
            for x in 0..set.len(m) {
                for y in 0..set.len(m) {
                    for z in 0..set.len(m) {
                        let lhs = ctx
                            .ev(m, y, z, i)
                            .and_then(|yz| ctx.ev(m, x, f(m + 1, yz, i + 1), i).and_then(|l| ctx.ev(m + 1, l, yz, i)));
                        let rhs = ctx
                            .ev(m, x, y, i)
                            .and_then(|xy| ctx.ev(m, f(m + 1, xy, i + 1), z, i).and_then(|r| ctx.ev(m + 1, xy, r, i + 1)));
                        tallies[4].record(lhs, rhs, true, || vec![m, i, x, y, z]);
                    }
                }
            }
        }
    }

    // (6) A = ∂_{i+2}[(x ∧_{i+1} y) ∧_{i+1} (y ∧_i z)]:
    //     A ∧_i (w ∧_{i+1} ∂_i A) = (∂_{i+3} A ∧_i w) ∧_{i+2} A
    for m in dims(2) {
        for i in 0..m - 1 {
            for x in 0..set.len(m) {
                for y in 0..set.len(m) {
                    let xy = match ctx.ev(m, x, y, i + 1) {
                        Err(Stop::Undefined) => continue,
                        other => other,
                    };
                    for z in 0..set.len(m) {
                        let a = xy
                            .as_ref()
                            .map_err(copy_stop)
                            .and_then(|&xy| ctx.ev(m, y, z, i).and_then(|yz| ctx.ev(m + 1, xy, yz, i + 1)))
                            .map(|big| f(m + 2, big, i + 2));
                        let a = match a {
                            Ok(a) => a,
                            Err(Stop::Undefined) => continue,
                            Err(Stop::Beyond) => {
                                tallies[5].skipped_at_boundary += 1;
                                continue;
                            }
                            Err(Stop::Broken(_)) => {
                                tallies[5].violations.push(vec![m, i, x, y, z]);
                                continue;
                            }
                        };
                        for w in 0..set.len(m) {
                            let lhs = ctx.ev(m, w, f(m + 1, a, i), i + 1).and_then(|r| ctx.ev(m + 1, a, r, i));
                            let rhs = ctx.ev(m, f(m + 1, a, i + 3), w, i).and_then(|l| ctx.ev(m + 1, l, a, i + 2));
                            tallies[5].record(lhs, rhs, true, || vec![m, i, x, y, z, w]);
                        }
                    }
                }
            }
        }
    }

    // (7) i ≤ j − 3: (x ∧_i y) ∧_j (z ∧_i w) = (x ∧_{j−1} z) ∧_i (y ∧_{j−1} w)
    for m in dims(3) {
        for j in 3..=m {
            for i in 0..=j - 3 {
                for x in 0..set.len(m) {
                    for y in 0..set.len(m) {
                        let xy = ctx.ev(m, x, y, i);
                        for z in 0..set.len(m) {
                            let xz = ctx.ev(m, x, z, j - 1);
                            if matches!((&xy, &xz), (Err(Stop::Undefined), Err(Stop::Undefined))) {
                                continue;
                            }
                            for w in 0..set.len(m) {
                                let lhs = xy
                                    .as_ref()
                                    .map_err(copy_stop)
                                    .and_then(|&xy| ctx.ev(m, z, w, i).and_then(|zw| ctx.ev(m + 1, xy, zw, j)));
                                let rhs = xz
                                    .as_ref()
                                    .map_err(copy_stop)
                                    .and_then(|&xz| ctx.ev(m, y, w, j - 1).and_then(|yw| ctx.ev(m + 1, xz, yw, i)));
                                tallies[6].record(lhs, rhs, true, || vec![m, i, j, x, y, z, w]);
                            }
                        }
                    }
                }
            }
        }
    }

    IdentityReport { max_dim: d, axioms: tallies }
}

fn copy_stop(s: &Stop) -> Stop {
    match s {
        Stop::Undefined => Stop::Undefined,
        Stop::Beyond => Stop::Beyond,
        Stop::Broken(msg) => Stop::Broken(msg.clone()),
    }
}
