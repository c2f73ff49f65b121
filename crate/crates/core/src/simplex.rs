//! The simplex complexes and the morphisms between them that represent faces,
//! degeneracies, horns, pairs of faces and thin fillers.

use std::collections::{BTreeMap, BTreeSet};

use crate::adc::{BasisElement, Cell, Chain, ComplexMorphism, DirectedComplex};
use crate::{Error, Result, Sign};

/// All increasing tuples in `[0, n]` of length `q + 1`, lexicographically.
pub fn simplex_tuples(n: usize, q: usize) -> Vec<Vec<u32>> {
    fn go(start: u32, n: u32, left: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for v in start..=n {
            if (n - v + 1) as usize >= left {
                cur.push(v);
                go(v + 1, n, left - 1, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    if q <= n {
        go(0, n as u32, q + 1, &mut Vec::new(), &mut out);
    }
    out
}

/// The alternating-sum boundary of a simplex tuple.
pub fn tuple_boundary(t: &[u32]) -> Chain {
    let q = t.len() - 1;
    Chain::from_terms(
        q - 1,
        (0..=q).map(|j| {
            let face: Vec<u32> = t.iter().enumerate().filter(|&(i, _)| i != j).map(|(_, &v)| v).collect();
            (Cell::Tuple(face), if j % 2 == 0 { 1 } else { -1 })
        }),
    )
}

/// The chain complex `Δ_n` of the `n`-simplex.
pub fn delta(n: usize) -> DirectedComplex {
    let bases: Vec<Vec<Cell>> =
        (0..=n).map(|q| simplex_tuples(n, q).into_iter().map(Cell::Tuple).collect()).collect();
    let mut boundary = BTreeMap::new();
    let mut augmentation = BTreeMap::new();
    for cells in &bases {
        for c in cells {
            let t = c.as_tuple().expect("tuple");
            if t.len() == 1 {
                augmentation.insert(c.clone(), 1);
            } else {
                boundary.insert(c.clone(), tuple_boundary(t));
            }
        }
    }
    DirectedComplex::new(bases, boundary, augmentation).expect("simplex complex")
}

/// `s = [0, 1, …, n]`.
pub fn top_cell(n: usize) -> Cell {
    Cell::tuple(0..=n as u32)
}

/// `t_i = [0, …, i−1, i+1, …, n]`.
pub fn codim_one_cell(n: usize, i: usize) -> Cell {
    Cell::tuple((0..=n as u32).filter(|&v| v != i as u32))
}

fn map_tuple_chain(b: &BasisElement, f: impl Fn(&[u32]) -> Option<Vec<u32>>) -> Chain {
    let t = b.cell.as_tuple().expect("simplex basis");
    match f(t) {
        Some(img) => Chain::cell(b.dim, Cell::Tuple(img)),
        None => Chain::zero(b.dim),
    }
}

/// The face operation `∂_i^∨ : Δ_{n−1} → Δ_n`, skipping vertex `i`.
pub fn face_map(n: usize, i: usize) -> Result<ComplexMorphism> {
    if n == 0 || i > n {
        return Err(Error::IndexOutOfRange(format!("face ∂_{i} needs 0 < n and i ≤ n (n = {n})")));
    }
    let i = i as u32;
    ComplexMorphism::from_fn(delta(n - 1), delta(n), |b| {
        map_tuple_chain(b, |t| Some(t.iter().map(|&v| if v >= i { v + 1 } else { v }).collect()))
    })
}

/// The degeneracy operation `ε_i^∨ : Δ_{n+1} → Δ_n`, collapsing `i + 1` onto
/// `i`; tuples containing both `i` and `i + 1` go to zero.
pub fn degeneracy_map(n: usize, i: usize) -> Result<ComplexMorphism> {
    if i > n {
        return Err(Error::IndexOutOfRange(format!("degeneracy ε_{i} needs i ≤ n (n = {n})")));
    }
    let i = i as u32;
    ComplexMorphism::from_fn(delta(n + 1), delta(n), |b| {
        map_tuple_chain(b, |t| {
            if t.contains(&i) && t.contains(&(i + 1)) {
                None
            } else {
                Some(t.iter().map(|&v| if v > i { v - 1 } else { v }).collect())
            }
        })
    })
}

/// A subcomplex of `Δ_n` with its inclusion.
#[derive(Clone, Debug)]
pub struct SubSimplex {
    pub complex: DirectedComplex,
    pub inclusion: ComplexMorphism,
}

/// The horn complex `Λ_n^k`: `Δ_n` without `t_k` and `s`.
pub fn horn_complex(n: usize, k: usize) -> Result<SubSimplex> {
    if n == 0 || k > n {
        return Err(Error::IndexOutOfRange(format!("Λ_{n}^{k} needs n > 0 and k ≤ n")));
    }
    let full = delta(n);
    let (s, tk) = (top_cell(n), codim_one_cell(n, k));
    let complex = full.subcomplex(|b| b.cell != s && b.cell != tk)?;
    let inclusion = ComplexMorphism::inclusion(&complex, &full)?;
    Ok(SubSimplex { complex, inclusion })
}

fn check_inner(n: usize, k: usize, what: &str) -> Result<()> {
    if k == 0 || k >= n {
        return Err(Error::IndexOutOfRange(format!("{what} needs 0 < k < n (n = {n}, k = {k})")));
    }
    Ok(())
}

/// `true` when the tuple omits `k − 1` or omits `k + 1`.
pub fn in_vee(t: &[u32], k: usize) -> bool {
    let (lo, hi) = (k as u32 - 1, k as u32 + 1);
    !(t.contains(&lo) && t.contains(&hi))
}

/// The pair-of-faces complex `V_n^k` with its inclusions into `Λ_n^k` and
/// `Δ_n`.
#[derive(Clone, Debug)]
pub struct VeeComplex {
    pub complex: DirectedComplex,
    pub into_horn: ComplexMorphism,
    pub into_simplex: ComplexMorphism,
}

pub fn vee_complex(n: usize, k: usize) -> Result<VeeComplex> {
    check_inner(n, k, "V_n^k")?;
    let full = delta(n);
    let complex = full.subcomplex(|b| in_vee(b.cell.as_tuple().expect("tuple"), k))?;
    let horn = horn_complex(n, k)?;
    Ok(VeeComplex {
        into_horn: ComplexMorphism::inclusion(&complex, &horn.complex)?,
        into_simplex: ComplexMorphism::inclusion(&complex, &full)?,
        complex,
    })
}

/// `Π_n^k` on a single tuple.
pub fn retract_tuple(t: &[u32], k: usize) -> Chain {
    let q = t.len() - 1;
    if in_vee(t, k) {
        return Chain::cell(q, Cell::Tuple(t.to_vec()));
    }
    let k32 = k as u32;
    if t.contains(&k32) {
        return Chain::zero(q);
    }
    let pos = t.iter().position(|&v| v == k32 - 1).expect("contains k-1");
    let mut upper = t.to_vec();
    upper[pos] = k32;
    let mut lower = t.to_vec();
    lower[pos + 1] = k32;
    Chain::from_terms(q, [(Cell::Tuple(upper), 1), (Cell::Tuple(lower), 1)])
}

/// The retraction `Π_n^k : Δ_n → V_n^k` and its restriction
/// `π_n^k : Λ_n^k → V_n^k`.
#[derive(Clone, Debug)]
pub struct Retraction {
    pub full: ComplexMorphism,
    pub horn: ComplexMorphism,
}

pub fn pi(n: usize, k: usize) -> Result<Retraction> {
    check_inner(n, k, "Π_n^k")?;
    let vee = vee_complex(n, k)?.complex;
    let f = |b: &BasisElement| retract_tuple(b.cell.as_tuple().expect("tuple"), k);
    Ok(Retraction {
        full: ComplexMorphism::from_fn(delta(n), vee.clone(), f)?,
        horn: ComplexMorphism::from_fn(horn_complex(n, k)?.complex, vee, f)?,
    })
}

pub const T_PRIME: &str = "t'";
pub const S_PRIME: &str = "s'";

/// The extension `W` of `V_n^k` by `t_k'` and `s'`, with `Π : Δ_n → W`.
#[derive(Clone, Debug)]
pub struct WComplexBundle {
    pub n: usize,
    pub k: usize,
    pub w: DirectedComplex,
    pub projection: ComplexMorphism,
    pub t_prime: BasisElement,
    pub s_prime: BasisElement,
    /// `κ = (−)^k`.
    pub kappa: Sign,
}

pub fn w_complex(n: usize, k: usize) -> Result<WComplexBundle> {
    check_inner(n, k, "W")?;
    let retraction = pi(n, k)?;
    let vee = retraction.full.target().clone();
    let t_prime = BasisElement::new(n - 1, Cell::named(T_PRIME));
    let s_prime = BasisElement::new(n, Cell::named(S_PRIME));

    let tk = Chain::cell(n - 1, codim_one_cell(n, k));
    let d_tprime = retraction.horn.apply(&delta(n).boundary(&tk)?)?;
    let t_neighbours = &Chain::cell(n - 1, codim_one_cell(n, k - 1)) + &Chain::cell(n - 1, codim_one_cell(n, k + 1));
    let kappa = Sign::parity(k);
    let sign = if kappa == Sign::Plus { 1 } else { -1 };
    let d_sprime = (&Chain::from_basis(&t_prime) - &t_neighbours).scaled(sign);

    let w = vee.extend(vec![(t_prime.clone(), d_tprime), (s_prime.clone(), d_sprime)])?;
    let (s, tk_cell) = (top_cell(n), codim_one_cell(n, k));
    let projection = ComplexMorphism::from_fn(delta(n), w.clone(), |b| {
        if b.cell == s {
            Chain::from_basis(&s_prime)
        } else if b.cell == tk_cell {
            Chain::from_basis(&t_prime)
        } else {
            retract_tuple(b.cell.as_tuple().expect("tuple"), k)
        }
    })?;
    Ok(WComplexBundle { n, k, w, projection, t_prime, s_prime, kappa })
}

/// Whether `positions` (a subtuple of `0..=last`) splits into blocks of
/// consecutive positions meeting the signed conditions. Adjacent positions
/// may or may not share a block, so every choice of cuts is tried.
fn has_block_decomposition(positions: &[usize], last: usize, sign: Sign) -> bool {
    let optional: Vec<usize> =
        (0..positions.len().saturating_sub(1)).filter(|&j| positions[j + 1] == positions[j] + 1).collect();
    for mask in 0u64..(1u64 << optional.len()) {
        let mut blocks: Vec<(usize, usize)> = Vec::new();
        let mut start = 0;
        for j in 0..positions.len() {
            let adjacent = j + 1 < positions.len() && positions[j + 1] == positions[j] + 1;
            let cut = j + 1 == positions.len()
                || !adjacent
                || optional.iter().position(|&o| o == j).is_some_and(|bit| mask & (1 << bit) != 0);
            if cut {
                blocks.push((start, j));
                start = j + 1;
            }
        }
        let even_or_final = |&(s, e): &(usize, usize)| (e - s + 1) % 2 == 0 || positions[e] == last;
        let ok = match sign {
            Sign::Plus => blocks.iter().all(even_or_final),
            Sign::Minus => {
                let (s, e) = blocks[0];
                positions[s] == 0 && (e - s + 1) % 2 == 1 && blocks[1..].iter().all(even_or_final)
            }
        };
        if ok {
            return true;
        }
    }
    false
}

/// `(∂^α)^{p−q} a` for a simplex basis element `a`, assembled from block
/// decompositions: for `−` the first block is odd and initial and the others
/// even or final; for `+` every block is even or final. A face is counted
/// once however many decompositions it has.
pub fn blocks_formula(a: &[u32], q: usize, sign: Sign) -> Result<Chain> {
    if a.is_empty() || a.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::Domain("a simplex basis element is a non-empty increasing tuple".into()));
    }
    let p = a.len() - 1;
    if q > p {
        return Err(Error::Domain(format!("q = {q} exceeds the dimension {p}")));
    }
    let mut faces = BTreeSet::new();
    for positions in simplex_tuples(p, q) {
        let positions: Vec<usize> = positions.into_iter().map(|v| v as usize).collect();
        if has_block_decomposition(&positions, p, sign) {
            faces.insert(positions.iter().map(|&i| a[i]).collect::<Vec<u32>>());
        }
    }
    Ok(Chain::from_terms(q, faces.into_iter().map(|t| (Cell::Tuple(t), 1))))
}
