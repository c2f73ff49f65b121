//! Exhaustive enumeration of `νK` by level-wise constraint solving.

use std::collections::HashMap;

use crate::adc::{Cell, Chain, DirectedComplex};

use super::NuElement;

/// Default coefficient bound for [`enumerate_nu`].
pub const DEFAULT_COEFF_BOUND: i64 = 2;

/// All members of `νK` of dimension at most `dim_bound` whose coefficients
/// are at most `coeff_bound`, in canonical order.
///
/// Level `q` chooses `x_q^-` and `x_q^+` among the non-negative solutions of
/// `∂x = x_{q−1}^+ − x_{q−1}^-` (of `εx = 1` at level 0). Completeness beyond
/// the coefficient bound is not guaranteed for general complexes.
pub fn enumerate_nu(k: &DirectedComplex, dim_bound: usize, coeff_bound: i64) -> Vec<NuElement> {
    let mut solver = Solver { k, bound: coeff_bound.max(0), memo: HashMap::new() };
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    solver.extend(0, dim_bound, &mut prefix, &mut out);
    out.sort();
    out.dedup();
    out
}

struct Solver<'a> {
    k: &'a DirectedComplex,
    bound: i64,
    memo: HashMap<(usize, Option<Chain>), Vec<Chain>>,
}

impl Solver<'_> {
    fn extend(&mut self, q: usize, dim_bound: usize, prefix: &mut Vec<(Chain, Chain)>, out: &mut Vec<NuElement>) {
        let target = prefix.last().map(|(m, p)| p - m);
        let beyond = self.k.top_dim().is_none_or(|t| q > t);
        if beyond && q > 0 {
            // only zero chains remain
            if target.as_ref().is_some_and(Chain::is_zero) {
                out.push(NuElement::new(prefix.clone()));
            }
            return;
        }
        let sols = self.solutions(q, target);
        for m in &sols {
            for p in &sols {
                if q == dim_bound {
                    if m == p {
                        prefix.push((m.clone(), p.clone()));
                        out.push(NuElement::new(prefix.clone()));
                        prefix.pop();
                    }
                } else {
                    prefix.push((m.clone(), p.clone()));
                    self.extend(q + 1, dim_bound, prefix, out);
                    prefix.pop();
                }
            }
        }
    }

    /// Non-negative `q`-chains with bounded coefficients and prescribed
    /// boundary (prescribed augmentation 1 when `target` is `None`).
    fn solutions(&mut self, q: usize, target: Option<Chain>) -> Vec<Chain> {
        let key = (q, target.clone());
        if let Some(s) = self.memo.get(&key) {
            return s.clone();
        }
        let cells: Vec<Cell> = self.k.basis(q).to_vec();
        // constraint coordinates: cells of dimension q − 1, or a single ε row
        let mut coords: HashMap<Cell, usize> = HashMap::new();
        let mut columns: Vec<Vec<(usize, i64)>> = Vec::with_capacity(cells.len());
        let eps = Cell::named("ε");
        for cell in &cells {
            let col: Vec<(Cell, i64)> = match &target {
                None => vec![(eps.clone(), self.k.augmentation_of(cell))],
                Some(_) => self.k.boundary_of(cell).expect("registered").terms().map(|(c, k)| (c.clone(), k)).collect(),
            };
            let col = col
                .into_iter()
                .filter(|(_, k)| *k != 0)
                .map(|(c, k)| {
                    let n = coords.len();
                    (*coords.entry(c).or_insert(n), k)
                })
                .collect();
            columns.push(col);
        }
        let mut residual = vec![0i64; coords.len()];
        let mut feasible = true;
        match &target {
            None => {
                if let Some(&i) = coords.get(&eps) {
                    residual[i] = 1;
                } else {
                    feasible = false;
                }
            }
            Some(t) => {
                for (c, k) in t.terms() {
                    match coords.get(c) {
                        Some(&i) => residual[i] = k,
                        None => feasible = false,
                    }
                }
            }
        }
        let mut last_touch = vec![None; coords.len()];
        for (j, col) in columns.iter().enumerate() {
            for &(i, _) in col {
                last_touch[i] = Some(j);
            }
        }
        // coordinates whose residual must vanish once column j is decided
        let mut closing: Vec<Vec<usize>> = vec![Vec::new(); cells.len()];
        for (i, lt) in last_touch.iter().enumerate() {
            if let Some(j) = lt {
                closing[*j].push(i);
            }
        }
        let mut found = Vec::new();
        if feasible {
            let mut coeffs = vec![0i64; cells.len()];
            self.search(0, &columns, &closing, &mut residual, &mut coeffs, &mut found);
        }
        let sols: Vec<Chain> = found
            .into_iter()
            .map(|coeffs: Vec<i64>| Chain::from_terms(q, cells.iter().cloned().zip(coeffs)))
            .collect();
        self.memo.insert(key, sols.clone());
        sols
    }

    fn search(
        &self,
        j: usize,
        columns: &[Vec<(usize, i64)>],
        closing: &[Vec<usize>],
        residual: &mut [i64],
        coeffs: &mut [i64],
        found: &mut Vec<Vec<i64>>,
    ) {
        if j == columns.len() {
            if residual.iter().all(|&r| r == 0) {
                found.push(coeffs.to_vec());
            }
            return;
        }
        for c in 0..=self.bound {
            for &(i, k) in &columns[j] {
                residual[i] -= c * k;
            }
            if closing[j].iter().all(|&i| residual[i] == 0) {
                coeffs[j] = c;
                self.search(j + 1, columns, closing, residual, coeffs, found);
                coeffs[j] = 0;
            }
            for &(i, k) in &columns[j] {
                residual[i] += c * k;
            }
        }
    }
}
