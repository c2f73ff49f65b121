use std::cmp::Ordering;
use std::fmt;

use crate::adc::{BasisElement, Chain, ComplexMorphism, DirectedComplex};
use crate::{Error, Result, Sign};

/// A member of `νK`: a finite double sequence `(x_0^-, x_0^+ | x_1^-, x_1^+ | …)`
/// of sums of basis elements.
///
/// Trailing zero pairs are trimmed, so structural equality is equality of
/// elements. The canonical order is by dimension, then by the chains.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NuElement {
    pairs: Vec<(Chain, Chain)>,
}

impl NuElement {
    /// Builds an element from `(x_q^-, x_q^+)` pairs without validating it.
    pub fn new(pairs: Vec<(Chain, Chain)>) -> NuElement {
        let mut pairs = pairs;
        while pairs.last().is_some_and(|(m, p)| m.is_zero() && p.is_zero()) {
            pairs.pop();
        }
        NuElement { pairs }
    }

    pub fn pairs(&self) -> &[(Chain, Chain)] {
        &self.pairs
    }

    /// `x_q^α`; zero beyond the stored length.
    pub fn part(&self, q: usize, sign: Sign) -> Chain {
        match self.pairs.get(q) {
            Some((m, _)) if sign == Sign::Minus => m.clone(),
            Some((_, p)) => p.clone(),
            None => Chain::zero(q),
        }
    }

    /// The least `n` with `d_n^- x = d_n^+ x = x`.
    pub fn dim(&self) -> usize {
        match self.pairs.last() {
            None => 0,
            Some((m, p)) if m == p => self.pairs.len() - 1,
            Some(_) => self.pairs.len(),
        }
    }

    /// `d_n^α x`: truncation at level `n` with the `α` part doubled.
    pub fn d(&self, sign: Sign, n: usize) -> NuElement {
        if n >= self.dim() {
            return self.clone();
        }
        let mut pairs = self.pairs[..n].to_vec();
        let top = self.part(n, sign);
        pairs.push((top.clone(), top));
        NuElement::new(pairs)
    }

    /// `x #_n y = x − z + y` where `z = d_n^+ x = d_n^- y`.
    pub fn compose(&self, n: usize, y: &NuElement) -> Result<NuElement> {
        let z = self.d(Sign::Plus, n);
        if z != y.d(Sign::Minus, n) {
            return Err(Error::NotComposable(format!(
                "d_{n}^+ of the left operand is {z}, d_{n}^- of the right is {}",
                y.d(Sign::Minus, n)
            )));
        }
        let len = self.pairs.len().max(y.pairs.len());
        let mut pairs = Vec::with_capacity(len);
        for q in 0..len {
            let mut parts = [Chain::zero(q), Chain::zero(q)];
            for (slot, sign) in parts.iter_mut().zip(Sign::BOTH) {
                let mut c = self.part(q, sign);
                c.add_scaled(&z.part(q, sign), -1);
                c.add_scaled(&y.part(q, sign), 1);
                if !c.is_sum_of_basis() {
                    return Err(Error::Invariant(format!(
                        "composite has a negative coefficient at level {q}: {c}"
                    )));
                }
                *slot = c;
            }
            let [m, p] = parts;
            pairs.push((m, p));
        }
        Ok(NuElement::new(pairs))
    }

    /// Checks every defining constraint of `νK`, naming the first failure.
    pub fn validate(&self, k: &DirectedComplex) -> Result<()> {
        let fail = |msg: String| Err(Error::InvalidElement(msg));
        if self.pairs.is_empty() {
            return fail("the zero sequence has ε x_0 = 0".into());
        }
        for (q, (m, p)) in self.pairs.iter().enumerate() {
            for (c, sign) in [(m, Sign::Minus), (p, Sign::Plus)] {
                if !c.is_zero() && c.dim() != q {
                    return fail(format!("x_{q}^{sign} has dimension {}", c.dim()));
                }
                if !c.is_sum_of_basis() {
                    return fail(format!("x_{q}^{sign} = {c} is not a sum of basis elements"));
                }
                if let Some(cell) = c.support().find(|cell| k.dim_of(cell) != Some(q)) {
                    return fail(format!("x_{q}^{sign} mentions {cell}, not a {q}-dimensional basis element"));
                }
            }
        }
        for sign in Sign::BOTH {
            let e = k.augment(&self.part(0, sign).with_dim(0))?;
            if e != 1 {
                return fail(format!("ε x_0^{sign} = {e}"));
            }
        }
        for q in 1..=self.pairs.len() {
            let expected = &self.part(q - 1, Sign::Plus) - &self.part(q - 1, Sign::Minus);
            for sign in Sign::BOTH {
                let x = self.part(q, sign).with_dim(q);
                let bx = k.boundary(&x)?;
                if bx != expected.clone().with_dim(q - 1) {
                    return fail(format!("∂x_{q}^{sign} = {bx}, expected {expected}"));
                }
            }
        }
        Ok(())
    }

    /// Applies a complex morphism termwise. The result is validated in the
    /// target complex.
    pub fn map(&self, f: &ComplexMorphism) -> Result<NuElement> {
        let pairs = self
            .pairs
            .iter()
            .map(|(m, p)| Ok((f.apply(m)?, f.apply(p)?)))
            .collect::<Result<Vec<_>>>()?;
        let out = NuElement::new(pairs);
        out.validate(f.target()).map_err(|e| {
            Error::InvalidElement(format!("morphism is not admissible for ν: {e}"))
        })?;
        Ok(out)
    }

    pub fn max_coeff(&self) -> i64 {
        self.pairs.iter().map(|(m, p)| m.max_coeff().max(p.max_coeff())).max().unwrap_or(0)
    }
}

impl Ord for NuElement {
    fn cmp(&self, other: &Self) -> Ordering {
        self.dim().cmp(&other.dim()).then_with(|| self.pairs.cmp(&other.pairs))
    }
}

impl PartialOrd for NuElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for NuElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (q, (m, p)) in self.pairs.iter().enumerate() {
            if q > 0 {
                f.write_str(" | ")?;
            }
            write!(f, "{m}, {p}")?;
        }
        f.write_str(")")
    }
}

/// `true` iff `x` satisfies every constraint of `νK`.
pub fn nu_validate(k: &DirectedComplex, x: &NuElement) -> bool {
    x.validate(k).is_ok()
}

/// The atom `⟨a⟩ = ((∂⁻)^p a, (∂⁺)^p a | … | ∂⁻a, ∂⁺a | a, a)`.
pub fn atom(k: &DirectedComplex, a: &BasisElement) -> Result<NuElement> {
    if !k.contains(a) {
        return Err(Error::Integrity(format!("{a} is not a basis element")));
    }
    let p = a.dim;
    let top = Chain::from_basis(a);
    let mut pairs = vec![(Chain::zero(0), Chain::zero(0)); p + 1];
    pairs[p] = (top.clone(), top.clone());
    let (mut minus, mut plus) = (top.clone(), top);
    for q in (0..p).rev() {
        minus = k.signed_boundary(&minus, Sign::Minus)?;
        plus = k.signed_boundary(&plus, Sign::Plus)?;
        pairs[q] = (minus.clone(), plus.clone());
    }
    let x = NuElement::new(pairs);
    x.validate(k)
        .map_err(|e| Error::InvalidElement(format!("atom of {a} is not in νK: {e}")))?;
    Ok(x)
}

/// `νf`: the termwise action of a complex morphism.
pub fn induced_functor(f: &ComplexMorphism, x: &NuElement) -> Result<NuElement> {
    x.map(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplex::{delta, face_map, pi};

    fn c(t: &[u32]) -> Chain {
        Chain::simplex(t)
    }

    fn nu(pairs: &[(Chain, Chain)]) -> NuElement {
        NuElement::new(pairs.to_vec())
    }

    #[test]
    fn validation_examples() {
        let d1 = delta(1);
        let u = nu(&[(c(&[0]), c(&[1])), (c(&[0, 1]), c(&[0, 1]))]);
        assert!(nu_validate(&d1, &u));
        let d2 = delta(2);
        let bad = nu(&[(c(&[0]), c(&[2])), (c(&[0, 1]), c(&[0, 1]))]);
        assert!(!nu_validate(&d2, &bad));
        let two = &c(&[0]) + &c(&[1]);
        assert!(!nu_validate(&d1, &nu(&[(two.clone(), two)])));
    }

    #[test]
    fn d_examples() {
        let d1 = delta(1);
        let u = atom(&d1, &BasisElement::simplex(&[0, 1])).unwrap();
        assert_eq!(u.d(Sign::Minus, 0), nu(&[(c(&[0]), c(&[0]))]));
        assert_eq!(u.d(Sign::Plus, 1), u);
        assert_eq!(u.d(Sign::Plus, 7), u);
        let d2 = delta(2);
        let s = atom(&d2, &BasisElement::simplex(&[0, 1, 2])).unwrap();
        let path = &c(&[0, 1]) + &c(&[1, 2]);
        assert_eq!(s.d(Sign::Plus, 1), nu(&[(c(&[0]), c(&[2])), (path.clone(), path)]));
    }

    #[test]
    fn compose_examples() {
        let d2 = delta(2);
        let a = atom(&d2, &BasisElement::simplex(&[0, 1])).unwrap();
        let b = atom(&d2, &BasisElement::simplex(&[1, 2])).unwrap();
        let ab = a.compose(0, &b).unwrap();
        let path = &c(&[0, 1]) + &c(&[1, 2]);
        assert_eq!(ab, nu(&[(c(&[0]), c(&[2])), (path.clone(), path)]));
        assert!(nu_validate(&d2, &ab));
        assert_eq!(a.compose(0, &a.d(Sign::Plus, 0)).unwrap(), a);
        assert!(matches!(a.compose(0, &a), Err(Error::NotComposable(_))));
    }

    #[test]
    fn atoms_and_induced_maps() {
        let d1 = delta(1);
        assert_eq!(
            atom(&d1, &BasisElement::simplex(&[0, 1])).unwrap(),
            nu(&[(c(&[0]), c(&[1])), (c(&[0, 1]), c(&[0, 1]))])
        );
        assert_eq!(atom(&d1, &BasisElement::simplex(&[0])).unwrap(), nu(&[(c(&[0]), c(&[0]))]));

        let r = pi(2, 1).unwrap();
        let e02 = atom(&delta(2), &BasisElement::simplex(&[0, 2])).unwrap();
        let path = &c(&[0, 1]) + &c(&[1, 2]);
        assert_eq!(
            induced_functor(&r.full, &e02).unwrap(),
            nu(&[(c(&[0]), c(&[2])), (path.clone(), path)])
        );
        let f = face_map(1, 0).unwrap();
        let v = atom(&delta(0), &BasisElement::simplex(&[0])).unwrap();
        assert_eq!(induced_functor(&f, &v).unwrap(), nu(&[(c(&[1]), c(&[1]))]));
        let id = ComplexMorphism::identity(&d1);
        let u = atom(&d1, &BasisElement::simplex(&[0, 1])).unwrap();
        assert_eq!(induced_functor(&id, &u).unwrap(), u);
    }
}
