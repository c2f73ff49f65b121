use std::collections::BTreeSet;
use std::sync::Arc;

use proptest::prelude::*;

use complicial::adc::json::{complex_from_str, complex_to_string, morphism_from_str, morphism_to_string};
use complicial::adc::{Cell, Chain, ComplexMorphism};
use complicial::omega::json::{nu_list_from_str, nu_list_to_string};
use complicial::omega::{closure_from_atoms, enumerate_nu, functor_from_atoms, induced_index_map, DEFAULT_BUDGET};
use complicial::simplex::{degeneracy_map, delta, face_map, horn_complex, simplex_tuples, vee_complex, w_complex};
use complicial::Sign;

/// A chain on `Δ_n` of dimension `q` with small coefficients.
fn chain_strategy(n: usize, q: usize) -> impl Strategy<Value = Chain> {
    let cells = simplex_tuples(n, q);
    proptest::collection::vec(-3i64..=3, cells.len()).prop_map(move |coeffs| {
        Chain::from_terms(q, cells.iter().zip(coeffs).map(|(t, k)| (Cell::Tuple(t.clone()), k)))
    })
}

fn sized_chain() -> impl Strategy<Value = (usize, Chain)> {
    (1usize..=4).prop_flat_map(|n| (Just(n), (0..=n).prop_flat_map(move |q| chain_strategy(n, q))))
}

/// A composite of faces and degeneracies `Δ_a → Δ_b` given as a word.
#[derive(Clone, Debug)]
enum Step {
    Face(usize),
    Degeneracy(usize),
}

fn operator(start: usize, word: &[Step]) -> ComplexMorphism {
    let mut f = ComplexMorphism::identity(&delta(start));
    let mut n = start;
    for step in word {
        let g = match *step {
            Step::Face(i) => {
                n += 1;
                face_map(n, i % (n + 1)).unwrap()
            }
            Step::Degeneracy(i) if n > 0 => {
                n -= 1;
                degeneracy_map(n, i % (n + 1)).unwrap()
            }
            Step::Degeneracy(_) => continue,
        };
        f = g.after(&f).unwrap();
    }
    f
}

fn word() -> impl Strategy<Value = (usize, Vec<Step>)> {
    let step = prop_oneof![(0usize..6).prop_map(Step::Face), (0usize..6).prop_map(Step::Degeneracy)];
    (0usize..=2, proptest::collection::vec(step, 0..4)).prop_filter("stay within Δ_4", |(start, w)| {
        let mut n = *start as i64;
        w.iter().all(|s| {
            n += match s {
                Step::Face(_) => 1,
                Step::Degeneracy(_) if n > 0 => -1,
                Step::Degeneracy(_) => 0,
            };
            n <= 4
        })
    })
}

proptest! {
    #[test]
    fn chain_arithmetic((n, a) in sized_chain(), seed in any::<u64>()) {
        let b = Chain::from_terms(a.dim(), a.terms().map(|(c, k)| (c.clone(), k * (seed as i64 % 3))));
        prop_assert_eq!(&(&(&a + &b) - &b), &a);
        prop_assert_eq!(&-&-&a, &a);
        let (plus, minus) = (a.signed_part(Sign::Plus), a.signed_part(Sign::Minus));
        prop_assert!(plus.is_sum_of_basis() || plus.is_zero());
        prop_assert!(minus.is_sum_of_basis() || minus.is_zero());
        prop_assert_eq!(&(&plus - &minus), &a);
        prop_assert!(n >= a.dim());
    }

    #[test]
    fn boundary_identities((n, c) in sized_chain()) {
        let k = delta(n);
        if c.dim() == 0 {
            prop_assert!(k.boundary(&c).is_err());
            return Ok(());
        }
        let d = k.boundary(&c).unwrap();
        let (plus, minus) = k.split_boundary(&c).unwrap();
        prop_assert_eq!(&(&plus - &minus), &d);
        if c.dim() >= 2 {
            prop_assert!(k.boundary(&d).unwrap().is_zero());
        } else {
            prop_assert_eq!(k.augment(&d).unwrap(), 0);
        }
    }

    #[test]
    fn simplicial_operators_are_morphisms((start, w) in word()) {
        let f = operator(start, &w);
        prop_assert!(f.validate().is_valid(), "{:?}", f.validate());
    }

    #[test]
    fn induced_maps_are_the_functors_on_atoms((start, w) in word()) {
        let f = operator(start, &w);
        let dim = |k: &complicial::adc::DirectedComplex| k.top_dim().unwrap_or(0);
        let s = Arc::new(closure_from_atoms(f.source(), dim(f.source()), DEFAULT_BUDGET).unwrap());
        let t = Arc::new(closure_from_atoms(f.target(), dim(f.target()), DEFAULT_BUDGET).unwrap());
        let images = induced_index_map(&f, &s, &t).unwrap();
        let assignment = s.atoms().map(|(b, i)| (b.clone(), images[i])).collect();
        let g = functor_from_atoms(&s, &t, &assignment).unwrap();
        prop_assert_eq!(g.images(), &images[..]);
    }

    #[test]
    fn complexes_round_trip(n in 1usize..=4, k in 0usize..=4) {
        let k = k.min(n);
        let mut complexes = vec![delta(n), horn_complex(n, k).unwrap().complex];
        if 0 < k && k < n {
            complexes.push(vee_complex(n, k).unwrap().complex);
            complexes.push(w_complex(n, k).unwrap().w);
        }
        for c in complexes {
            let s = complex_to_string(&c);
            let back = complex_from_str(&s).unwrap();
            prop_assert_eq!(&back, &c);
            prop_assert_eq!(complex_to_string(&back), s);
        }
    }

    #[test]
    fn morphisms_round_trip((start, w) in word()) {
        let f = operator(start, &w);
        let s = morphism_to_string(&f);
        let back = morphism_from_str(&s).unwrap();
        prop_assert!(back.same_map(&f));
        prop_assert_eq!(morphism_to_string(&back), s);
    }
}

#[test]
fn precedence_follows_the_signed_lexicographic_order() {
    for n in 1..=5 {
        for (a, b) in delta(n).precedence_relation().unwrap() {
            let (a, b) = (a.cell.as_tuple().unwrap().to_vec(), b.cell.as_tuple().unwrap().to_vec());
            let q = a.iter().zip(&b).position(|(x, y)| x != y).expect("tuples differ within their common length");
            let (x, y) = (i64::from(a[q]), i64::from(b[q]));
            let ordered = if q % 2 == 0 { x < y } else { x > y };
            assert!(ordered, "{a:?} < {b:?} breaks the order at position {q}");
        }
    }
}

#[test]
fn atoms_generate_orientals_and_subcomplexes() {
    let mut complexes = vec![];
    for n in 0..=3 {
        complexes.push(delta(n));
        for k in 0..=n.min(3) {
            if n > 0 {
                complexes.push(horn_complex(n, k).unwrap().complex);
            }
            if 0 < k && k < n {
                complexes.push(vee_complex(n, k).unwrap().complex);
                complexes.push(w_complex(n, k).unwrap().w);
            }
        }
    }
    for k in complexes {
        let top = k.top_dim().unwrap_or(0);
        let table = closure_from_atoms(&k, top, DEFAULT_BUDGET).unwrap();
        let atoms: Vec<usize> = table.atoms().map(|(_, i)| i).collect();
        assert_eq!(table.generated_by(&atoms).len(), table.len());
        assert!(table.law_violations().is_empty());
        for x in table.elements() {
            x.validate(&k).unwrap();
        }
    }
}

#[test]
fn solver_coefficient_bound_is_saturated() {
    for n in 0..=2 {
        let two: BTreeSet<_> = enumerate_nu(&delta(n), n, 2).into_iter().collect();
        let three: BTreeSet<_> = enumerate_nu(&delta(n), n, 3).into_iter().collect();
        assert_eq!(two, three);
        assert!(two.iter().all(|x| x.max_coeff() <= 1));
    }
}

#[test]
fn element_lists_round_trip() {
    let table = closure_from_atoms(&delta(3), 3, DEFAULT_BUDGET).unwrap();
    let s = nu_list_to_string(table.elements());
    assert_eq!(nu_list_from_str(&s).unwrap(), table.elements());
}
