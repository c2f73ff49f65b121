//! End-to-end acceptance checks. Each check prints one PASS/FAIL line; the
//! process fails if any check fails.

use std::collections::BTreeSet;
use std::sync::Arc;
use std::time::Instant;

use complicial::adc::{Chain, ComplexMorphism, DirectedComplex};
use complicial::nerve::{nerve_enumerate, Nerve};
use complicial::omega::{closure_from_atoms, enumerate_nu, NuElement, OmegaTable, DEFAULT_BUDGET, DEFAULT_COEFF_BOUND};
use complicial::simplex::{
    blocks_formula, codim_one_cell, degeneracy_map, delta, face_map, horn_complex, pi, simplex_tuples, top_cell,
    vee_complex, w_complex,
};
use complicial::stratified::{check_complicial_axioms, from_nerve, Classifier};
use complicial::wedge::{check_identities, wedge_via_retraction, WedgeContext};
use complicial::Sign;

type Check = std::result::Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn fail(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn oriental(n: usize) -> Result<OmegaTable, String> {
    closure_from_atoms(&delta(n), n, DEFAULT_BUDGET).map_err(fail)
}

fn nerve_of_simplex(m: usize, d: usize) -> Result<Nerve, String> {
    nerve_enumerate(Arc::new(oriental(m)?), d).map_err(fail)
}

fn vertex(v: u32) -> Chain {
    Chain::simplex(&[v])
}

fn oriental_counts() -> Check {
    let u = NuElement::new(vec![(vertex(0), vertex(1)), (Chain::simplex(&[0, 1]), Chain::simplex(&[0, 1]))]);
    let lower = NuElement::new(vec![(vertex(0), vertex(0))]);
    let upper = NuElement::new(vec![(vertex(1), vertex(1))]);
    let expected: BTreeSet<NuElement> = [u, lower, upper].into_iter().collect();
    let by_closure: BTreeSet<NuElement> = oriental(1)?.elements().iter().cloned().collect();
    let by_solver: BTreeSet<NuElement> = enumerate_nu(&delta(1), 1, DEFAULT_COEFF_BOUND).into_iter().collect();
    ensure(by_closure == expected, || format!("closure gave {by_closure:?}"))?;
    ensure(by_solver == expected, || format!("solver gave {by_solver:?}"))?;
    let point = oriental(0)?;
    ensure(point.len() == 1, || format!("νΔ_0 has {} elements", point.len()))
}

fn closure_matches_solver() -> Check {
    for n in 1..=3 {
        let closure: BTreeSet<NuElement> = oriental(n)?.elements().iter().cloned().collect();
        let solved: BTreeSet<NuElement> = enumerate_nu(&delta(n), n, DEFAULT_COEFF_BOUND).into_iter().collect();
        ensure(closure == solved, || format!("n = {n}: {} by closure, {} by solver", closure.len(), solved.len()))?;
    }
    Ok(())
}

fn blocks_match_iterated_boundaries() -> Check {
    for n in 0..=5 {
        let k = delta(n);
        for p in 0..=n {
            for a in simplex_tuples(n, p) {
                for sign in Sign::BOTH {
                    for q in 0..=p {
                        let iterated = k.iterated_sign_boundary(&Chain::simplex(&a), sign, p - q).map_err(fail)?;
                        let blocks = blocks_formula(&a, q, sign).map_err(fail)?;
                        ensure(iterated == blocks, || format!("{a:?}, q = {q}, {sign}: {iterated} vs {blocks}"))?;
                    }
                }
            }
        }
    }
    Ok(())
}

fn unital_and_loop_free(name: &str, k: &DirectedComplex) -> Check {
    ensure(k.is_unital(), || format!("{name} is not unital"))?;
    ensure(k.is_loop_free(), || format!("{name} is not loop-free"))
}

fn complexes_unital_and_loop_free() -> Check {
    for n in 0..=5 {
        unital_and_loop_free(&format!("Δ_{n}"), &delta(n))?;
        for k in 1..n {
            unital_and_loop_free(&format!("Λ_{n}^{k}"), &horn_complex(n, k).map_err(fail)?.complex)?;
            unital_and_loop_free(&format!("V_{n}^{k}"), &vee_complex(n, k).map_err(fail)?.complex)?;
            if n <= 4 {
                unital_and_loop_free(&format!("W({n}, {k})"), &w_complex(n, k).map_err(fail)?.w)?;
            }
        }
    }
    Ok(())
}

/// `f` with its source and target replaced, keeping the images.
fn restrict(f: &ComplexMorphism, source: &DirectedComplex, target: &DirectedComplex) -> Result<ComplexMorphism, String> {
    let g = ComplexMorphism::from_fn(source.clone(), target.clone(), |b| {
        f.apply(&Chain::from_basis(b)).expect("restriction of a source element")
    })
    .map_err(fail)?;
    ensure(g.validate().is_valid(), || "restricted map leaves its target".into())?;
    Ok(g)
}

fn same(lhs: &ComplexMorphism, rhs: &ComplexMorphism, what: impl FnOnce() -> String) -> Check {
    ensure(lhs.same_map(rhs), what)
}

fn simplicial_and_retraction_identities() -> Check {
    let face = |n, i| face_map(n, i).map_err(fail);
    let degen = |n, i| degeneracy_map(n, i).map_err(fail);
    let comp = |a: &ComplexMorphism, b: &ComplexMorphism| a.after(b).map_err(fail);
    for n in 1..=5 {
        for j in 0..=n {
            for i in 0..j {
                if n >= 2 {
                    let lhs = comp(&face(n, j)?, &face(n - 1, i)?)?;
                    let rhs = comp(&face(n, i)?, &face(n - 1, j - 1)?)?;
                    same(&lhs, &rhs, || format!("∂_{j}∂_{i} = ∂_{i}∂_{} on Δ_{n}", j - 1))?;
                }
            }
        }
        for j in 0..n {
            let id = ComplexMorphism::identity(&delta(n - 1));
            same(&comp(&degen(n - 1, j)?, &face(n, j)?)?, &id, || format!("ε_{j}∂_{j} = id on Δ_{n}"))?;
            same(&comp(&degen(n - 1, j)?, &face(n, j + 1)?)?, &id, || format!("ε_{j}∂_{} = id on Δ_{n}", j + 1))?;
            for i in 0..=n {
                if i < j && n >= 2 {
                    let lhs = comp(&degen(n - 1, j)?, &face(n, i)?)?;
                    let rhs = comp(&face(n - 1, i)?, &degen(n - 2, j - 1)?)?;
                    same(&lhs, &rhs, || format!("ε_{j}∂_{i} = ∂_{i}ε_{} on Δ_{n}", j - 1))?;
                }
                if i > j + 1 {
                    let lhs = comp(&degen(n - 1, j)?, &face(n, i)?)?;
                    let rhs = comp(&face(n - 1, i - 1)?, &degen(n - 2, j)?)?;
                    same(&lhs, &rhs, || format!("ε_{j}∂_{i} = ∂_{}ε_{j} on Δ_{n}", i - 1))?;
                }
            }
            for i in 0..=j {
                let lhs = comp(&degen(n - 1, j)?, &degen(n, i)?)?;
                let rhs = comp(&degen(n - 1, i)?, &degen(n, j + 1)?)?;
                same(&lhs, &rhs, || format!("ε_{j}ε_{i} = ε_{i}ε_{} into Δ_{}", j + 1, n - 1))?;
            }
        }
    }
    for n in 2..=5 {
        for k in 1..n {
            let retraction = pi(n, k).map_err(fail)?;
            let horn = horn_complex(n, k).map_err(fail)?.complex;
            let vee = vee_complex(n, k).map_err(fail)?;
            let lower = delta(n - 1);
            let back = comp(&retraction.full, &vee.into_simplex)?;
            same(&back, &ComplexMorphism::identity(&vee.complex), || format!("Π_{n}^{k} fixes V_{n}^{k}"))?;
            for i in (0..=n).filter(|&i| i != k) {
                let into_horn = restrict(&face(n, i)?, &lower, &horn)?;
                let lhs = comp(&retraction.horn, &into_horn)?;
                let rhs = if i + 1 == k || i == k + 1 {
                    restrict(&face(n, i)?, &lower, &vee.complex)?
                } else {
                    let kk = if i + 1 < k { k - 1 } else { k };
                    let lower_retraction = pi(n - 1, kk).map_err(fail)?;
                    let lower_vee = lower_retraction.full.target().clone();
                    comp(&restrict(&face(n, i)?, &lower_vee, &vee.complex)?, &lower_retraction.full)?
                };
                same(&lhs, &rhs, || format!("π_{n}^{k}∂_{i} on Δ_{}", n - 1))?;
            }
        }
    }
    Ok(())
}

fn projection_commutes_with_signed_boundaries() -> Check {
    for n in 2..=4 {
        for k in 1..n {
            let bundle = w_complex(n, k).map_err(fail)?;
            let simplex = delta(n);
            let cases = [
                (Chain::from_basis(&bundle.s_prime), Chain::cell(n, top_cell(n)), n),
                (Chain::from_basis(&bundle.t_prime), Chain::cell(n - 1, codim_one_cell(n, k)), n - 1),
            ];
            for (image, source, dim) in cases {
                for sign in Sign::BOTH {
                    for r in 0..=dim {
                        let lhs = bundle.w.iterated_sign_boundary(&image, sign, r).map_err(fail)?;
                        let below = simplex.iterated_sign_boundary(&source, sign, r).map_err(fail)?;
                        let rhs = bundle.projection.apply(&below).map_err(fail)?;
                        ensure(lhs == rhs, || format!("n = {n}, k = {k}, (∂^{sign})^{r} {image}: {lhs} vs {rhs}"))?;
                    }
                }
            }
        }
    }
    Ok(())
}

fn thin_fillers_unique_and_closed_form() -> Check {
    for m in 0..=2 {
        let nerve = nerve_of_simplex(m, 3)?;
        let set = from_nerve(&nerve, 3).map_err(fail)?;
        let classes = Classifier::new(&set);
        let mut horns = 0;
        for n in 2..=3 {
            for k in 1..n {
                for h in classes.complicial_horns(n, k) {
                    horns += 1;
                    let fillers = set.thin_fillers(&h);
                    ensure(fillers.len() == 1, || format!("m = {m}: {h:?} has thin fillers {fillers:?}"))?;
                    let faces = h.faces.iter().map(|&z| nerve.elements(n - 1)[z].clone()).collect();
                    let nerve_horn = nerve.horn_assemble(n, k, faces).map_err(fail)?;
                    let closed = nerve.thin_filler(&nerve_horn).map_err(fail)?;
                    ensure(nerve.index_of(&closed) == Some(fillers[0]), || format!("m = {m}: closed form differs on {h:?}"))?;
                }
            }
        }
        ensure(horns > 0, || format!("m = {m}: no complicial horns"))?;
    }
    Ok(())
}

fn recursive_classes_match_factorization() -> Check {
    let nerve = nerve_of_simplex(2, 3)?;
    let set = from_nerve(&nerve, 3).map_err(fail)?;
    let classes = Classifier::new(&set);
    let mut seen = [false; 2];
    for n in 2..=3 {
        for (x, element) in nerve.elements(n).iter().enumerate() {
            for k in 1..n {
                let recursive = classes.is_complicial_element(n, x, k);
                let factored = nerve.is_complicial(element, k).map_err(fail)?;
                ensure(recursive == factored, || format!("element {x} of dimension {n}, k = {k}"))?;
                seen[usize::from(recursive)] = true;
            }
        }
    }
    ensure(seen == [true, true], || "the classification was constant".into())
}

fn nerves_are_complicial() -> Check {
    for m in 0..=2 {
        let set = from_nerve(&nerve_of_simplex(m, 3)?, 3).map_err(fail)?;
        let report = check_complicial_axioms(&set).map_err(fail)?;
        ensure(report.is_empty(), || format!("m = {m}: {:?}", report.violations))?;
    }
    Ok(())
}

fn thin_edges_degenerate() -> Check {
    for m in 0..=2 {
        let nerve = nerve_of_simplex(m, 1)?;
        let degenerate: Vec<_> = nerve.elements(0).iter().map(|v| nerve.degeneracy(v, 0)).collect::<Result<_, _>>().map_err(fail)?;
        for x in nerve.elements(1) {
            if nerve.is_thin(x).map_err(fail)? {
                ensure(degenerate.contains(x), || format!("m = {m}: a thin 1-element is not degenerate"))?;
            }
        }
    }
    Ok(())
}

fn wedge_identities() -> Check {
    for m in 0..=2 {
        let nerve = nerve_of_simplex(m, 3)?;
        let ctx = WedgeContext::new(from_nerve(&nerve, 3).map_err(fail)?).map_err(fail)?;
        let report = check_identities(&ctx);
        for a in &report.axioms {
            ensure(a.violations.is_empty(), || format!("m = {m}: ({}) fails at {:?}", a.axiom, a.violations))?;
        }
        for axiom in [1, 2] {
            ensure(report.axiom(axiom).instances_checked > 0, || format!("m = {m}: ({axiom}) was vacuous"))?;
        }
        for dim in 1..=2 {
            for i in 0..dim {
                for (x, y) in ctx.composable_pairs(dim, i) {
                    let searched = ctx.wedge(dim, x, y, i).map_err(fail)?;
                    let els = nerve.elements(dim);
                    let closed = wedge_via_retraction(&nerve, &els[x], &els[y], i).map_err(fail)?;
                    ensure(nerve.index_of(&closed) == Some(searched), || {
                        format!("m = {m}: {x} ∧_{i} {y} in dimension {dim}")
                    })?;
                }
            }
        }
    }
    Ok(())
}

type Criterion = (&'static str, fn() -> Check);

fn main() {
    let checks: [Criterion; 11] = [
        ("νΔ_1 has the three listed elements and νΔ_0 has one", oriental_counts),
        ("closure and solver agree on νΔ_n for n = 1, 2, 3", closure_matches_solver),
        ("block formula equals iterated signed boundaries for n ≤ 5", blocks_match_iterated_boundaries),
        ("Δ_n, Λ_n^k, V_n^k (n ≤ 5) and W (n ≤ 4) are unital and loop-free", complexes_unital_and_loop_free),
        ("simplicial relations and horn retraction identities for n ≤ 5", simplicial_and_retraction_identities),
        ("Π commutes with iterated signed boundaries of s and t_k for n ≤ 4", projection_commutes_with_signed_boundaries),
        ("complicial horns of dimension ≤ 2 in N(νΔ_m) have one thin filler, the closed form", thin_fillers_unique_and_closed_form),
        ("recursive complicial classes equal the factorization test on N(νΔ_2)", recursive_classes_match_factorization),
        ("N(νΔ_m), m ≤ 2, satisfies the complicial-set conditions up to dimension 3", nerves_are_complicial),
        ("thin 1-elements of N(νΔ_m), m ≤ 2, are degenerate", thin_edges_degenerate),
        ("wedge identities hold in N(νΔ_m), m ≤ 2, and match the closed form", wedge_identities),
    ];
    let mut failed = 0;
    for (n, (name, check)) in checks.iter().enumerate() {
        let start = Instant::now();
        match check() {
            Ok(()) => println!("criterion {:>2}: PASS  {name} ({:.2?})", n + 1, start.elapsed()),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2}: FAIL  {name}: {why}", n + 1);
            }
        }
    }
    println!("{} of {} criteria passed", checks.len() - failed, checks.len());
    if failed > 0 {
        std::process::exit(1);
    }
}

