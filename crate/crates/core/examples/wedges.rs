// Wedges in the nerve of an oriental and the identities they satisfy.

use std::sync::Arc;

use complicial::nerve::nerve_enumerate;
use complicial::omega::{closure_from_atoms, DEFAULT_BUDGET};
use complicial::simplex::delta;
use complicial::stratified::from_nerve;
use complicial::wedge::{check_identities, wedge_via_retraction, WedgeContext};
use complicial::Result;

pub fn run_example() -> Result<()> {
    let target = Arc::new(closure_from_atoms(&delta(2), 2, DEFAULT_BUDGET)?);
    let nerve = nerve_enumerate(target, 3)?;
    let ctx = WedgeContext::new(from_nerve(&nerve, 3)?)?;
    println!("{} wedges computed", ctx.compute_all()?);

    let set = ctx.set();
    let (x, y) = ctx
        .composable_pairs(1, 0)
        .into_iter()
        .find(|&(x, y)| !set.is_thin(1, x) && !set.is_thin(1, y))
        .expect("two composable non-thin edges");
    let w = ctx.wedge(1, x, y, 0)?;
    let closed = wedge_via_retraction(&nerve, &nerve.elements(1)[x], &nerve.elements(1)[y], 0)?;
    assert_eq!(nerve.index_of(&closed), Some(w));
    println!("{x} ∧_0 {y} = {w}, faces {:?}", set.faces[2][w]);

    let report = check_identities(&ctx);
    for a in &report.axioms {
        println!(
            "({}) {} instances, {} beyond dimension 3, {} violations",
            a.axiom,
            a.instances_checked,
            a.skipped_at_boundary,
            a.violations.len()
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
