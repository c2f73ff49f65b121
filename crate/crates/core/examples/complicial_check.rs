// Checking the complicial-set conditions on the stratified set underlying a
// nerve, and on a broken copy of it.

use std::sync::Arc;

use complicial::nerve::nerve_enumerate;
use complicial::omega::{closure_from_atoms, DEFAULT_BUDGET};
use complicial::simplex::delta;
use complicial::stratified::{check_complicial_axioms, from_nerve};
use complicial::Result;

pub fn run_example() -> Result<()> {
    let target = Arc::new(closure_from_atoms(&delta(2), 2, DEFAULT_BUDGET)?);
    let nerve = nerve_enumerate(target, 3)?;
    let set = from_nerve(&nerve, 3)?;
    let report = check_complicial_axioms(&set)?;
    println!(
        "N(νΔ_2) up to dimension 3: {} horns checked, {} indeterminate, {} violations",
        report.horns_checked,
        report.indeterminate,
        report.violations.len()
    );

    let mut broken = set.clone();
    let edge = (0..broken.len(1)).find(|&x| !broken.is_thin(1, x)).expect("a non-thin edge");
    broken.thin[1][edge] = true;
    for v in check_complicial_axioms(&broken)?.violations {
        println!("  clause ({}) in dimension {}: {} {:?}", v.clause, v.dim, v.detail, v.elements);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
