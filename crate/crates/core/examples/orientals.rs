// Orientals νΔ_n: tabulation by closure under the ω-category operations,
// the independent solver, atoms and composites.

use complicial::adc::BasisElement;
use complicial::omega::{atom, closure_from_atoms, enumerate_nu, DEFAULT_BUDGET};
use complicial::simplex::delta;
use complicial::Result;

pub fn run_example() -> Result<()> {
    for n in 0..=3 {
        let k = delta(n);
        let table = closure_from_atoms(&k, n, DEFAULT_BUDGET)?;
        let solved = enumerate_nu(&k, n, 2);
        println!("νΔ_{n}: {} elements by closure, {} by enumeration", table.len(), solved.len());
        assert_eq!(table.elements(), &solved[..]);
    }

    let k = delta(2);
    let table = closure_from_atoms(&k, 2, DEFAULT_BUDGET)?;
    let edge = |t: &[u32]| table.atom_index(&BasisElement::simplex(t)).expect("atom");
    let composite = table.compose(0, edge(&[0, 1]), edge(&[1, 2])).expect("composable");
    println!("⟨[0,1]⟩ #_0 ⟨[1,2]⟩ = {}", table.element(composite));
    println!("⟨[0,1,2]⟩ = {}", atom(&k, &BasisElement::simplex(&[0, 1, 2]))?);
    println!("law violations: {}", table.law_violations().len());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
