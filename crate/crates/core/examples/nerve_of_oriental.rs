// The nerve of an oriental: elements as functors out of νΔ_n, faces,
// degeneracies and thin elements.

use std::sync::Arc;

use complicial::nerve::nerve_enumerate;
use complicial::omega::{closure_from_atoms, DEFAULT_BUDGET};
use complicial::simplex::delta;
use complicial::Result;

pub fn run_example() -> Result<()> {
    let target = Arc::new(closure_from_atoms(&delta(2), 2, DEFAULT_BUDGET)?);
    let nerve = nerve_enumerate(target.clone(), 3)?;
    for n in 0..=3 {
        let els = nerve.elements(n);
        let thin = if n == 0 { 0 } else { els.iter().filter(|x| nerve.is_thin(x).unwrap_or(false)).count() };
        println!("N_{n}: {} elements, {thin} thin", els.len());
    }
    for x in nerve.elements(1).iter().filter(|x| nerve.is_thin(x).unwrap_or(false)) {
        let vertex = nerve.face(x, 0)?;
        assert_eq!(&nerve.degeneracy(&vertex, 0)?, x);
    }
    println!("every thin 1-element is degenerate");

    let x = nerve.elements(2).iter().find(|x| !nerve.is_thin(x).unwrap_or(true)).expect("a non-thin 2-element");
    println!("a non-thin 2-element:");
    for (b, g) in x.atom_images() {
        println!("  x⟨{b}⟩ = {}", target.element(g));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
