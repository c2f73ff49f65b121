// Filling an inner horn in the nerve of an oriental by the closed form
// y ∘ νΠ_n^k and cross-checking it against exhaustive search.

use std::sync::Arc;

use complicial::nerve::nerve_enumerate;
use complicial::omega::{closure_from_atoms, DEFAULT_BUDGET};
use complicial::simplex::delta;
use complicial::Result;

pub fn run_example() -> Result<()> {
    let target = Arc::new(closure_from_atoms(&delta(2), 2, DEFAULT_BUDGET)?);
    let nerve = nerve_enumerate(target, 3)?;
    let mut filled = 0;
    for x in nerve.elements(3) {
        for k in 1..3 {
            let h = nerve.horn_of(x, k)?;
            let Ok(filler) = nerve.thin_filler(&h) else { continue };
            let searched: Vec<_> = nerve
                .elements(3)
                .iter()
                .filter(|c| nerve.is_thin(c).unwrap_or(false) && nerve.filler_check(c, &h).unwrap_or(false))
                .collect();
            assert_eq!(searched, vec![&filler]);
            filled += 1;
        }
    }
    println!("{filled} inner 2-dimensional horns in N(νΔ_2) filled; each has exactly one thin filler");

    let outer = nerve.horn_of(&nerve.elements(2)[0], 0)?;
    match nerve.thin_filler(&outer) {
        Err(e) => println!("outer horn: {e}"),
        Ok(_) => unreachable!("outer horns are not filled"),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
