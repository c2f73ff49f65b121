// Simplex complexes, horns and the pair-of-faces complexes, with the
// unitality and loop-freeness checks and the block formula for iterated
// boundaries.

use complicial::adc::json::complex_to_string;
use complicial::adc::Chain;
use complicial::simplex::{blocks_formula, delta, horn_complex, vee_complex};
use complicial::{Result, Sign};

pub fn run_example() -> Result<()> {
    let triangle = delta(2);
    println!("Δ_2 as JSON:\n{}", complex_to_string(&triangle));

    for n in 1..=4 {
        let d = delta(n);
        println!("Δ_{n}: {} basis elements, unital {}, loop-free {}", d.basis_len(), d.is_unital(), d.is_loop_free());
        for k in 0..=n {
            let horn = horn_complex(n, k)?;
            print!("  Λ_{n}^{k}: {} basis elements", horn.complex.basis_len());
            if 0 < k && k < n {
                let vee = vee_complex(n, k)?;
                print!(", V_{n}^{k}: {}", vee.complex.basis_len());
            }
            println!();
        }
    }

    let d = delta(3);
    let a = [0, 1, 2, 3];
    for sign in Sign::BOTH {
        for q in 0..=3 {
            let iterated = d.iterated_sign_boundary(&Chain::simplex(&a), sign, 3 - q)?;
            let blocks = blocks_formula(&a, q, sign)?;
            assert_eq!(iterated, blocks);
            println!("(∂^{sign})^{} [0,1,2,3] = {blocks}", 3 - q);
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
