// The retraction of a horn onto its pair-of-faces complex and its
// extension to the whole simplex.

use complicial::adc::Chain;
use complicial::simplex::{pi, w_complex, S_PRIME, T_PRIME};
use complicial::{Result, Sign};

pub fn run_example() -> Result<()> {
    let bundle = w_complex(2, 1)?;
    let w = &bundle.w;
    println!("W for n = 2, k = 1 (unital {}, loop-free {}):", w.is_unital(), w.is_loop_free());
    for label in [T_PRIME, S_PRIME] {
        let cell = label.parse().expect("labels parse");
        println!("  ∂{label} = {}", w.boundary_of(&cell).expect("registered"));
    }

    let retraction = pi(3, 1)?;
    for t in [[0u32, 2, 3].as_slice(), &[0, 1, 2], &[0, 2], &[1, 3]] {
        println!("Π_3^1 {:?} = {}", t, retraction.full.apply(&Chain::simplex(t))?);
    }

    // Π commutes with iterated signed boundaries of the top cell
    let bundle = w_complex(3, 1)?;
    let simplex = bundle.projection.source();
    let top = Chain::simplex(&[0, 1, 2, 3]);
    for sign in Sign::BOTH {
        for r in 0..=3 {
            let lhs = bundle.w.iterated_sign_boundary(&bundle.projection.apply(&top)?, sign, r)?;
            let rhs = bundle.projection.apply(&simplex.iterated_sign_boundary(&top, sign, r)?)?;
            assert_eq!(lhs, rhs);
            println!("(∂^{sign})^{r} s' = {lhs}");
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
