//! Exact computations with free augmented directed complexes and the
//! strict ω-categories they present.
//!
//! The crate is layered bottom-up:
//!
//! * [`adc`]: chains, free augmented directed complexes, their morphisms,
//!   signed boundaries, unitality and loop-freeness.
//! * [`simplex`]: the simplex complexes `Δ_n`, face and degeneracy maps, the
//!   horn complexes `Λ_n^k`, the pair-of-faces complexes `V_n^k`, the
//!   retractions `Π_n^k`, and the extension `W`.
//! * [`omega`]: the ω-category `νK` of a complex, atoms, enumeration,
//!   closure tables and ω-functors out of tabulated categories.
//! * [`nerve`]: the nerve of a tabulated ω-category, thinness, horns and
//!   closed-form thin fillers.
//! * [`stratified`]: finite truncated stratified simplicial sets and the
//!   complicial-set axioms.
//! * [`wedge`]: wedge operations and the complicial identities.
//! * [`cli`]: the command-line front end used by the `complicial` binary.

pub mod adc;
pub mod cli;
mod error;
pub mod nerve;
pub mod omega;
pub mod simplex;
pub mod stratified;
pub mod wedge;

pub use error::{Error, Result};

use serde::{Deserialize, Serialize};

/// A sign `α ∈ {−, +}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "-")]
    Minus,
    #[serde(rename = "+")]
    Plus,
}

impl Sign {
    pub const BOTH: [Sign; 2] = [Sign::Minus, Sign::Plus];

    pub fn flip(self) -> Sign {
        match self {
            Sign::Minus => Sign::Plus,
            Sign::Plus => Sign::Minus,
        }
    }

    /// `(−1)^k` as a sign.
    pub fn parity(k: usize) -> Sign {
        if k.is_multiple_of(2) {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn index(self) -> usize {
        match self {
            Sign::Minus => 0,
            Sign::Plus => 1,
        }
    }
}

impl std::fmt::Display for Sign {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Sign::Minus => "-",
            Sign::Plus => "+",
        })
    }
}
