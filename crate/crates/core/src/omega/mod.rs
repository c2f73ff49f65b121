//! The ω-category `νK` of a free augmented directed complex.
//!
//! Elements are double sequences of chains ([`NuElement`]); finite pieces of
//! `νK` are tabulated as [`OmegaTable`]s, and ω-functors between them as
//! [`FunctorTable`]s determined by their values on atoms.

mod element;
mod enumerate;
mod functor;
pub mod json;
mod table;

pub use element::{atom, induced_functor, nu_validate, NuElement};
pub use enumerate::{enumerate_nu, DEFAULT_COEFF_BOUND};
pub use functor::{evaluate, functor_from_atoms, induced_index_map, FunctorTable};
pub(crate) use functor::{functor_violation, propagate};
pub use table::{closure_from_atoms, Derivation, OmegaTable, DEFAULT_BUDGET};
