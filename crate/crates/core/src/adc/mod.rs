//! Exact chain algebra for free augmented directed complexes.

mod chain;
mod complex;
pub mod json;
mod morphism;

pub use chain::{BasisElement, Cell, Chain};
pub use complex::{DirectedComplex, Issue, IssueKind, LoopFreeness, ValidationReport};
pub use morphism::ComplexMorphism;
