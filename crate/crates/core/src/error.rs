use thiserror::Error;

/// Errors raised by the constructions in this crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("integrity error: {0}")]
    Integrity(String),

    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    #[error("not composable: {0}")]
    NotComposable(String),

    #[error("invalid element: {0}")]
    InvalidElement(String),

    #[error("internal invariant failed: {0}")]
    Invariant(String),

    #[error("element budget of {budget} exceeded while {context}")]
    Budget { budget: usize, context: String },

    #[error("inconsistent assignment: {0}")]
    Inconsistency(String),

    #[error("incompatible horn faces: {0}")]
    Horn(String),

    #[error("horn not complicial: {0}")]
    NotComplicial(String),

    #[error("unsupported horn: {0}")]
    UnsupportedHorn(String),

    #[error("complicial structure error: {0}")]
    ComplicialStructure(String),

    #[error("not tabulated: {0}")]
    NotTabulated(String),

    #[error("malformed input: {0}")]
    Input(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
