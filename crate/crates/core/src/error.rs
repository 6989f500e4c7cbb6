use thiserror::Error;

/// Errors reported by the library operations.
///
/// Every operation is total on its declared domain; an `Error` means the
/// caller handed in data outside that domain (mismatched lengths, invalid
/// weights or diagrams, off-grid parameters), never an internal failure.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("invalid weight for SO({p}): {reason}")]
    InvalidWeight { p: u32, reason: String },

    #[error("invalid Young diagram: {0}")]
    InvalidDiagram(String),

    #[error("s = {s} is not on the reducible grid (n-1)/2 + Z for n = {n}")]
    OffGrid { n: u32, s: String },

    #[error("constituent does not exist: {0}")]
    NoConstituent(String),

    #[error("argument out of range: {0}")]
    OutOfRange(String),

    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("invalid certification input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
