//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A sexagesimal digit outside 0..=59.
    #[error("malformed sexagesimal digit {0}: must be in 0..=59")]
    MalformedDigit(u32),

    /// Unparseable input text.
    #[error("parse error: {0}")]
    Parse(String),

    /// Argument outside the mathematical domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// An operand violates a structural invariant (e.g. all-zero column).
    #[error("invalid state: {0}")]
    InvalidState(String),

    /// Vector/matrix size mismatch.
    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },

    /// Unsupported configuration (precision ceiling, step grid, ...).
    #[error("configuration error: {0}")]
    Config(String),

    /// A table lookup fell between grid points with interpolation disabled.
    #[error("angle {0}' is not on the table grid (step {1}')")]
    Grid(i64, u32),

    /// A seed value failed its accuracy requirement.
    #[error("seed accuracy: {0}")]
    SeedAccuracy(String),
}

pub type Result<T> = std::result::Result<T, Error>;
