//! Error type shared by all modules.
//!
//! The CLI maps variants to process exit codes: usage errors exit 2,
//! unsupported parameters (the excluded case 24 | R) exit 3, tolerance
//! failures in check commands exit 4, anything else exits 1.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Input outside the mathematical domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// Parameters the formulas exclude (currently only 24 | R).
    #[error("unsupported parameters: {0}")]
    Unsupported(String),

    /// A caller broke an API contract (missing argument, derivative order).
    #[error("contract violation: {0}")]
    Contract(String),

    /// Evaluation requested exactly at a pole.
    #[error("pole: {0}")]
    Pole(String),

    /// A check command found a residual above its tolerance.
    #[error("tolerance failure: {0}")]
    Tolerance(String),

    /// Malformed command-line input.
    #[error("usage error: {0}")]
    Usage(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Exit code for the CLI front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Usage(_) => 2,
            Error::Unsupported(_) => 3,
            Error::Tolerance(_) => 4,
            _ => 1,
        }
    }
}
