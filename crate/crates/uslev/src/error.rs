//! Error type shared across the crate.
//!
//! Two classes matter for the CLI exit code: [`Error::Refusal`] and
//! [`Error::Unsupported`] mean a computation was declined because a
//! hypothesis could not be certified or a representation does not support
//! the requested operation (exit 1); everything else is an input problem
//! (exit 2).

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("invalid set representation: {0}")]
    InvalidSet(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("unsupported representation: {0}")]
    Unsupported(String),

    /// A hypothesis required by the requested characterization could not be
    /// certified. The message names the unmet hypothesis.
    #[error("refused: {0}")]
    Refusal(String),

    #[error("failed to read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("invalid json in {path}: {source}")]
    Json {
        path: String,
        #[source]
        source: serde_json::Error,
    },
}

impl Error {
    /// Process exit code for the CLI: 1 for refusals, 2 for bad input.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Refusal(_) | Error::Unsupported(_) => 1,
            _ => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
