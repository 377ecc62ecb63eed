//! Error type shared by all modules of the crate.

use thiserror::Error;

/// Errors reported by parsers, constructors and simulation routines.
#[derive(Debug, Error)]
pub enum Error {
    /// Malformed textual input (DIMACS, instance JSON, state or strategy literals).
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// A precondition on an argument was violated.
    #[error("invalid input: {0}")]
    Input(String),

    /// The request exceeds a configured enumeration bound.
    #[error("capacity exceeded: {0}")]
    Capacity(String),

    /// Two objects that must share a dimension do not.
    #[error("dimension mismatch: {expected} vs {got}")]
    DimensionMismatch { expected: usize, got: usize },

    /// A circuit configuration is internally inconsistent.
    #[error("invalid circuit config: {0}")]
    Config(String),

    /// A prover strategy cannot produce proofs for the given instance.
    #[error("strategy error: {0}")]
    Strategy(String),

    /// I/O failure while reading or writing files.
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }
}
