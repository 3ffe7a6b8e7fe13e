use std::path::PathBuf;

use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("symbol {0:?} is not in the alphabet")]
    UnknownSymbol(String),

    #[error("invalid alphabet: {0}")]
    BadAlphabet(String),

    #[error("run index {index} out of range 1..={m}")]
    RunIndexOutOfRange { index: u32, m: usize },

    #[error("key vector has length {got}, instance has {expected} runs")]
    KeyLengthMismatch { expected: usize, got: usize },

    #[error("keys must be finite values in [0, 1]")]
    KeyOutOfRange,

    #[error("not a permutation of 1..={m}: {reason}")]
    NotAPermutation { m: usize, reason: String },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("instance has {m} runs, exceeding the enumeration cap of {cap}")]
    TooManyRuns { m: usize, cap: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("lp parse error: {0}")]
    LpParse(String),

    #[error("no result for instance {instance:?} under algorithm {algorithm:?}")]
    MissingRun { instance: String, algorithm: String },

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
