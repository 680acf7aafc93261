//! Crate-wide error type.

use std::path::PathBuf;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("segment too short: {len} samples, need at least {window}")]
    SegmentTooShort { len: usize, window: usize },

    #[error("incompatible segments: {0}")]
    IncompatibleSegments(String),

    #[error("cross-class concatenation forbidden: labels {0} and {1}")]
    CrossClassConcat(usize, usize),

    #[error("shape mismatch: expected {expected:?}, got {actual:?}")]
    ShapeMismatch {
        expected: Vec<usize>,
        actual: Vec<usize>,
    },

    #[error("incomposable architecture at layer {layer}: {reason}")]
    IncomposableArchitecture { layer: usize, reason: String },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid distribution: {0}")]
    InvalidDistribution(String),

    #[error("non-finite value at layer {layer} ({kind})")]
    NonFinite { layer: usize, kind: String },

    #[error("cross-validation requires >= 2 folds")]
    TooFewFolds,

    #[error("insufficient locations for disjoint folds: {0}")]
    InsufficientLocations(String),

    #[error("unknown segment id: {0}")]
    UnknownSegment(String),

    #[error("config error: {0}")]
    Config(String),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("failed to parse {path}: {reason}")]
    Parse { path: PathBuf, reason: String },

    #[error("{0}")]
    Invalid(String),
}

impl Error {
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    pub fn parse(path: impl Into<PathBuf>, reason: impl Into<String>) -> Self {
        Error::Parse {
            path: path.into(),
            reason: reason.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
