//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Incompatible array shapes, e.g. a matmul whose inner dimensions disagree.
    #[error("dimension mismatch in {op}: lhs shape {lhs:?}, rhs shape {rhs:?}")]
    DimensionMismatch {
        op: &'static str,
        lhs: Vec<usize>,
        rhs: Vec<usize>,
    },

    /// A NaN or infinite value crossed an operation boundary.
    #[error("non-finite value produced by {op}")]
    NonFinite { op: &'static str },

    /// A caller broke an operation's stated precondition.
    #[error("contract violation: {0}")]
    Contract(String),

    /// Bad input data (out-of-range label, wrong image dims, ...).
    #[error("invalid input: {0}")]
    Input(String),

    /// Bad configuration (non-divisible patch size, unknown key, ...).
    #[error("invalid configuration: {0}")]
    Config(String),

    /// Manifest or config-file parse failure, with the offending line.
    #[error("parse error at {path}:{line}: {message}")]
    Parse {
        path: String,
        line: usize,
        message: String,
    },

    /// Checkpoint / embedding file does not start with the expected magic.
    #[error("magic mismatch in {path}: expected {expected:?}, found {found:?}")]
    MagicMismatch {
        path: String,
        expected: [u8; 4],
        found: [u8; 4],
    },

    /// File ended before the declared payload was read.
    #[error("truncated file {path}: {message}")]
    Truncated { path: String, message: String },

    /// Stored parameter block disagrees with the shape implied by the config.
    #[error("shape mismatch for parameter {name}: file has {found:?}, config implies {expected:?}")]
    ShapeMismatch {
        name: String,
        expected: Vec<usize>,
        found: Vec<usize>,
    },

    #[error("I/O error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub fn io(path: impl Into<String>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
