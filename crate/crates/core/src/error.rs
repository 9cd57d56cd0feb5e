//! Crate-wide error type.

use std::path::PathBuf;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Structural problems: mismatched dimensions, empty inputs, bad indices.
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("empty input: {0}")]
    EmptyInput(&'static str),

    #[error("sample index {index} out of range for dataset of size {len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("non-finite value produced in {0}")]
    NonFinite(&'static str),

    /// Caller passed a value outside the documented domain.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// An operation was called in a context it does not support.
    #[error("usage error: {0}")]
    Usage(String),

    /// Input violates a theorem hypothesis (distinct from a plain bad argument).
    #[error("outside theorem domain: {0}")]
    Domain(String),

    /// A bound was requested for inputs that do not satisfy its precondition.
    #[error("precondition not met: {0}")]
    Precondition(String),

    /// Stale-gradient bookkeeping violated the configured staleness cap.
    #[error("scheduling error: staleness {staleness} exceeds maximum {max_staleness}")]
    Scheduling { staleness: usize, max_staleness: usize },

    /// The iterate left the finite range; reported with the iteration index.
    #[error("divergence detected at iteration {iteration}: {what}")]
    Divergence { iteration: u64, what: String },

    #[error("config not found: {0}")]
    ConfigNotFound(PathBuf),

    #[error("invalid config: {0}")]
    Config(String),

    #[error("unknown preset '{name}'; valid presets: {valid}")]
    UnknownPreset { name: String, valid: String },

    #[error("i/o error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("parse error in {path}, line {line}: {what}")]
    Parse {
        path: PathBuf,
        line: usize,
        what: String,
    },
}

impl Error {
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    /// Process exit code for the CLI; documented in `prlc --help`.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::ConfigNotFound(_) => 3,
            Error::Config(_) | Error::InvalidArgument(_) | Error::Domain(_) => 4,
            Error::Divergence { .. } => 5,
            Error::Io { .. } | Error::Parse { .. } => 6,
            Error::UnknownPreset { .. } => 7,
            _ => 1,
        }
    }
}
