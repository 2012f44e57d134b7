use std::path::PathBuf;

use thiserror::Error;

/// Errors raised by the solver library and experiment harness.
#[derive(Debug, Error)]
pub enum Error {
    /// An argument outside the mathematical domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A decoding request found no feasible member in the archive.
    #[error("no feasible solution in archive")]
    NoFeasible,

    /// Exhaustive enumeration refused because the ground set is too large.
    #[error("ground set of size {size} exceeds enumeration limit {limit}")]
    TooLarge { size: usize, limit: usize },

    #[error("{path}:{line}: {msg}")]
    Parse {
        path: String,
        line: usize,
        msg: String,
    },

    #[error("I/O error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    /// A run inside an experiment failed; identifies the failing cell.
    #[error("run failed (algorithm {algorithm}, replicate {replicate}, beta {beta}): {source}")]
    Run {
        algorithm: String,
        replicate: usize,
        beta: f64,
        #[source]
        source: Box<Error>,
    },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    /// True for failures caused by the filesystem or malformed files.
    pub fn is_io(&self) -> bool {
        match self {
            Error::Io { .. } | Error::Parse { .. } => true,
            Error::Run { source, .. } => source.is_io(),
            _ => false,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
