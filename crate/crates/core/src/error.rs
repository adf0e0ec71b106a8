use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// A caller-supplied parameter is out of its domain.
    #[error("invalid parameter: {0}")]
    Parameter(String),

    /// An argument violates a documented contract (bad partition, wrong size, ...).
    #[error("contract violation: {0}")]
    Contract(String),

    /// Exhaustive routines refuse inputs above their enumeration cap.
    #[error("{what}: n = {n} exceeds the capacity limit of {limit}")]
    Capacity { what: &'static str, n: usize, limit: usize },

    #[error("invalid query ({u}, {v}) on {n} nodes")]
    InvalidQuery { u: usize, v: usize, n: usize },

    #[error("query budget of {budget} exhausted")]
    BudgetExhausted { budget: u64 },

    #[error("{path}:{line}: {message}")]
    Parse { path: String, line: usize, message: String },

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
}

impl Error {
    pub(crate) fn param(msg: impl Into<String>) -> Self {
        Error::Parameter(msg.into())
    }

    pub(crate) fn contract(msg: impl Into<String>) -> Self {
        Error::Contract(msg.into())
    }

    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parameter(_) | Error::Contract(_) | Error::InvalidQuery { .. } | Error::BudgetExhausted { .. } => 2,
            Error::Capacity { .. } => 3,
            Error::Parse { .. } | Error::Io { .. } | Error::Csv(_) => 4,
        }
    }
}
