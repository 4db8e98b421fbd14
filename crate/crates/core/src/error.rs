use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("{0}")]
    Domain(String),

    #[error("{what}: {actual} exceeds the limit of {limit}")]
    Capacity {
        what: &'static str,
        actual: usize,
        limit: usize,
    },

    /// An internal cross-check failed; this always indicates a bug.
    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: msg.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
