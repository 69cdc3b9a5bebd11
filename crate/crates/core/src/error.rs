use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation (zero, bad base, bad digit, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// The input violates a structural requirement such as ordering or the chain condition.
    #[error("structure error: {0}")]
    Structure(String),

    #[error("query y={query} is outside the decodable range (limit {limit})")]
    OutOfDecodableRange { query: u64, limit: u64 },

    #[error("unsatisfiable: {0}")]
    Unsatisfiable(String),

    #[error("arithmetic overflow: {0}")]
    Overflow(String),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn structure(msg: impl Into<String>) -> Self {
        Error::Structure(msg.into())
    }

    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: msg.into(),
        }
    }
}
