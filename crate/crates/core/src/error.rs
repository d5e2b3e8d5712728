use thiserror::Error;

/// Errors produced by every operation in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A line-oriented text document could not be parsed.
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// A structured document violated its schema; `path` locates the offending field.
    #[error("{path}: {msg}")]
    Schema { path: String, msg: String },

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    /// An exact routine refused an instance above its configured size cap.
    #[error("cap-exceeded: {what} is limited to {cap}, got {size}")]
    CapExceeded { what: &'static str, size: usize, cap: usize },

    #[error("invalid representation: {0}")]
    InvalidRepresentation(String),

    #[error("invalid edge clique cover: {0}")]
    InvalidCover(String),

    #[error("invalid path decomposition: {0}")]
    InvalidDecomposition(String),

    #[error("invalid instance: {0}")]
    InvalidInstance(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A construction produced something its own invariants rule out.
    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse { line, msg: msg.into() }
    }

    pub(crate) fn schema(path: impl Into<String>, msg: impl Into<String>) -> Self {
        Error::Schema { path: path.into(), msg: msg.into() }
    }

    pub fn is_cap_exceeded(&self) -> bool {
        matches!(self, Error::CapExceeded { .. })
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
