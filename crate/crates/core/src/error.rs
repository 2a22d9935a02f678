use thiserror::Error;

/// Errors produced by the solvers and by input validation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A position was revisited while its own value was still being computed.
    #[error("not an acyclic game: cycle detected in the reachable position set")]
    Cycle,
    /// The reachable set grew past the configured node budget.
    #[error("capacity exceeded: {what} (limit {limit})")]
    Capacity { what: &'static str, limit: usize },
    /// An operation was called on an input it is not defined for.
    #[error("precondition violated: {0}")]
    Precondition(String),
    /// Malformed or out-of-range argument.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    /// A result did not fit into the fixed-width value type.
    #[error("value overflow: {0}")]
    Overflow(&'static str),
    /// A solver reached a state that P/N theory rules out.
    #[error("internal consistency error: {0}")]
    Inconsistent(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}

pub(crate) fn precondition(msg: impl Into<String>) -> Error {
    Error::Precondition(msg.into())
}
