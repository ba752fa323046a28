use thiserror::Error;

/// Errors produced anywhere in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A caller violated an operation's precondition.
    #[error("usage error: {0}")]
    Usage(String),

    /// Malformed graph6 text.
    #[error("graph6 parse error at byte {offset}: {message}")]
    Graph6 { offset: usize, message: String },

    /// Malformed edge-list or configuration text.
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    /// A pebble count exceeded the per-vertex cap.
    #[error("pebble count {count} on vertex {vertex} exceeds the cap of {cap}")]
    Overflow { vertex: usize, count: u64, cap: u32 },

    /// The ascending search for a pebbling number ran past its safety cap.
    #[error("internal limit: no answer found for t <= {cap}")]
    LimitExceeded { cap: u64 },

    /// A result failed its own consistency check.
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn usage(msg: impl Into<String>) -> Error {
    Error::Usage(msg.into())
}
