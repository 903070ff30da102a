use thiserror::Error;

/// Errors raised by the enumeration, counting and bijection routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// Textual or JSON input could not be decoded.
    #[error("parse error: {0}")]
    Parse(String),

    /// A brute-force enumeration would exceed the configured work bound.
    #[error("resource limit exceeded: {required} objects to enumerate, limit is {limit}")]
    Resource { required: String, limit: u64 },

    /// The fixed-point iteration did not extend agreement between iterates.
    #[error("solver error: {0}")]
    Solver(String),

    /// Two routes that must agree did not, or an exact division left a remainder.
    #[error("internal consistency error: {0}")]
    Consistency(String),

    /// The input is well formed but outside what this toolkit handles.
    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
