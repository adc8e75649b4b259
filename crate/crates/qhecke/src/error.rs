use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument lies outside the operation's domain.
    #[error("domain error: {0}")]
    Domain(String),
    /// An input object violates a documented precondition.
    #[error("precondition violated: {0}")]
    Precondition(String),
    /// A size guard was exceeded.
    #[error("size guard exceeded: {what} is {size}, limit {limit}")]
    Resource { what: &'static str, size: usize, limit: usize },
    /// A computed object failed one of its defining checks.
    #[error("certificate failure: {0}")]
    Certificate(String),
    /// A textual or JSON literal could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn guard(what: &'static str, size: usize, limit: usize) -> Result<()> {
    if size > limit {
        Err(Error::Resource { what, size, limit })
    } else {
        Ok(())
    }
}
