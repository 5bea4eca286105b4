use thiserror::Error;

/// Failure modes shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A skew shape whose inner diagram does not fit inside the outer one.
    #[error("shape error: {0}")]
    Shape(String),
    /// An argument outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// A documented precondition was violated.
    #[error("precondition violated: {0}")]
    Precondition(String),
    /// Applying a raising operator would leave the truncated Fock space.
    #[error("truncation: {0}")]
    Truncation(String),
    /// A configured size cap was exceeded.
    #[error("resource cap exceeded: {what} = {requested} > cap {cap}")]
    Resource {
        what: &'static str,
        requested: usize,
        cap: usize,
    },
    /// Two independent computations of the same quantity disagree.
    #[error("verification mismatch: {0}")]
    Verification(String),
    /// Malformed text input.
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_cap(what: &'static str, requested: usize, cap: usize) -> Result<()> {
    if requested > cap {
        Err(Error::Resource {
            what,
            requested,
            cap,
        })
    } else {
        Ok(())
    }
}
