use thiserror::Error;

/// Errors surfaced by the fallible entry points of this crate.
///
/// Contract violations that can only arise from internal bugs (e.g. a
/// non-integral degree) panic instead; `Error` is reserved for conditions a
/// caller can anticipate: bad parameters, configured resource ceilings, and
/// numerical verification failures in the floating-point oracle.
#[derive(Debug, Error)]
pub enum Error {
    /// A parameter was outside the domain of the operation.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A configured size or time ceiling would be exceeded.
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    /// A numerical or structural self-check failed.
    #[error("validation failure: {0}")]
    ValidationFailure(String),

    /// The oracle could not separate eigenvalues after the allowed retries.
    #[error("eigenvalue degeneracy unresolved after {attempts} attempts")]
    Degenerate { attempts: u32 },
}

pub type Result<T> = std::result::Result<T, Error>;
