use thiserror::Error;

/// Errors reported by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid dimension: {0}")]
    InvalidDimension(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("precondition violated: {0}")]
    PreconditionViolation(String),
    #[error("invalid generator: {0}")]
    InvalidGenerator(String),
    #[error("matrix is not an integral multiple of a symplectic matrix: {0}")]
    NotInMp(String),
    #[error("matrix is not symplectic")]
    NotSymplectic,
    /// A postcondition the algorithms guarantee did not hold. Always a bug.
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
