use thiserror::Error;

#[derive(Debug, Error)]
pub enum CoreError {
    #[error("grid of size {m} is too small for degree {degree} (need at least {min})")]
    GridTooSmall { m: usize, degree: usize, min: usize },

    #[error("grid size {m} is not a power of two")]
    GridNotPowerOfTwo { m: usize },

    #[error("degree {degree} too large for grid of size {m} (need 2K+1 <= M)")]
    DegreeTooLarge { degree: usize, m: usize },

    #[error("{0}")]
    Domain(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("duplicate coefficient index {k} in coefficient file")]
    DuplicateCoefficient { k: i64 },

    #[error("empty witness list (or all witnesses rejected by the u-norm guard)")]
    EmptyWitnessList,

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, CoreError>;
