use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),
    #[error("modulus {0} is above the supported bound 2^32")]
    ModulusTooLarge(u64),
    #[error("k = {k} is not an admissible character order for p = {p}")]
    InvalidOrder { k: u64, p: u64 },
    #[error("d = {d} is divisible by p = {p}")]
    DivisibleByP { d: i64, p: u64 },
    #[error("matrix dimension {dim} exceeds the limit {limit}")]
    DimensionTooLarge { dim: usize, limit: usize },
    #[error("matrix is not skew-symmetric modulo p")]
    NotSkewSymmetric,
    #[error("Pfaffian needs an even dimension, got {0}")]
    OddDimension(usize),
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub(crate) fn precondition<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Precondition(msg.into()))
}
