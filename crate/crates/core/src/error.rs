use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("base order mismatch: C_{left} vs C_{right}")]
    BaseOrderMismatch { left: u64, right: u64 },

    #[error("empty tuple")]
    EmptyTuple,

    #[error("not a permutation: {0:?}")]
    NotABijection(Vec<usize>),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("coefficient index {index} beyond series order {order}")]
    OutOfRange { index: usize, order: usize },

    #[error("guard exceeded: {what} (limit {limit}, requested {requested})")]
    GuardExceeded {
        what: &'static str,
        limit: u128,
        requested: u128,
    },

    /// A quantity that must be an integer came out fractional.
    #[error("integrality violated: {0}")]
    Integrality(String),
}

pub type Result<T> = std::result::Result<T, Error>;
