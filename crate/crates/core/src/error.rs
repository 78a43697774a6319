use thiserror::Error;

/// Errors produced by the core library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("field order {0} is not a prime")]
    NotPrime(u32),
    #[error("dimension {0} is out of range (expected 2..=64)")]
    BadDimension(usize),
    #[error("space with q={q}, n={n} has too many vectors to enumerate")]
    SpaceTooLarge { n: usize, q: u32 },
    #[error("invalid vector: {0}")]
    InvalidVector(&'static str),
    #[error("vertex {vertex} out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("permutation has length {got}, expected {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("image list is not a bijection")]
    NotBijection,
    #[error("graph order {order} exceeds the configured limit {limit}")]
    OrderLimit { order: usize, limit: usize },
    #[error("automorphism group exceeds the configured limit of {limit} elements")]
    GroupLimit { limit: usize },
    #[error("parameter out of range: {0}")]
    OutOfRange(&'static str),
    #[error("precondition violated: {0}")]
    Precondition(&'static str),
    #[error("graph is disconnected")]
    Disconnected,
}

impl Error {
    /// True for errors that come from a resource cap rather than bad input.
    pub fn is_resource_limit(&self) -> bool {
        matches!(
            self,
            Error::OrderLimit { .. } | Error::GroupLimit { .. } | Error::SpaceTooLarge { .. }
        )
    }
}

pub type Result<T> = core::result::Result<T, Error>;
