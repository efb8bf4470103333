use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("non-finite value {value} at index {index} (1-based)")]
    NonFinite { index: usize, value: f64 },

    #[error("block index overflow: {0}")]
    BlockOverflow(String),

    #[error("exponential overflow in term {term} (alpha={alpha}, beta={beta}) at x={x}")]
    ExpOverflow {
        term: usize,
        alpha: f64,
        beta: f64,
        x: f64,
    },

    #[error("refused: {0}")]
    Refused(String),
}

pub type Result<T> = std::result::Result<T, Error>;
