use lgm_arith::ArithError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum AppendixError {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("not Fano: degrees sum to {sum} but must be at most {max}")]
    NotFano { sum: usize, max: usize },
    #[error("weight matrix for k={k} fails validation: {reason}")]
    WeightMatrix { k: usize, reason: String },
    #[error("invalid nef-partition: {0}")]
    InvalidPartition(String),
    #[error("pullback is not a Laurent polynomial: {0}")]
    NotLaurent(String),
    #[error(transparent)]
    Arith(#[from] ArithError),
}

pub type Result<T> = std::result::Result<T, AppendixError>;
