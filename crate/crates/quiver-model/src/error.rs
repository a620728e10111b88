use lgm_arith::ArithError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum QuiverError {
    #[error("k must be at least 2, got {0}")]
    InvalidK(usize),
    #[error("degrees must be positive")]
    InvalidDegree,
    #[error("not Fano: degrees sum to {sum}, need less than {bound}")]
    NotFano { sum: usize, bound: usize },
    #[error("empty arrow set")]
    EmptyArrows,
    #[error("arrow {0} is not in the quiver")]
    MissingArrow(String),
    #[error("invalid block history: {0}")]
    InvalidHistory(String),
    #[error("invalid block: {0}")]
    InvalidBlock(String),
    #[error(transparent)]
    Arith(#[from] ArithError),
}

pub type Result<T> = std::result::Result<T, QuiverError>;
