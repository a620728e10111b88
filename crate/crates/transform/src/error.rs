use lgm_arith::ArithError;
use lgm_quiver::QuiverError;
use thiserror::Error;

use crate::step::Lemma;

#[derive(Debug, Error)]
pub enum TransformError {
    #[error("{lemma:?} does not apply: {reason}")]
    Inapplicable { lemma: Lemma, reason: String },
    #[error("not a Laurent polynomial: {0}")]
    NotLaurent(String),
    #[error("step check failed: {0}")]
    Soundness(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error(transparent)]
    Quiver(#[from] QuiverError),
    #[error(transparent)]
    Arith(#[from] ArithError),
}

pub type Result<T> = std::result::Result<T, TransformError>;

pub(crate) fn inapplicable(lemma: Lemma, reason: impl Into<String>) -> TransformError {
    TransformError::Inapplicable {
        lemma,
        reason: reason.into(),
    }
}
