use lgm_appendix::AppendixError;
use lgm_arith::ArithError;
use lgm_transform::TransformError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum PeriodError {
    #[error("invalid spec: {0}")]
    InvalidSpec(String),
    #[error("not Fano: index {index}")]
    NotFano { index: i64 },
    #[error("method {method} does not apply to {spec}")]
    MethodNotApplicable { method: String, spec: String },
    #[error("I-series calibration failed: {0}")]
    Calibration(String),
    #[error(transparent)]
    Transform(#[from] TransformError),
    #[error(transparent)]
    Appendix(#[from] AppendixError),
    #[error(transparent)]
    Arith(#[from] ArithError),
}

pub type Result<T> = std::result::Result<T, PeriodError>;
