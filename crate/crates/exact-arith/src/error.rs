use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("variable sets differ: [{left}] vs [{right}]")]
    Alignment { left: String, right: String },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("duplicate variable `{0}`")]
    DuplicateVariable(String),
    #[error("unsupported operation: {0}")]
    Unsupported(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("not a Laurent polynomial")]
    NotLaurent,
    #[error("conflicting binding for `{0}`")]
    BindingConflict(String),
    #[error("zero polynomial has no Newton polytope")]
    ZeroPolynomial,
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, ArithError>;
