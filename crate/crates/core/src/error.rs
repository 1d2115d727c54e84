use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid Dyck path: {0}")]
    InvalidPath(String),
    #[error("invalid partition or composition: {0}")]
    InvalidShape(String),
    #[error("level mismatch: expected {expected}, found {found}")]
    LevelMismatch { expected: usize, found: usize },
    #[error("operator {op} undefined at level {level}")]
    OperatorUndefined { op: String, level: usize },
    #[error("degree {degree} exceeds the bound {bound}")]
    DegreeOverflow { degree: usize, bound: usize },
    #[error("invalid weight: {0}")]
    InvalidWeight(String),
    #[error("singular system: {0}")]
    Singular(String),
    #[error("json: {0}")]
    Json(String),
}

pub type Result<T> = std::result::Result<T, Error>;
