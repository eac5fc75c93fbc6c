use thiserror::Error;

use crate::scalars::SpaceConfig;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("configuration mismatch: {0} vs {1}")]
    ConfigMismatch(SpaceConfig, SpaceConfig),
    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("series argument is not nilpotent: offending term {0}")]
    NotNilpotent(String),
    #[error("element is not invertible: {0}")]
    NotInvertible(String),
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("{what} is not supported in {mode} mode")]
    Unsupported { what: String, mode: String },
    #[error("expected {expected}, found {found}")]
    WrongShape { expected: String, found: String },
    #[error("inconsistent linear system: {0}")]
    InconsistentSystem(String),
    #[error("{0}")]
    Consistency(String),
    #[error("parse error at column {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
