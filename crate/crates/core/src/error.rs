use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("not a permutation: {0}")]
    NotAPermutation(String),
    #[error("generator index {index} out of range for S_{n}")]
    GeneratorOutOfRange { index: usize, n: usize },
    #[error("composition {0} is not maximal")]
    NotMaximal(String),
    #[error("{0} is not a hook")]
    NotAHook(String),
    #[error("parity violation: {0}")]
    Parity(String),
    #[error("cycle type mismatch: expected {expected}, found {found}")]
    TypeMismatch { expected: String, found: String },
    #[error("not a full cycle: {0}")]
    NotFullCycle(String),
    #[error("{0} is not a member of the stair class")]
    NotInClass(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("resource limit: {required} exceeds {limit}")]
    ResourceLimit { required: String, limit: String },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
