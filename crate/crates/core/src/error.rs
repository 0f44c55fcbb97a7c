use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("variable {0} has no value at this point")]
    UnassignedVariable(String),
    #[error("index {0} out of range")]
    IndexOutOfRange(usize),
    #[error("element has a nonzero k-exponent; the free algebra has no group-likes")]
    NonzeroKExponent,
    #[error("negative power of a non-invertible generator {0}")]
    NegativePower(String),
    #[error("scalar {0} is not an invertible monomial")]
    NotAUnit(String),
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
