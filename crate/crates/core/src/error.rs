use num_complex::Complex64;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GammaError {
    #[error("argument {0} lies within the pole threshold of a pole")]
    PoleProximity(Complex64),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("product truncated at {0} terms before the tail bound closed")]
    TruncatedAtCap(u64),
    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),
    #[error("every grid point was excluded")]
    EmptyGrid,
    #[error("result is not representable in double precision")]
    Overflow,
}

pub type Result<T> = std::result::Result<T, GammaError>;
