use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("matrix is singular")]
    SingularMatrix,

    #[error("degree {degree} outside the admissible range 0..={max}")]
    DegreeOutOfRange { degree: u32, max: u32 },

    #[error("degrees {left} + {right} do not add up to the top degree {top}")]
    DegreeMismatch { left: u32, right: u32, top: u32 },

    #[error("coefficient of dz_I ∧ dz̄_J is not real after removing the phase (I={i:#b}, J={j:#b})")]
    NonRealCoefficient { i: u32, j: u32 },

    #[error("Hermitian coefficient matrix is not symmetric")]
    NotSymmetric,

    #[error("class does not live on A^{expected}: {reason}")]
    WrongAmbient { expected: usize, reason: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
