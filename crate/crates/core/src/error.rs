use thiserror::Error;

use crate::exactring::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parameters require nonzero r and s")]
    ZeroParameter,

    #[error("parameters require r ≠ ±s")]
    DegenerateParameters,

    /// The polynomial is not divisible by `u_var - root`.
    #[error("nonzero remainder dividing by (u_{var} - {root})")]
    NonzeroRemainder { var: usize, root: Rational },

    #[error("singular point: {0}")]
    SingularPoint(String),

    #[error("variable u_{var} substituted out of order")]
    OutOfOrderSubstitution { var: usize },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("tableau shape {tableau} does not match partition {partition}")]
    ShapeMismatch { tableau: String, partition: String },

    #[error("arity mismatch: expected {expected}, found {found}")]
    ArityMismatch { expected: usize, found: usize },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
