use thiserror::Error;

use crate::algebra::Generator;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("no numeric value assigned to generator {0}")]
    MissingAssignment(Generator),
    #[error("frame index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("expected {expected} components, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("improper rational function: numerator degree {degree} >= pole order {poles}")]
    ImproperRational { degree: usize, poles: u32 },
    #[error("insufficient decay: numerator degree {degree}, pole order {poles}")]
    InsufficientDecay { degree: usize, poles: u32 },
    #[error("insufficient jet order: {0}")]
    InsufficientJetOrder(String),
    #[error("symbol not invertible: {0}")]
    NonInvertible(String),
    #[error("unsupported operator pair at n={n}: ({left}, {right})")]
    UnsupportedPair { n: usize, left: String, right: String },
    #[error("unsupported dimension {0}")]
    UnsupportedDimension(usize),
    #[error("quadrature did not converge: {0}")]
    QuadratureNonConvergence(String),
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
