use thiserror::Error;

use crate::gb::GbError;
use crate::parse::ParseError;
use crate::poly::PolyError;

/// Errors raised by the homological, factorization and intersection layers.
/// Each variant that corresponds to a user-facing failure carries a stable code.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("NOT_MINIMIZED: resolution has a locally invertible entry that cannot be eliminated")]
    NotMinimized,
    #[error("STABILIZATION_NOT_REACHED: no 2-periodic tail within {cap} differentials")]
    StabilizationNotReached { cap: usize },
    #[error("SUPPORT_NOT_FINITE: {0}")]
    SupportNotFinite(String),
    #[error("ENDOMORPHISM_NOT_S_LINEAR: f(sigma(x)) = {composite} differs from f")]
    EndomorphismNotSLinear { composite: String },
    #[error("NOT_QUASI_HOMOGENEOUS: term {term} has weighted degree {degree}, expected 1")]
    NotQuasiHomogeneous { term: String, degree: String },
    #[error("NON_INTEGRAL_RESULT: product of (1/w - 1) is {value}")]
    NonIntegralResult { value: String },
    #[error("LIFT_FAILED: {0}")]
    LiftFailed(String),
    #[error("constant polynomial has no singularity theory here")]
    ConstantPolynomial,
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("invariant violated: {0}")]
    Invariant(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Gb(#[from] GbError),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

impl AlgebraError {
    /// Stable machine-readable code.
    pub fn code(&self) -> &'static str {
        match self {
            AlgebraError::NotMinimized => "NOT_MINIMIZED",
            AlgebraError::StabilizationNotReached { .. } => "STABILIZATION_NOT_REACHED",
            AlgebraError::SupportNotFinite(_) => "SUPPORT_NOT_FINITE",
            AlgebraError::EndomorphismNotSLinear { .. } => "ENDOMORPHISM_NOT_S_LINEAR",
            AlgebraError::NotQuasiHomogeneous { .. } => "NOT_QUASI_HOMOGENEOUS",
            AlgebraError::NonIntegralResult { .. } => "NON_INTEGRAL_RESULT",
            AlgebraError::LiftFailed(_) => "LIFT_FAILED",
            AlgebraError::ConstantPolynomial => "CONSTANT_POLYNOMIAL",
            AlgebraError::Shape(_) => "SHAPE_MISMATCH",
            AlgebraError::Invariant(_) => "INVARIANT_VIOLATED",
            AlgebraError::Poly(_) => "POLYNOMIAL_ERROR",
            AlgebraError::Gb(_) => "GROEBNER_ERROR",
            AlgebraError::Parse(_) => "PARSE_ERROR",
        }
    }
}

pub type Result<T> = std::result::Result<T, AlgebraError>;
