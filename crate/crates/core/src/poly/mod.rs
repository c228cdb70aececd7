//! Exact coefficients and sparse multivariate polynomials with pluggable
//! monomial orders.

mod coeff;
mod divide;
mod monomial;
mod polynomial;
mod ring;

pub use coeff::{Coefficient, CoefficientField, DEFAULT_PRIME};
pub use divide::{exact_quotient, multivariate_divide};
pub use monomial::{Monomial, MonomialOrder};
pub use polynomial::Polynomial;
pub use ring::PolyRing;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("polynomials live in different rings ({left} vs {right})")]
    RingMismatch { left: String, right: String },
    #[error("variable index {index} out of range for {nvars} variables")]
    VariableOutOfRange { index: usize, nvars: usize },
    #[error("expected {expected} substitution images, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("division algorithm needs a global order; use the Mora normal form for local orders")]
    LocalOrder,
    #[error("characteristic {0} is not supported (need an odd prime below 2^31)")]
    BadCharacteristic(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("denominator vanishes modulo {prime}")]
    DenominatorVanishes { prime: u64 },
    #[error("invalid variable name `{0}`")]
    BadVariableName(String),
    #[error("duplicate variable `{0}`")]
    DuplicateVariable(String),
    #[error("invalid monomial order: {0}")]
    BadOrder(String),
}
