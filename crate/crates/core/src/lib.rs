//! Exact commutative algebra for isolated hypersurface singularities.

pub mod error;
pub mod gb;
pub mod homological;
pub mod intersection;
pub mod invariants;
pub mod mf;
pub mod parse;
pub mod poly;
pub mod suite;

pub use error::{AlgebraError, Result};
