//! Gröbner and standard bases, normal forms, and colengths.

mod engine;
mod ideal;
mod mora;
mod staircase;
mod vector;

pub use engine::{groebner, interreduce, reduce, s_vector, top_reduce, PairStrategy};
pub use ideal::{buchberger, buchberger_with, normal_form, s_polynomial, standard_basis, GroebnerBasis};
pub use mora::weak_normal_form as mora_normal_form;
pub use staircase::{Dim, Staircase};
pub use vector::{FreeModule, ModuleOrder, VTerm, Vector};

use thiserror::Error;

use crate::poly::PolyError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GbError {
    #[error("Buchberger's algorithm needs a global order; use the standard-basis variant for the local order")]
    LocalOrder,
    #[error("standard bases are computed for the local order only")]
    GlobalOrder,
    #[error(transparent)]
    Poly(#[from] PolyError),
}
