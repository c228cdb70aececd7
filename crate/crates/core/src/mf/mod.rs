//! Matrix factorizations, Koszul factorizations, Z/2-graded complexes and
//! the fold of Koszul dg-modules.

mod factorization;
mod koszul;
mod z2;

pub use factorization::{stabilize_from_resolution, MatrixFactorization, Verification};
pub use koszul::{divided_differences, koszul_mf, xi_fold, KoszulDgModule};
pub use z2::{z2_homology, Z2Complex};
