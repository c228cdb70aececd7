//! Finitely presented modules, free complexes, resolutions and Tor over
//! polynomial rings and hypersurface rings `S/(W)`.

mod complex;
mod matrix;
mod module;
mod ops;
mod resolution;

pub use complex::{FreeComplex, PresentedComplex};
pub use matrix::PolyMatrix;
pub use module::FpModule;
pub use ops::{colength, contains, homology_dim, kernel_modulo, minimal_generators, modulus_relations, syzygies};
pub use resolution::{default_cap, free_resolution, mf_partner, resolve_to_stabilization, FreeResolution};

use crate::error::Result;
use crate::gb::Dim;

/// `dim_k Tor_i(M, N)` for `0 <= i <= up_to`, from a resolution of `M` tensored with `N`.
pub fn tor_dims(m: &FpModule, n: &FpModule, up_to: usize) -> Result<Vec<Dim>> {
    let res = free_resolution(m, up_to + 1)?;
    res.complex().tensor(n)?.homology_dims(up_to, false)
}
