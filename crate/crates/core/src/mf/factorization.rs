use serde::Serialize;

use crate::error::{AlgebraError, Result};
use crate::homological::{mf_partner, FreeResolution, PolyMatrix};
use crate::poly::Polynomial;

/// A pair of square matrices `(A, B)` meant to satisfy `AB = BA = W I`.
/// Construction only checks shapes; [`MatrixFactorization::verify`] checks the identities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixFactorization {
    potential: Polynomial,
    a: PolyMatrix,
    b: PolyMatrix,
}

/// Outcome of [`MatrixFactorization::verify`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verification {
    Holds,
    /// `product` is `"AB"` or `"BA"`; `(row, col)` is the first offending entry.
    Fails { product: &'static str, row: usize, col: usize },
}

impl Verification {
    pub fn holds(&self) -> bool {
        matches!(self, Verification::Holds)
    }
}

#[derive(Serialize)]
struct MfJson {
    potential: String,
    #[serde(rename = "A")]
    a: Vec<Vec<String>>,
    #[serde(rename = "B")]
    b: Vec<Vec<String>>,
}

impl MatrixFactorization {
    pub fn new(potential: Polynomial, a: PolyMatrix, b: PolyMatrix) -> Result<Self> {
        if !a.is_square() || !b.is_square() || a.rows() != b.rows() {
            return Err(AlgebraError::Shape(format!(
                "factors must be square of equal size, got {}x{} and {}x{}",
                a.rows(),
                a.cols(),
                b.rows(),
                b.cols()
            )));
        }
        let ring = potential.ring().clone();
        let a = a.try_map(&ring, |p| Ok(p.in_ring(&ring)?))?;
        let b = b.try_map(&ring, |p| Ok(p.in_ring(&ring)?))?;
        Ok(MatrixFactorization { potential, a, b })
    }

    /// Like [`new`](Self::new) but rejects pairs that fail verification.
    pub fn checked(potential: Polynomial, a: PolyMatrix, b: PolyMatrix) -> Result<Self> {
        let mf = Self::new(potential, a, b)?;
        match mf.verify()? {
            Verification::Holds => Ok(mf),
            Verification::Fails { product, row, col } => {
                Err(AlgebraError::Invariant(format!("{product} differs from W*I at ({row}, {col})")))
            }
        }
    }

    /// The contractible factorization of size zero.
    pub fn zero_size(potential: Polynomial) -> Self {
        let ring = potential.ring().clone();
        MatrixFactorization { potential, a: PolyMatrix::zeros(&ring, 0, 0), b: PolyMatrix::zeros(&ring, 0, 0) }
    }

    pub fn potential(&self) -> &Polynomial {
        &self.potential
    }

    pub fn a(&self) -> &PolyMatrix {
        &self.a
    }

    pub fn b(&self) -> &PolyMatrix {
        &self.b
    }

    pub fn size(&self) -> usize {
        self.a.rows()
    }

    pub fn verify(&self) -> Result<Verification> {
        let target = PolyMatrix::scalar(self.potential.ring(), self.size(), &self.potential);
        for (name, prod) in [("AB", self.a.mul(&self.b)?), ("BA", self.b.mul(&self.a)?)] {
            for i in 0..self.size() {
                for j in 0..self.size() {
                    if prod.get(i, j) != target.get(i, j) {
                        return Ok(Verification::Fails { product: name, row: i, col: j });
                    }
                }
            }
        }
        Ok(Verification::Holds)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(MfJson {
            potential: self.potential.to_string(),
            a: self.a.to_strings(),
            b: self.b.to_strings(),
        })
        .expect("serializable")
    }
}

/// Reads the repeating tail of a stabilized resolution over `S/(W)` as a
/// factorization: `A = d_{2m+1}`, `B = d_{2m+2}` for the smallest odd index at
/// or past the stabilization index. `A` maps the odd term to the even one.
pub fn stabilize_from_resolution(res: &FreeResolution) -> Result<MatrixFactorization> {
    let complex = res.complex();
    let w = complex
        .potential()
        .cloned()
        .ok_or_else(|| AlgebraError::LiftFailed("resolution is not over a hypersurface ring".into()))?;
    let s = res.stabilization_index().ok_or(AlgebraError::StabilizationNotReached { cap: complex.length() })?;
    if res.is_finite() {
        return Ok(MatrixFactorization::zero_size(w));
    }
    let j = if s % 2 == 1 { s } else { s + 1 };
    let (Some(a), Some(b)) = (complex.differential(j), complex.differential(j + 1)) else {
        return Err(AlgebraError::StabilizationNotReached { cap: complex.length() });
    };
    let mf = MatrixFactorization::new(w.clone(), a.clone(), b.clone())?;
    if mf.verify()?.holds() {
        return Ok(mf);
    }
    // the stored B may be a reduced representative; recover the exact partner
    if let Some(exact) = mf_partner(a, &w)? {
        let mf = MatrixFactorization::new(w, a.clone(), exact)?;
        if mf.verify()?.holds() {
            return Ok(mf);
        }
    }
    Err(AlgebraError::LiftFailed(format!("d_{j} and d_{} do not lift to a factorization", j + 1)))
}
