use std::fmt;
use std::sync::Arc;

use crate::error::{AlgebraError, Result};
use crate::gb::{FreeModule, ModuleOrder, Vector};
use crate::poly::{exact_quotient, PolyRing, Polynomial};

/// Dense matrix of polynomials, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyMatrix {
    ring: Arc<PolyRing>,
    rows: usize,
    cols: usize,
    entries: Vec<Polynomial>,
}

impl PolyMatrix {
    pub fn new(ring: &Arc<PolyRing>, rows: usize, cols: usize, entries: Vec<Polynomial>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(AlgebraError::Shape(format!("{rows}x{cols} matrix needs {} entries, got {}", rows * cols, entries.len())));
        }
        let entries = entries.into_iter().map(|p| p.in_ring(ring)).collect::<std::result::Result<_, _>>()?;
        Ok(PolyMatrix { ring: ring.clone(), rows, cols, entries })
    }

    pub fn from_rows(ring: &Arc<PolyRing>, rows: Vec<Vec<Polynomial>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(AlgebraError::Shape("ragged rows".into()));
        }
        Self::new(ring, r, c, rows.into_iter().flatten().collect())
    }

    /// Matrix whose `j`-th column is `cols[j]`, each of length `rows`.
    pub fn from_columns(ring: &Arc<PolyRing>, rows: usize, cols: &[Vec<Polynomial>]) -> Result<Self> {
        let mut m = Self::zeros(ring, rows, cols.len());
        for (j, col) in cols.iter().enumerate() {
            if col.len() != rows {
                return Err(AlgebraError::Shape(format!("column {j} has length {}, expected {rows}", col.len())));
            }
            for (i, p) in col.iter().enumerate() {
                m.set(i, j, p.in_ring(ring)?);
            }
        }
        Ok(m)
    }

    pub fn zeros(ring: &Arc<PolyRing>, rows: usize, cols: usize) -> Self {
        PolyMatrix { ring: ring.clone(), rows, cols, entries: vec![Polynomial::zero(ring); rows * cols] }
    }

    pub fn identity(ring: &Arc<PolyRing>, n: usize) -> Self {
        Self::scalar(ring, n, &Polynomial::one(ring))
    }

    /// `p` times the `n x n` identity.
    pub fn scalar(ring: &Arc<PolyRing>, n: usize, p: &Polynomial) -> Self {
        let mut m = Self::zeros(ring, n, n);
        for i in 0..n {
            m.set(i, i, p.clone());
        }
        m
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: Polynomial) {
        self.entries[i * self.cols + j] = p;
    }

    pub fn entries(&self) -> &[Polynomial] {
        &self.entries
    }

    pub fn column(&self, j: usize) -> Vec<Polynomial> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Polynomial>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn row(&self, i: usize) -> Vec<Polynomial> {
        self.entries[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Polynomial::is_zero)
    }

    pub fn mul(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        if self.cols != other.rows {
            return Err(AlgebraError::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(&self.ring, self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = Polynomial::zero(&self.ring);
                for k in 0..self.cols {
                    let (a, b) = (self.get(i, k), other.get(k, j));
                    if !a.is_zero() && !b.is_zero() {
                        acc = &acc + &a.checked_mul(b)?;
                    }
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        self.zip(other, |a, b| a.checked_add(b))
    }

    pub fn sub(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        self.zip(other, |a, b| a.checked_sub(b))
    }

    fn zip(
        &self,
        other: &PolyMatrix,
        f: impl Fn(&Polynomial, &Polynomial) -> std::result::Result<Polynomial, crate::poly::PolyError>,
    ) -> Result<PolyMatrix> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(AlgebraError::Shape(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| f(a, b)).collect::<std::result::Result<_, _>>()?;
        Ok(PolyMatrix { ring: self.ring.clone(), rows: self.rows, cols: self.cols, entries })
    }

    pub fn neg(&self) -> PolyMatrix {
        self.map(|p| p.neg())
    }

    pub fn scale(&self, p: &Polynomial) -> PolyMatrix {
        self.map(|q| q * p)
    }

    /// Applies `f` entrywise; the result lives in the ring of the first output entry
    /// (or `self`'s ring for empty matrices).
    pub fn map(&self, f: impl Fn(&Polynomial) -> Polynomial) -> PolyMatrix {
        let entries: Vec<Polynomial> = self.entries.iter().map(f).collect();
        let ring = entries.first().map_or(self.ring.clone(), |p| p.ring().clone());
        PolyMatrix { ring, rows: self.rows, cols: self.cols, entries }
    }

    pub fn try_map(&self, target: &Arc<PolyRing>, f: impl Fn(&Polynomial) -> Result<Polynomial>) -> Result<PolyMatrix> {
        let entries = self.entries.iter().map(f).collect::<Result<Vec<_>>>()?;
        Ok(PolyMatrix { ring: target.clone(), rows: self.rows, cols: self.cols, entries })
    }

    pub fn transpose(&self) -> PolyMatrix {
        let mut out = Self::zeros(&self.ring, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    /// Kronecker product `self ⊗ other`.
    pub fn kron(&self, other: &PolyMatrix) -> PolyMatrix {
        let (r, c) = (self.rows * other.rows, self.cols * other.cols);
        let mut out = Self::zeros(&self.ring, r, c);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        out.set(i * other.rows + k, j * other.cols + l, a * other.get(k, l));
                    }
                }
            }
        }
        out
    }

    /// Block matrix `[[a, b], [c, d]]`; blocks must have compatible shapes.
    pub fn blocks(a: &PolyMatrix, b: &PolyMatrix, c: &PolyMatrix, d: &PolyMatrix) -> Result<PolyMatrix> {
        if a.rows != b.rows || c.rows != d.rows || a.cols != c.cols || b.cols != d.cols {
            return Err(AlgebraError::Shape("incompatible blocks".into()));
        }
        let mut out = Self::zeros(&a.ring, a.rows + c.rows, a.cols + b.cols);
        for (blk, r0, c0) in [(a, 0, 0), (b, 0, a.cols), (c, a.rows, 0), (d, a.rows, a.cols)] {
            for i in 0..blk.rows {
                for j in 0..blk.cols {
                    out.set(r0 + i, c0 + j, blk.get(i, j).clone());
                }
            }
        }
        Ok(out)
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> PolyMatrix {
        let mut out = Self::zeros(&self.ring, rows.len(), cols.len());
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                out.set(a, b, self.get(i, j).clone());
            }
        }
        out
    }

    /// Fraction-free Gaussian elimination (Bareiss); every division is exact.
    pub fn determinant(&self) -> Result<Polynomial> {
        if !self.is_square() {
            return Err(AlgebraError::Shape(format!("determinant of a {}x{} matrix", self.rows, self.cols)));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(Polynomial::one(&self.ring));
        }
        let mut a: Vec<Vec<Polynomial>> = (0..n).map(|i| self.row(i)).collect();
        let mut prev = Polynomial::one(&self.ring);
        let mut negate = false;
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(i) => {
                        a.swap(k, i);
                        negate = !negate;
                    }
                    None => return Ok(Polynomial::zero(&self.ring)),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                    a[i][j] = exact_quotient(&num, &prev)
                        .or_else(|| num.is_zero().then(|| Polynomial::zero(&self.ring)))
                        .ok_or_else(|| AlgebraError::Invariant("inexact Bareiss division".into()))?;
                }
                a[i][k] = Polynomial::zero(&self.ring);
            }
            prev = a[k][k].clone();
        }
        let d = a[n - 1][n - 1].clone();
        Ok(if negate { d.neg() } else { d })
    }

    /// Classical adjoint: `self * adj = det * I`.
    pub fn adjugate(&self) -> Result<PolyMatrix> {
        if !self.is_square() {
            return Err(AlgebraError::Shape("adjugate of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut out = Self::zeros(&self.ring, n, n);
        if n == 1 {
            out.set(0, 0, Polynomial::one(&self.ring));
            return Ok(out);
        }
        for i in 0..n {
            for j in 0..n {
                let rows: Vec<usize> = (0..n).filter(|&r| r != j).collect();
                let cols: Vec<usize> = (0..n).filter(|&c| c != i).collect();
                let minor = self.submatrix(&rows, &cols).determinant()?;
                out.set(i, j, if (i + j) % 2 == 1 { minor.neg() } else { minor });
            }
        }
        Ok(out)
    }

    /// Columns as vectors of the free module of rank `rows` (position over term).
    pub fn column_vectors(&self, module: &FreeModule) -> Vec<Vector> {
        (0..self.cols).map(|j| module.from_polys(&self.column(j))).collect()
    }

    pub fn column_module(&self) -> FreeModule {
        FreeModule::new(&self.ring, self.rows, ModuleOrder::Pot)
    }

    /// Entries in canonical text form, row by row.
    pub fn to_strings(&self) -> Vec<Vec<String>> {
        (0..self.rows).map(|i| self.row(i).iter().map(|p| p.to_string()).collect()).collect()
    }

    /// True if every entry vanishes at the origin.
    pub fn entries_in_maximal_ideal(&self) -> bool {
        let field = self.ring.field();
        self.entries.iter().all(|p| field.is_zero(&p.constant_term()))
    }
}

impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for i in 0..self.rows {
            if i > 0 {
                f.write_str("; ")?;
            }
            let row: Vec<String> = self.row(i).iter().map(|p| p.to_string()).collect();
            f.write_str(&row.join(", "))?;
        }
        f.write_str("]")
    }
}
