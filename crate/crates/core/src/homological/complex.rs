use std::sync::Arc;

use super::matrix::PolyMatrix;
use super::module::FpModule;
use super::ops::{homology_dim, modulus_relations};
use crate::error::{AlgebraError, Result};
use crate::gb::{buchberger, Dim, FreeModule, ModuleOrder, Vector};
use crate::poly::{PolyRing, Polynomial};

/// A bounded chain complex `F_len -> ... -> F_1 -> F_0` of free modules over
/// `S` or `S/(W)`. `differentials[i]` is `d_{i+1}: F_{i+1} -> F_i`, a
/// `rank(i) x rank(i+1)` matrix acting on column vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeComplex {
    ring: Arc<PolyRing>,
    potential: Option<Polynomial>,
    ranks: Vec<usize>,
    differentials: Vec<PolyMatrix>,
}

/// A complex whose terms are finitely presented: term `i` is `S^{ranks[i]}`
/// modulo `relations[i]`. Tensor products of free complexes land here.
#[derive(Clone, Debug)]
pub struct PresentedComplex {
    ring: Arc<PolyRing>,
    ranks: Vec<usize>,
    relations: Vec<Vec<Vector>>,
    differentials: Vec<PolyMatrix>,
}

impl FreeComplex {
    pub fn new(
        ring: &Arc<PolyRing>,
        potential: Option<Polynomial>,
        rank0: usize,
        differentials: Vec<PolyMatrix>,
    ) -> Result<Self> {
        let mut ranks = vec![rank0];
        for (i, d) in differentials.iter().enumerate() {
            if d.rows() != ranks[i] {
                return Err(AlgebraError::Shape(format!(
                    "d_{} has {} rows but F_{} has rank {}",
                    i + 1,
                    d.rows(),
                    i,
                    ranks[i]
                )));
            }
            ranks.push(d.cols());
        }
        let potential = potential.map(|w| w.in_ring(ring)).transpose()?.filter(|w| !w.is_zero());
        let differentials =
            differentials.iter().map(|d| d.try_map(ring, |p| Ok(p.in_ring(ring)?))).collect::<Result<Vec<_>>>()?;
        Ok(FreeComplex { ring: ring.clone(), potential, ranks, differentials })
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn potential(&self) -> Option<&Polynomial> {
        self.potential.as_ref()
    }

    pub fn length(&self) -> usize {
        self.differentials.len()
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    /// Rank of `F_i`; zero beyond the end.
    pub fn rank(&self, i: usize) -> usize {
        self.ranks.get(i).copied().unwrap_or(0)
    }

    /// `d_i` for `1 <= i <= length`.
    pub fn differential(&self, i: usize) -> Option<&PolyMatrix> {
        if i == 0 {
            None
        } else {
            self.differentials.get(i - 1)
        }
    }

    pub fn differentials(&self) -> &[PolyMatrix] {
        &self.differentials
    }

    /// Checks `d_i d_{i+1} = 0` modulo the potential.
    pub fn check_composition(&self) -> Result<()> {
        let gb = buchberger(&self.ring, &self.potential.iter().cloned().collect::<Vec<_>>())?;
        for i in 1..self.length() {
            let prod = self.differentials[i - 1].mul(&self.differentials[i])?;
            for p in prod.entries() {
                if !gb.normal_form(p)?.is_zero() {
                    return Err(AlgebraError::Invariant(format!("d_{} d_{} is not zero", i, i + 1)));
                }
            }
        }
        Ok(())
    }

    pub fn to_presented(&self) -> PresentedComplex {
        let modulus: Vec<Polynomial> = self.potential.iter().cloned().collect();
        let relations = self
            .ranks
            .iter()
            .map(|&r| modulus_relations(&FreeModule::new(&self.ring, r, ModuleOrder::Pot), &modulus))
            .collect();
        PresentedComplex {
            ring: self.ring.clone(),
            ranks: self.ranks.clone(),
            relations,
            differentials: self.differentials.clone(),
        }
    }

    /// `dim_k H_i` for `0 <= i <= up_to`.
    pub fn homology_dims(&self, up_to: usize, artinian_support_required: bool) -> Result<Vec<Dim>> {
        self.to_presented().homology_dims(up_to, artinian_support_required)
    }

    /// `self ⊗ N`: term `i` becomes `F_i ⊗ N` with basis `e_a ⊗ g_b` at position `a * g + b`.
    pub fn tensor(&self, n: &FpModule) -> Result<PresentedComplex> {
        if n.ring().vars() != self.ring.vars() {
            return Err(AlgebraError::Shape("tensor factors live over different rings".into()));
        }
        let n = n.in_ring(&self.ring)?;
        let g = n.generator_count();
        let id = PolyMatrix::identity(&self.ring, g);
        let mut modulus: Vec<Polynomial> = self.potential.iter().cloned().collect();
        modulus.extend(n.potential().cloned());
        let relations = self
            .ranks
            .iter()
            .map(|&r| {
                let m = FreeModule::new(&self.ring, r * g, ModuleOrder::Pot);
                let mut out = modulus_relations(&m, &modulus);
                for a in 0..r {
                    for rel in n.relations() {
                        let terms = rel
                            .iter()
                            .enumerate()
                            .flat_map(|(b, p)| p.terms().iter().map(move |(mono, c)| (a * g + b, mono.clone(), c.clone())))
                            .collect();
                        let v = m.vector(terms);
                        if !v.is_zero() {
                            out.push(v);
                        }
                    }
                }
                out
            })
            .collect();
        Ok(PresentedComplex {
            ring: self.ring.clone(),
            ranks: self.ranks.iter().map(|r| r * g).collect(),
            relations,
            differentials: self.differentials.iter().map(|d| d.kron(&id)).collect(),
        })
    }

    /// Applies the ring map sending variable `i` to `images[i]` (in `target`) to
    /// every differential and to the potential.
    pub fn substitute(&self, target: &Arc<PolyRing>, images: &[Polynomial]) -> Result<FreeComplex> {
        let differentials = self
            .differentials
            .iter()
            .map(|d| d.try_map(target, |p| Ok(p.substitute(target, images)?)))
            .collect::<Result<Vec<_>>>()?;
        let potential = self.potential.as_ref().map(|w| w.substitute(target, images)).transpose()?;
        FreeComplex::new(target, potential, self.rank(0), differentials)
    }
}

impl PresentedComplex {
    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    pub fn homology_dim(&self, i: usize) -> Dim {
        let rank = self.ranks.get(i).copied().unwrap_or(0);
        if rank == 0 {
            return Dim::Finite(0);
        }
        let mid = FreeModule::new(&self.ring, rank, ModuleOrder::Pot);
        let d_in: Vec<Vector> = self.differentials.get(i).map(|d| d.column_vectors(&mid)).unwrap_or_default();
        match i.checked_sub(1).and_then(|k| self.differentials.get(k)) {
            None => homology_dim(&mid, None, &d_in, &self.relations[i], &[]),
            Some(d) => {
                let out = FreeModule::new(&self.ring, d.rows(), ModuleOrder::Pot);
                let cols = d.column_vectors(&out);
                homology_dim(&mid, Some((&out, &cols)), &d_in, &self.relations[i], &self.relations[i - 1])
            }
        }
    }

    pub fn homology_dims(&self, up_to: usize, artinian_support_required: bool) -> Result<Vec<Dim>> {
        let dims: Vec<Dim> = (0..=up_to).map(|i| self.homology_dim(i)).collect();
        if artinian_support_required {
            if let Some(i) = dims.iter().position(|d| !d.is_finite()) {
                return Err(AlgebraError::SupportNotFinite(format!("homology in degree {i} is infinite-dimensional")));
            }
        }
        Ok(dims)
    }
}
