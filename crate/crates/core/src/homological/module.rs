use std::sync::Arc;

use super::matrix::PolyMatrix;
use super::ops::{colength, modulus_relations};
use crate::error::{AlgebraError, Result};
use crate::gb::{groebner, Dim, FreeModule, ModuleOrder, PairStrategy, Vector};
use crate::poly::{PolyRing, Polynomial};

/// A finitely presented module `S^g / <relations>` over `S`, or over the
/// hypersurface ring `S/(W)` when a potential `W` is attached; the multiples
/// `W e_i` are then imposed implicitly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FpModule {
    ring: Arc<PolyRing>,
    potential: Option<Polynomial>,
    generators: usize,
    relations: Vec<Vec<Polynomial>>,
}

impl FpModule {
    pub fn new(
        ring: &Arc<PolyRing>,
        potential: Option<Polynomial>,
        generators: usize,
        relations: Vec<Vec<Polynomial>>,
    ) -> Result<Self> {
        if !ring.order().is_global() {
            return Err(AlgebraError::Gb(crate::gb::GbError::LocalOrder));
        }
        let potential = potential.map(|w| w.in_ring(ring)).transpose()?.filter(|w| !w.is_zero());
        let mut rels = Vec::with_capacity(relations.len());
        for r in relations {
            if r.len() != generators {
                return Err(AlgebraError::Shape(format!("relation of length {} for {generators} generators", r.len())));
            }
            rels.push(r.iter().map(|p| p.in_ring(ring)).collect::<std::result::Result<Vec<_>, _>>()?);
        }
        Ok(FpModule { ring: ring.clone(), potential, generators, relations: rels })
    }

    /// `R / (ideal)`.
    pub fn cyclic(ring: &Arc<PolyRing>, potential: Option<Polynomial>, ideal: &[Polynomial]) -> Result<Self> {
        Self::new(ring, potential, 1, ideal.iter().map(|p| vec![p.clone()]).collect())
    }

    pub fn free(ring: &Arc<PolyRing>, potential: Option<Polynomial>, rank: usize) -> Result<Self> {
        Self::new(ring, potential, rank, Vec::new())
    }

    /// Cokernel of `matrix` viewed as a map `R^cols -> R^rows`.
    pub fn cokernel(ring: &Arc<PolyRing>, potential: Option<Polynomial>, matrix: &PolyMatrix) -> Result<Self> {
        Self::new(ring, potential, matrix.rows(), matrix.columns())
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn potential(&self) -> Option<&Polynomial> {
        self.potential.as_ref()
    }

    /// The potential as a (possibly empty) list of ideal generators.
    pub fn modulus(&self) -> Vec<Polynomial> {
        self.potential.iter().cloned().collect()
    }

    pub fn generator_count(&self) -> usize {
        self.generators
    }

    pub fn relations(&self) -> &[Vec<Polynomial>] {
        &self.relations
    }

    pub fn free_module(&self) -> FreeModule {
        FreeModule::new(&self.ring, self.generators, ModuleOrder::Pot)
    }

    /// Relations as vectors, including the implicit `W e_i`.
    pub fn relation_vectors(&self) -> Vec<Vector> {
        let m = self.free_module();
        let mut out: Vec<Vector> = self.relations.iter().map(|r| m.from_polys(r)).filter(|v| !v.is_zero()).collect();
        out.extend(modulus_relations(&m, &self.modulus()));
        out
    }

    /// Presentation matrix: one row per explicit relation.
    pub fn presentation_matrix(&self) -> PolyMatrix {
        PolyMatrix::from_rows(&self.ring, self.relations.clone())
            .unwrap_or_else(|_| PolyMatrix::zeros(&self.ring, 0, self.generators))
    }

    /// `dim_k` of the module.
    pub fn dim(&self) -> Dim {
        let m = self.free_module();
        colength(&m, &groebner(&m, &self.relation_vectors(), PairStrategy::Normal))
    }

    /// Removes generators that a relation with a nonzero constant entry expresses
    /// in terms of the others. The result is isomorphic to `self`.
    pub fn pruned(&self) -> FpModule {
        let field = self.ring.field();
        let mut gens = self.generators;
        let mut rels = self.relations.clone();
        loop {
            let hit = rels.iter().enumerate().find_map(|(k, r)| {
                r.iter().position(|p| p.is_constant() && !p.is_zero()).map(|i| (k, i))
            });
            let Some((k, i)) = hit else { break };
            let pivot = rels.remove(k);
            let u = pivot[i].constant_term();
            let inv = field.inv(&u).expect("nonzero constant");
            rels = rels
                .into_iter()
                .map(|r| {
                    let factor = r[i].scale(&inv);
                    let mut out: Vec<Polynomial> =
                        r.iter().zip(&pivot).map(|(a, b)| a - &(&factor * b)).collect();
                    out.remove(i);
                    out
                })
                .collect();
            gens -= 1;
        }
        rels.retain(|r| r.iter().any(|p| !p.is_zero()));
        FpModule { ring: self.ring.clone(), potential: self.potential.clone(), generators: gens, relations: rels }
    }

    /// Same module with every entry rewritten in `ring` (same variables, other order).
    pub fn in_ring(&self, ring: &Arc<PolyRing>) -> Result<FpModule> {
        FpModule::new(ring, self.potential.clone(), self.generators, self.relations.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;

    #[test]
    fn dimensions() {
        let r = PolyRing::rational(&["x", "y"]);
        let p = |s: &str| parse_polynomial(s, &r).unwrap();
        assert_eq!(FpModule::cyclic(&r, None, &[p("x"), p("y")]).unwrap().dim(), Dim::Finite(1));
        assert_eq!(FpModule::cyclic(&r, None, &[p("x^2"), p("y^2")]).unwrap().dim(), Dim::Finite(4));
        assert_eq!(FpModule::cyclic(&r, Some(p("y^3")), &[p("x^2")]).unwrap().dim(), Dim::Finite(6));
        assert_eq!(FpModule::free(&r, None, 2).unwrap().dim(), Dim::Infinite);
    }

    #[test]
    fn pruning_unit_relations() {
        let r = PolyRing::rational(&["x"]);
        let p = |s: &str| parse_polynomial(s, &r).unwrap();
        // e0 = x e1 and x^2 e1 = 0: isomorphic to k[x]/(x^2) after pruning
        let m = FpModule::new(&r, None, 2, vec![vec![p("1"), p("-x")], vec![p("0"), p("x^2")]]).unwrap();
        let q = m.pruned();
        assert_eq!(q.generator_count(), 1);
        assert_eq!(q.dim(), Dim::Finite(2));
        assert_eq!(m.dim(), Dim::Finite(2));
    }
}
