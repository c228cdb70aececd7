use std::sync::Arc;

use super::factorization::MatrixFactorization;
use crate::error::{AlgebraError, Result};
use crate::gb::{Dim, FreeModule, ModuleOrder, Vector};
use crate::homological::{contains, homology_dim, modulus_relations, FpModule, PolyMatrix};
use crate::poly::{PolyRing, Polynomial};

/// A Z/2-graded complex of free modules
/// `even --d_plus--> odd --d_minus--> even` over `S / (modulus)`, curved by
/// `potential`: both composites equal `potential * I`. Each part may carry
/// extra relations, so that tensor products with presented modules stay in
/// this type. Homology is taken over `S / (modulus, potential)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Z2Complex {
    ring: Arc<PolyRing>,
    potential: Polynomial,
    modulus: Vec<Polynomial>,
    d_plus: PolyMatrix,
    d_minus: PolyMatrix,
    even_relations: Vec<Vec<Polynomial>>,
    odd_relations: Vec<Vec<Polynomial>>,
}

impl Z2Complex {
    /// `d_plus` is `odd x even`, `d_minus` is `even x odd`.
    pub fn new(potential: Polynomial, modulus: Vec<Polynomial>, d_plus: PolyMatrix, d_minus: PolyMatrix) -> Result<Self> {
        if d_plus.rows() != d_minus.cols() || d_plus.cols() != d_minus.rows() {
            return Err(AlgebraError::Shape(format!(
                "d_plus is {}x{}, d_minus is {}x{}",
                d_plus.rows(),
                d_plus.cols(),
                d_minus.rows(),
                d_minus.cols()
            )));
        }
        Ok(Z2Complex {
            ring: potential.ring().clone(),
            potential,
            modulus,
            d_plus,
            d_minus,
            even_relations: Vec::new(),
            odd_relations: Vec::new(),
        })
    }

    /// Even part = the target of `A`; `d_plus = B`, `d_minus = A`.
    pub fn from_mf(mf: &MatrixFactorization) -> Self {
        Z2Complex {
            ring: mf.potential().ring().clone(),
            potential: mf.potential().clone(),
            modulus: Vec::new(),
            d_plus: mf.b().clone(),
            d_minus: mf.a().clone(),
            even_relations: Vec::new(),
            odd_relations: Vec::new(),
        }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn potential(&self) -> &Polynomial {
        &self.potential
    }

    pub fn even_rank(&self) -> usize {
        self.d_plus.cols()
    }

    pub fn odd_rank(&self) -> usize {
        self.d_plus.rows()
    }

    pub fn d_plus(&self) -> &PolyMatrix {
        &self.d_plus
    }

    pub fn d_minus(&self) -> &PolyMatrix {
        &self.d_minus
    }

    fn relation_vectors(&self, rank: usize, extra: &[Vec<Polynomial>]) -> (FreeModule, Vec<Vector>) {
        let m = FreeModule::new(&self.ring, rank, ModuleOrder::Pot);
        let mut modulus = self.modulus.clone();
        if !self.potential.is_zero() {
            modulus.push(self.potential.clone());
        }
        let mut rels = modulus_relations(&m, &modulus);
        rels.extend(extra.iter().map(|r| m.from_polys(r)).filter(|v| !v.is_zero()));
        (m, rels)
    }

    /// Checks both composites equal `potential * I` modulo the relations of the target part.
    pub fn check(&self) -> Result<()> {
        let w = &self.potential;
        for (name, prod, rank, extra) in [
            ("d_minus d_plus", self.d_minus.mul(&self.d_plus)?, self.even_rank(), &self.even_relations),
            ("d_plus d_minus", self.d_plus.mul(&self.d_minus)?, self.odd_rank(), &self.odd_relations),
        ] {
            let diff = prod.sub(&PolyMatrix::scalar(&self.ring, rank, w))?;
            let m = FreeModule::new(&self.ring, rank, ModuleOrder::Pot);
            let mut rels = modulus_relations(&m, &self.modulus);
            rels.extend(extra.iter().map(|r| m.from_polys(r)));
            for col in diff.column_vectors(&m) {
                if !col.is_zero() && !contains(&m, &rels, &col) {
                    return Err(AlgebraError::Invariant(format!("{name} differs from the potential")));
                }
            }
        }
        Ok(())
    }

    /// Shift by one: parts swap and both maps change sign.
    pub fn shift(&self) -> Z2Complex {
        Z2Complex {
            ring: self.ring.clone(),
            potential: self.potential.clone(),
            modulus: self.modulus.clone(),
            d_plus: self.d_minus.neg(),
            d_minus: self.d_plus.neg(),
            even_relations: self.odd_relations.clone(),
            odd_relations: self.even_relations.clone(),
        }
    }

    /// `self ⊗ N`, with basis `e_a ⊗ g_b` at position `a * g + b` in each part.
    pub fn tensor(&self, n: &FpModule) -> Result<Z2Complex> {
        if n.ring().vars() != self.ring.vars() {
            return Err(AlgebraError::Shape("tensor factors live over different rings".into()));
        }
        let n = n.in_ring(&self.ring)?;
        let g = n.generator_count();
        let id = PolyMatrix::identity(&self.ring, g);
        let spread = |rank: usize, own: &[Vec<Polynomial>]| -> Vec<Vec<Polynomial>> {
            let zero = Polynomial::zero(&self.ring);
            let mut out = Vec::new();
            for a in 0..rank {
                for rel in n.relations() {
                    let mut row = vec![zero.clone(); rank * g];
                    row[a * g..(a + 1) * g].clone_from_slice(rel);
                    out.push(row);
                }
            }
            // relations already on the part, copied into every generator slot of N
            for rel in own {
                for b in 0..g {
                    let mut row = vec![zero.clone(); rank * g];
                    for (a, p) in rel.iter().enumerate() {
                        row[a * g + b] = p.clone();
                    }
                    out.push(row);
                }
            }
            out
        };
        let mut modulus = self.modulus.clone();
        modulus.extend(n.potential().cloned());
        Ok(Z2Complex {
            ring: self.ring.clone(),
            potential: self.potential.clone(),
            modulus,
            d_plus: self.d_plus.kron(&id),
            d_minus: self.d_minus.kron(&id),
            even_relations: spread(self.even_rank(), &self.even_relations),
            odd_relations: spread(self.odd_rank(), &self.odd_relations),
        })
    }

    /// Applies the ring map `variable i -> images[i]` (in `target`) everywhere.
    pub fn substitute(&self, target: &Arc<PolyRing>, images: &[Polynomial]) -> Result<Z2Complex> {
        let sub = |p: &Polynomial| -> Result<Polynomial> { Ok(p.substitute(target, images)?) };
        let rows = |rs: &[Vec<Polynomial>]| -> Result<Vec<Vec<Polynomial>>> {
            rs.iter().map(|r| r.iter().map(sub).collect()).collect()
        };
        Ok(Z2Complex {
            ring: target.clone(),
            potential: sub(&self.potential)?,
            modulus: self.modulus.iter().map(sub).collect::<Result<_>>()?,
            d_plus: self.d_plus.try_map(target, sub)?,
            d_minus: self.d_minus.try_map(target, sub)?,
            even_relations: rows(&self.even_relations)?,
            odd_relations: rows(&self.odd_relations)?,
        })
    }

    /// `(dim H_even, dim H_odd)`: `ker d_plus / im d_minus` and `ker d_minus / im d_plus`.
    pub fn homology(&self, artinian_support_required: bool) -> Result<(Dim, Dim)> {
        let (even, even_rels) = self.relation_vectors(self.even_rank(), &self.even_relations);
        let (odd, odd_rels) = self.relation_vectors(self.odd_rank(), &self.odd_relations);
        let side = |mid: &FreeModule, out: &FreeModule, d_out: &PolyMatrix, d_in: &PolyMatrix, rm, ro| {
            if mid.rank() == 0 {
                return Dim::Finite(0);
            }
            let cols = d_out.column_vectors(out);
            homology_dim(mid, Some((out, &cols)), &d_in.column_vectors(mid), rm, ro)
        };
        let e = side(&even, &odd, &self.d_plus, &self.d_minus, &even_rels, &odd_rels);
        let o = side(&odd, &even, &self.d_minus, &self.d_plus, &odd_rels, &even_rels);
        if artinian_support_required && !(e.is_finite() && o.is_finite()) {
            return Err(AlgebraError::SupportNotFinite(format!("Z/2 homology is ({e}, {o})")));
        }
        Ok((e, o))
    }
}

/// Free-function form of [`Z2Complex::homology`].
pub fn z2_homology(z: &Z2Complex, artinian_support_required: bool) -> Result<(Dim, Dim)> {
    z.homology(artinian_support_required)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;

    #[test]
    fn node_restriction() {
        let r = PolyRing::rational(&["x"]);
        let p = |s: &str| parse_polynomial(s, &r).unwrap();
        let one = |s: &str| PolyMatrix::scalar(&r, 1, &p(s));
        let z = Z2Complex::new(Polynomial::zero(&r), vec![], one("0"), one("2*x")).unwrap();
        z.check().unwrap();
        assert_eq!(z.homology(true).unwrap(), (Dim::Finite(1), Dim::Finite(0)));
        assert_eq!(z.shift().homology(true).unwrap(), (Dim::Finite(0), Dim::Finite(1)));
        let zero = Z2Complex::new(Polynomial::zero(&r), vec![], PolyMatrix::zeros(&r, 0, 0), PolyMatrix::zeros(&r, 0, 0))
            .unwrap();
        assert_eq!(zero.homology(true).unwrap(), (Dim::Finite(0), Dim::Finite(0)));
    }

    #[test]
    fn infinite_homology_is_flagged() {
        let r = PolyRing::rational(&["x"]);
        let z = Z2Complex::new(Polynomial::zero(&r), vec![], PolyMatrix::zeros(&r, 1, 1), PolyMatrix::zeros(&r, 1, 1))
            .unwrap();
        assert_eq!(z.homology(false).unwrap(), (Dim::Infinite, Dim::Infinite));
        assert!(matches!(z.homology(true), Err(AlgebraError::SupportNotFinite(_))));
    }
}
