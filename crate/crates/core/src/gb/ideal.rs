use std::sync::Arc;

use super::engine::{self, PairStrategy};
use super::mora;
use super::staircase::{Dim, Staircase};
use super::vector::{FreeModule, ModuleOrder, Vector};
use super::GbError;
use crate::poly::{Monomial, PolyRing, Polynomial};

/// A Gröbner basis (global order) or standard basis (local order) of an ideal.
///
/// Global bases are reduced and monic. Local standard bases are minimal and
/// monic but keep their tails, since tails cannot be fully reduced locally.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    ring: Arc<PolyRing>,
    generators: Vec<Polynomial>,
    source: Vec<Polynomial>,
}

fn rank_one(ring: &Arc<PolyRing>) -> FreeModule {
    FreeModule::new(ring, 1, ModuleOrder::Pot)
}

fn import(ring: &Arc<PolyRing>, gens: &[Polynomial]) -> Result<Vec<Polynomial>, GbError> {
    gens.iter()
        .map(|g| g.in_ring(ring).map_err(GbError::Poly))
        .filter(|g| !matches!(g, Ok(p) if p.is_zero()))
        .collect()
}

impl GroebnerBasis {
    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    /// The generators the basis was computed from.
    pub fn source(&self) -> &[Polynomial] {
        &self.source
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.generators.iter().filter_map(|g| g.leading_monomial().cloned()).collect()
    }

    pub fn staircase(&self) -> Staircase {
        let lead = self.leading_monomials().into_iter().map(|m| (0, m)).collect();
        Staircase::new(self.ring.nvars(), 1, lead)
    }

    /// `dim_k` of the quotient ring: global for global orders, at the origin for the local order.
    pub fn colength(&self) -> Dim {
        self.staircase().dim()
    }

    /// Unique remainder for global orders; Mora weak normal form for the local order
    /// (zero iff `f` lies in the localized ideal).
    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial, GbError> {
        let f = f.in_ring(&self.ring).map_err(GbError::Poly)?;
        if self.ring.order().is_global() {
            let module = rank_one(&self.ring);
            let basis: Vec<Vector> = self.generators.iter().map(|g| module.from_poly_at(0, g)).collect();
            let r = engine::reduce(&module, &module.from_poly_at(0, &f), &basis);
            Ok(module.component(&r, 0))
        } else {
            Ok(mora::weak_normal_form(&f, &self.generators))
        }
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool, GbError> {
        Ok(self.normal_form(f)?.is_zero())
    }
}

/// Reduced Gröbner basis of the ideal generated by `generators`, computed in `ring`
/// (whose order must be global). Generators from a ring with the same variables
/// but another order are re-sorted first.
pub fn buchberger(ring: &Arc<PolyRing>, generators: &[Polynomial]) -> Result<GroebnerBasis, GbError> {
    buchberger_with(ring, generators, PairStrategy::Normal)
}

pub fn buchberger_with(
    ring: &Arc<PolyRing>,
    generators: &[Polynomial],
    strategy: PairStrategy,
) -> Result<GroebnerBasis, GbError> {
    if !ring.order().is_global() {
        return Err(GbError::LocalOrder);
    }
    let gens = import(ring, generators)?;
    let module = rank_one(ring);
    let vecs: Vec<Vector> = gens.iter().map(|g| module.from_poly_at(0, g)).collect();
    let basis = engine::groebner(&module, &vecs, strategy);
    Ok(GroebnerBasis {
        ring: ring.clone(),
        generators: basis.iter().map(|v| module.component(v, 0)).collect(),
        source: generators.to_vec(),
    })
}

/// Standard basis for the local order via Mora's tangent-cone normal form.
pub fn standard_basis(ring: &Arc<PolyRing>, generators: &[Polynomial]) -> Result<GroebnerBasis, GbError> {
    if ring.order().is_global() {
        return Err(GbError::GlobalOrder);
    }
    let gens = import(ring, generators)?;
    Ok(GroebnerBasis { ring: ring.clone(), generators: mora::standard_basis(&gens), source: generators.to_vec() })
}

/// Normal form of `f` modulo `gb`.
pub fn normal_form(f: &Polynomial, gb: &GroebnerBasis) -> Result<Polynomial, GbError> {
    gb.normal_form(f)
}

/// The S-polynomial of two polynomials (global or local order).
pub fn s_polynomial(a: &Polynomial, b: &Polynomial) -> Polynomial {
    let module = rank_one(a.ring());
    match engine::s_vector(&module, &module.from_poly_at(0, a), &module.from_poly_at(0, b)) {
        Some(v) => module.component(&v, 0),
        None => Polynomial::zero(a.ring()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::{parse_polynomial, parse_polynomial_list};
    use crate::poly::{CoefficientField, MonomialOrder};

    fn grevlex() -> Arc<PolyRing> {
        PolyRing::rational(&["x", "y"])
    }

    fn local(vars: &[&str]) -> Arc<PolyRing> {
        PolyRing::new(vars.iter().map(|s| s.to_string()).collect(), CoefficientField::Rational, MonomialOrder::Local).unwrap()
    }

    #[test]
    fn one_s_pair_example() {
        let r = grevlex();
        let gb = buchberger(&r, &parse_polynomial_list("x^2 + y^2, x*y", &r).unwrap()).unwrap();
        let expect = parse_polynomial_list("x*y, x^2 + y^2, y^3", &r).unwrap();
        assert_eq!(gb.generators(), &expect[..]);
        let f = parse_polynomial("x^2*y^2", &r).unwrap();
        assert!(gb.normal_form(&f).unwrap().is_zero());
        assert_eq!(gb.colength(), Dim::Finite(4));
    }

    #[test]
    fn jacobian_of_d4_shape() {
        let r = grevlex();
        let gb = buchberger(&r, &parse_polynomial_list("3*x^2, 3*y^2", &r).unwrap()).unwrap();
        assert_eq!(gb.generators(), &parse_polynomial_list("y^2, x^2", &r).unwrap()[..]);
        assert_eq!(gb.colength(), Dim::Finite(4));
    }

    #[test]
    fn membership_examples() {
        let r = grevlex();
        let gb = buchberger(&r, &parse_polynomial_list("x^2", &r).unwrap()).unwrap();
        assert!(gb.contains(&parse_polynomial("x^3", &r).unwrap()).unwrap());
        let f = parse_polynomial("x + 1", &r).unwrap();
        assert_eq!(gb.normal_form(&f).unwrap(), f);
        assert_eq!(gb.colength(), Dim::Infinite);
        let empty = buchberger(&r, &[]).unwrap();
        assert!(empty.generators().is_empty());
        assert!(matches!(buchberger(&local(&["x"]), &[]), Err(GbError::LocalOrder)));
    }

    #[test]
    fn colength_examples() {
        let r = grevlex();
        let c = |s: &str| buchberger(&r, &parse_polynomial_list(s, &r).unwrap()).unwrap().colength();
        assert_eq!(c("x, y"), Dim::Finite(1));
        assert_eq!(c("x^2, y^2"), Dim::Finite(4));
        assert_eq!(c("x"), Dim::Infinite);
        assert_eq!(c("1"), Dim::Finite(0));
    }

    #[test]
    fn strategies_agree() {
        let r = PolyRing::rational(&["x", "y", "z"]);
        let gens = parse_polynomial_list("x^2 - y*z, y^2 - x*z + 1, z^3 - x", &r).unwrap();
        let a = buchberger_with(&r, &gens, PairStrategy::Normal).unwrap();
        let b = buchberger_with(&r, &gens, PairStrategy::Fifo).unwrap();
        assert_eq!(a.generators(), b.generators());
    }

    #[test]
    fn local_unit_factor_disappears() {
        let r = local(&["x"]);
        let sb = standard_basis(&r, &parse_polynomial_list("x - x^2", &r).unwrap()).unwrap();
        assert_eq!(sb.leading_monomials(), vec![Monomial::from_exponents(&[1])]);
        assert_eq!(sb.colength(), Dim::Finite(1));
        let sb = standard_basis(&r, &parse_polynomial_list("2*x + 3*x^2", &r).unwrap()).unwrap();
        assert_eq!(sb.colength(), Dim::Finite(1));
        let sb = standard_basis(&r, &parse_polynomial_list("x^2", &r).unwrap()).unwrap();
        assert_eq!(sb.colength(), Dim::Finite(2));
        assert!(matches!(standard_basis(&grevlex(), &[]), Err(GbError::GlobalOrder)));
    }

    #[test]
    fn local_versus_global_colength() {
        let g = PolyRing::rational(&["x"]);
        let j = parse_polynomial_list("2*x + 3*x^2", &g).unwrap();
        assert_eq!(buchberger(&g, &j).unwrap().colength(), Dim::Finite(2));
        let l = local(&["x", "y"]);
        let sb = standard_basis(&l, &parse_polynomial_list("3*x^2 + y^3, 3*x*y^2", &l).unwrap()).unwrap();
        assert_eq!(sb.colength(), Dim::Finite(7));
        let sb = standard_basis(&l, &parse_polynomial_list("x^2 + x^3, y^2", &l).unwrap()).unwrap();
        assert!(sb.contains(&parse_polynomial("x^2", &l).unwrap()).unwrap());
    }
}
