use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use super::{Coefficient, Monomial, PolyError, PolyRing};

/// Sparse distributed polynomial. Terms are unique per monomial, carry
/// nonzero coefficients, and are sorted by decreasing monomial order, so
/// two polynomials over the same ring are equal iff their term lists are.
#[derive(Clone, Debug)]
pub struct Polynomial {
    ring: Arc<PolyRing>,
    terms: Vec<(Monomial, Coefficient)>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl Hash for Polynomial {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

impl Polynomial {
    pub fn zero(ring: &Arc<PolyRing>) -> Self {
        Polynomial { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn one(ring: &Arc<PolyRing>) -> Self {
        Self::constant(ring, ring.field().one())
    }

    pub fn constant(ring: &Arc<PolyRing>, c: Coefficient) -> Self {
        Self::term(ring, Monomial::one(ring.nvars()), c)
    }

    pub fn from_i64(ring: &Arc<PolyRing>, n: i64) -> Self {
        Self::constant(ring, ring.field().from_i64(n))
    }

    /// The variable `x_i`.
    pub fn var(ring: &Arc<PolyRing>, i: usize) -> Self {
        Self::term(ring, Monomial::var(ring.nvars(), i, 1), ring.field().one())
    }

    pub fn term(ring: &Arc<PolyRing>, m: Monomial, c: Coefficient) -> Self {
        assert_eq!(m.nvars(), ring.nvars(), "monomial length must match the ring");
        if ring.field().is_zero(&c) {
            return Self::zero(ring);
        }
        Polynomial { ring: ring.clone(), terms: vec![(m, c)] }
    }

    /// Builds the canonical form from arbitrary (possibly repeated, unsorted) terms.
    pub fn from_terms(ring: &Arc<PolyRing>, mut terms: Vec<(Monomial, Coefficient)>) -> Self {
        let order = ring.order();
        let field = ring.field();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        let mut out: Vec<(Monomial, Coefficient)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            assert_eq!(m.nvars(), ring.nvars(), "monomial length must match the ring");
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = field.add(lc, &c),
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| !field.is_zero(c));
        Polynomial { ring: ring.clone(), terms: out }
    }

    /// Trusts the caller that `terms` is already canonical.
    pub(crate) fn from_sorted_terms(ring: &Arc<PolyRing>, terms: Vec<(Monomial, Coefficient)>) -> Self {
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, Coefficient)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, Coefficient)> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.ring.field().is_one(&self.terms[0].1)
    }

    /// Coefficient of the monomial 1.
    pub fn constant_term(&self) -> Coefficient {
        self.terms
            .iter()
            .find(|(m, _)| m.is_one())
            .map(|(_, c)| c.clone())
            .unwrap_or_else(|| self.ring.field().zero())
    }

    pub fn coefficient_of(&self, m: &Monomial) -> Coefficient {
        self.terms
            .iter()
            .find(|(t, _)| t == m)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(|| self.ring.field().zero())
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Coefficient)> {
        self.terms.first().map(|(m, c)| (m, c))
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    pub fn leading_coefficient(&self) -> Option<&Coefficient> {
        self.terms.first().map(|(_, c)| c)
    }

    /// Maximal total degree of a term; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    fn same_ring(&self, other: &Polynomial) -> Result<(), PolyError> {
        if Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring {
            Ok(())
        } else {
            Err(PolyError::RingMismatch { left: self.ring.to_string(), right: other.ring.to_string() })
        }
    }

    fn merge(&self, other: &Polynomial, negate_other: bool) -> Polynomial {
        let order = self.ring.order();
        let field = self.ring.field();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let conv = |c: &Coefficient| if negate_other { field.neg(c) } else { c.clone() };
        while i < self.terms.len() && j < other.terms.len() {
            let (a, b) = (&self.terms[i], &other.terms[j]);
            match order.cmp(&a.0, &b.0) {
                Ordering::Greater => {
                    out.push(a.clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((b.0.clone(), conv(&b.1)));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate_other { field.sub(&a.1, &b.1) } else { field.add(&a.1, &b.1) };
                    if !field.is_zero(&c) {
                        out.push((a.0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        out.extend(other.terms[j..].iter().map(|(m, c)| (m.clone(), conv(c))));
        Polynomial { ring: self.ring.clone(), terms: out }
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.same_ring(other)?;
        Ok(self.merge(other, false))
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.same_ring(other)?;
        Ok(self.merge(other, true))
    }

    /// Exact product; fails if the operands live in different rings.
    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.same_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(&self.ring));
        }
        let field = self.ring.field();
        let (short, long) = if self.terms.len() <= other.terms.len() { (self, other) } else { (other, self) };
        let mut acc = Polynomial::zero(&self.ring);
        for (m, c) in &short.terms {
            let row: Vec<_> = long.terms.iter().map(|(n, d)| (m.mul(n), field.mul(c, d))).collect();
            acc = acc.merge(&Polynomial { ring: self.ring.clone(), terms: row }, false);
        }
        Ok(acc)
    }

    pub fn neg(&self) -> Polynomial {
        let field = self.ring.field();
        Polynomial { ring: self.ring.clone(), terms: self.terms.iter().map(|(m, c)| (m.clone(), field.neg(c))).collect() }
    }

    pub fn scale(&self, c: &Coefficient) -> Polynomial {
        let field = self.ring.field();
        if field.is_zero(c) {
            return Self::zero(&self.ring);
        }
        Polynomial { ring: self.ring.clone(), terms: self.terms.iter().map(|(m, d)| (m.clone(), field.mul(c, d))).collect() }
    }

    /// `c * m * self`.
    pub fn mul_term(&self, m: &Monomial, c: &Coefficient) -> Polynomial {
        let field = self.ring.field();
        if field.is_zero(c) {
            return Self::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(n, d)| (n.mul(m), field.mul(c, d))).collect(),
        }
    }

    /// `self - c * m * g`, the basic reduction step.
    pub fn sub_term_multiple(&self, c: &Coefficient, m: &Monomial, g: &Polynomial) -> Polynomial {
        self.merge(&g.mul_term(m, c), true)
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.ring);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Scales so that the leading coefficient is 1.
    pub fn make_monic(&self) -> Polynomial {
        match self.leading_coefficient() {
            None => self.clone(),
            Some(lc) => {
                let inv = self.ring.field().inv(lc).expect("nonzero leading coefficient");
                self.scale(&inv)
            }
        }
    }

    /// Formal partial derivative in variable `var`; the exponent factor is
    /// taken in the coefficient field, so it can vanish in characteristic p.
    pub fn partial_derivative(&self, var: usize) -> Result<Polynomial, PolyError> {
        let n = self.ring.nvars();
        if var >= n {
            return Err(PolyError::VariableOutOfRange { index: var, nvars: n });
        }
        let field = self.ring.field();
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.exponents()[var] > 0)
            .map(|(m, c)| {
                let e = m.exponents()[var];
                let mut exps = m.exponents().to_vec();
                exps[var] -= 1;
                (Monomial::from_exponents(&exps), field.mul(c, &field.from_i64(e as i64)))
            })
            .collect();
        Ok(Polynomial::from_terms(&self.ring, terms))
    }

    /// Reinterprets the polynomial in a ring with the same variables and field
    /// but possibly a different order.
    pub fn in_ring(&self, ring: &Arc<PolyRing>) -> Result<Polynomial, PolyError> {
        if !self.ring.same_variables(ring) {
            return Err(PolyError::RingMismatch { left: self.ring.to_string(), right: ring.to_string() });
        }
        if self.ring.order() == ring.order() {
            return Ok(Polynomial { ring: ring.clone(), terms: self.terms.clone() });
        }
        Ok(Polynomial::from_terms(ring, self.terms.clone()))
    }

    /// Ring homomorphism sending variable `i` to `images[i]` (all in `target`).
    pub fn substitute(&self, target: &Arc<PolyRing>, images: &[Polynomial]) -> Result<Polynomial, PolyError> {
        if images.len() != self.ring.nvars() {
            return Err(PolyError::ArityMismatch { expected: self.ring.nvars(), got: images.len() });
        }
        if target.field() != self.ring.field() {
            return Err(PolyError::RingMismatch { left: self.ring.to_string(), right: target.to_string() });
        }
        for img in images {
            img.same_ring(&Polynomial::zero(target))?;
        }
        let mut powers: Vec<Vec<Polynomial>> = images.iter().map(|p| vec![Polynomial::one(target), p.clone()]).collect();
        let mut acc = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(target, c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = &powers[i][powers[i].len() - 1] * &images[i];
                    powers[i].push(next);
                }
                t = &t * &powers[i][e as usize];
            }
            acc = &acc + &t;
        }
        Ok(acc)
    }

    /// Value of a monomial's coefficient list under a variable renaming into a larger ring:
    /// variable `i` of `self` becomes variable `map[i]` of `target`.
    pub fn rename_into(&self, target: &Arc<PolyRing>, map: &[usize]) -> Polynomial {
        let n = target.nvars();
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e = vec![0u32; n];
                for (i, &x) in m.exponents().iter().enumerate() {
                    e[map[i]] += x;
                }
                (Monomial::from_exponents(&e), c.clone())
            })
            .collect();
        Polynomial::from_terms(target, terms)
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.checked_add(rhs).expect("polynomials from different rings")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.checked_sub(rhs).expect("polynomials from different rings")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.checked_mul(rhs).expect("polynomials from different rings")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::neg(self)
    }
}

pub(crate) fn write_monomial(f: &mut impl fmt::Write, vars: &[String], m: &Monomial) -> fmt::Result {
    let mut first = true;
    for (i, &e) in m.exponents().iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            f.write_char('*')?;
        }
        first = false;
        f.write_str(&vars[i])?;
        if e > 1 {
            write!(f, "^{e}")?;
        }
    }
    Ok(())
}

/// Canonical text form: terms in decreasing order, `*` between factors, `^`
/// for powers, e.g. `3*x^2*y - 1/2*y^3`. Parses back to the same polynomial.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let field = self.ring.field();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            if k == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            let abs = c.abs_string();
            let unit = if neg { field.is_one(&field.neg(c)) } else { field.is_one(c) };
            if m.is_one() {
                f.write_str(&abs)?;
            } else {
                if !unit {
                    write!(f, "{abs}*")?;
                }
                write_monomial(f, self.ring.vars(), m)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{CoefficientField, MonomialOrder};

    fn ring() -> Arc<PolyRing> {
        PolyRing::rational(&["x", "y"])
    }

    #[test]
    fn difference_of_squares() {
        let r = ring();
        let (x, y) = (Polynomial::var(&r, 0), Polynomial::var(&r, 1));
        let p = &(&x + &y) * &(&x - &y);
        assert_eq!(p.to_string(), "x^2 - y^2");
    }

    #[test]
    fn exponent_addition() {
        let r = ring();
        let x = Polynomial::var(&r, 0);
        assert_eq!((&x.pow(2) * &x.pow(3)), x.pow(5));
        assert_eq!(x.pow(5).total_degree(), Some(5));
    }

    #[test]
    fn frobenius_mod_three() {
        let r = PolyRing::new(vec!["x".into()], CoefficientField::prime(3).unwrap(), MonomialOrder::Grevlex).unwrap();
        let x = Polynomial::var(&r, 0);
        let p = (&x + &Polynomial::one(&r)).pow(3);
        assert_eq!(p, &x.pow(3) + &Polynomial::one(&r));
    }

    #[test]
    fn derivatives() {
        let r = ring();
        let (x, y) = (Polynomial::var(&r, 0), Polynomial::var(&r, 1));
        let f = &x.pow(3) + &y.pow(5);
        assert_eq!(f.partial_derivative(0).unwrap(), x.pow(2).scale(&r.field().from_i64(3)));
        let g = &(&x.pow(2) * &y) + &y.pow(3);
        assert_eq!(g.partial_derivative(1).unwrap().to_string(), "x^2 + 3*y^2");
        assert!(matches!(g.partial_derivative(2), Err(PolyError::VariableOutOfRange { .. })));

        let r3 = PolyRing::new(vec!["x".into()], CoefficientField::prime(3).unwrap(), MonomialOrder::Grevlex).unwrap();
        assert!(Polynomial::var(&r3, 0).pow(3).partial_derivative(0).unwrap().is_zero());
    }

    #[test]
    fn ring_mismatch_is_an_error() {
        let a = Polynomial::var(&ring(), 0);
        let b = Polynomial::var(&PolyRing::rational(&["x", "z"]), 0);
        assert!(matches!(a.checked_mul(&b), Err(PolyError::RingMismatch { .. })));
    }

    #[test]
    fn printing() {
        let r = ring();
        let (x, y) = (Polynomial::var(&r, 0), Polynomial::var(&r, 1));
        let half = r.field().from_ratio(&1.into(), &2.into()).unwrap();
        let p = &(&x.pow(2) * &y).scale(&r.field().from_i64(3)) - &y.pow(3).scale(&half);
        assert_eq!(p.to_string(), "3*x^2*y - 1/2*y^3");
        assert_eq!(Polynomial::zero(&r).to_string(), "0");
        assert_eq!((&Polynomial::from_i64(&r, -1) - &x).to_string(), "-x - 1");
    }

    #[test]
    fn substitution() {
        let r = ring();
        let (x, y) = (Polynomial::var(&r, 0), Polynomial::var(&r, 1));
        let f = &x.pow(2) - &y;
        let g = f.substitute(&r, &[&x + &y, x.clone()]).unwrap();
        assert_eq!(g, &(&(&x.pow(2) + &(&x * &y).scale(&r.field().from_i64(2))) + &y.pow(2)) - &x);
    }
}
