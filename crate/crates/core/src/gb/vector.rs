use std::cmp::Ordering;
use std::sync::Arc;

use crate::poly::{Coefficient, Monomial, PolyRing, Polynomial};

/// How module terms `(component, monomial)` are compared.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ModuleOrder {
    /// Position over term: component 0 dominates, then the ring order.
    Pot,
    /// Term over position: the ring order first, ties broken by component.
    Top,
}

/// A free module `S^rank` with a term order; the context for [`Vector`] arithmetic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeModule {
    ring: Arc<PolyRing>,
    rank: usize,
    order: ModuleOrder,
}

pub type VTerm = (usize, Monomial, Coefficient);

/// An element of a free module: terms sorted decreasingly in the module order.
/// Carries no context; every operation goes through a [`FreeModule`].
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Vector {
    terms: Vec<VTerm>,
}

impl FreeModule {
    pub fn new(ring: &Arc<PolyRing>, rank: usize, order: ModuleOrder) -> Self {
        FreeModule { ring: ring.clone(), rank, order }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn order(&self) -> ModuleOrder {
        self.order
    }

    pub fn cmp_terms(&self, a: (usize, &Monomial), b: (usize, &Monomial)) -> Ordering {
        let ro = self.ring.order();
        match self.order {
            ModuleOrder::Pot => b.0.cmp(&a.0).then_with(|| ro.cmp(a.1, b.1)),
            ModuleOrder::Top => ro.cmp(a.1, b.1).then_with(|| b.0.cmp(&a.0)),
        }
    }

    pub fn zero(&self) -> Vector {
        Vector::default()
    }

    /// The basis vector `e_i`.
    pub fn basis(&self, i: usize) -> Vector {
        assert!(i < self.rank);
        Vector { terms: vec![(i, Monomial::one(self.ring.nvars()), self.ring.field().one())] }
    }

    /// Canonicalizes arbitrary terms.
    pub fn vector(&self, mut terms: Vec<VTerm>) -> Vector {
        let field = self.ring.field();
        terms.sort_by(|a, b| self.cmp_terms((b.0, &b.1), (a.0, &a.1)));
        let mut out: Vec<VTerm> = Vec::with_capacity(terms.len());
        for (c, m, x) in terms {
            debug_assert!(c < self.rank);
            match out.last_mut() {
                Some((lc, lm, lx)) if *lc == c && *lm == m => *lx = field.add(lx, &x),
                _ => out.push((c, m, x)),
            }
        }
        out.retain(|t| !field.is_zero(&t.2));
        Vector { terms: out }
    }

    /// Vector whose `i`-th component is `polys[i]`.
    pub fn from_polys(&self, polys: &[Polynomial]) -> Vector {
        assert_eq!(polys.len(), self.rank, "component count must match the rank");
        let mut terms = Vec::new();
        for (i, p) in polys.iter().enumerate() {
            terms.extend(p.terms().iter().map(|(m, c)| (i, m.clone(), c.clone())));
        }
        self.vector(terms)
    }

    /// Places `p` in component `i`.
    pub fn from_poly_at(&self, i: usize, p: &Polynomial) -> Vector {
        Vector { terms: p.terms().iter().map(|(m, c)| (i, m.clone(), c.clone())).collect() }.resorted(self)
    }

    pub fn component(&self, v: &Vector, i: usize) -> Polynomial {
        let terms = v.terms.iter().filter(|t| t.0 == i).map(|t| (t.1.clone(), t.2.clone())).collect();
        Polynomial::from_terms(&self.ring, terms)
    }

    pub fn to_polys(&self, v: &Vector) -> Vec<Polynomial> {
        let mut buckets: Vec<Vec<(Monomial, Coefficient)>> = vec![Vec::new(); self.rank];
        for (c, m, x) in &v.terms {
            buckets[*c].push((m.clone(), x.clone()));
        }
        buckets.into_iter().map(|t| Polynomial::from_terms(&self.ring, t)).collect()
    }

    fn merge(&self, a: &Vector, b: &Vector, negate_b: bool) -> Vector {
        let field = self.ring.field();
        let mut out = Vec::with_capacity(a.terms.len() + b.terms.len());
        let (mut i, mut j) = (0, 0);
        let conv = |x: &Coefficient| if negate_b { field.neg(x) } else { x.clone() };
        while i < a.terms.len() && j < b.terms.len() {
            let (s, t) = (&a.terms[i], &b.terms[j]);
            match self.cmp_terms((s.0, &s.1), (t.0, &t.1)) {
                Ordering::Greater => {
                    out.push(s.clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((t.0, t.1.clone(), conv(&t.2)));
                    j += 1;
                }
                Ordering::Equal => {
                    let x = if negate_b { field.sub(&s.2, &t.2) } else { field.add(&s.2, &t.2) };
                    if !field.is_zero(&x) {
                        out.push((s.0, s.1.clone(), x));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a.terms[i..].iter().cloned());
        out.extend(b.terms[j..].iter().map(|t| (t.0, t.1.clone(), conv(&t.2))));
        Vector { terms: out }
    }

    pub fn add(&self, a: &Vector, b: &Vector) -> Vector {
        self.merge(a, b, false)
    }

    pub fn sub(&self, a: &Vector, b: &Vector) -> Vector {
        self.merge(a, b, true)
    }

    pub fn scale(&self, v: &Vector, c: &Coefficient) -> Vector {
        let field = self.ring.field();
        if field.is_zero(c) {
            return Vector::default();
        }
        Vector { terms: v.terms.iter().map(|(i, m, x)| (*i, m.clone(), field.mul(c, x))).collect() }
    }

    /// `c * m * v`; multiplication by a monomial preserves the term order.
    pub fn mul_term(&self, v: &Vector, m: &Monomial, c: &Coefficient) -> Vector {
        let field = self.ring.field();
        if field.is_zero(c) {
            return Vector::default();
        }
        Vector { terms: v.terms.iter().map(|(i, n, x)| (*i, n.mul(m), field.mul(c, x))).collect() }
    }

    /// `p * v` for a polynomial `p`.
    pub fn mul_poly(&self, v: &Vector, p: &Polynomial) -> Vector {
        let mut acc = Vector::default();
        for (m, c) in p.terms() {
            acc = self.add(&acc, &self.mul_term(v, m, c));
        }
        acc
    }

    /// `a - c * m * b`.
    pub fn sub_multiple(&self, a: &Vector, c: &Coefficient, m: &Monomial, b: &Vector) -> Vector {
        self.merge(a, &self.mul_term(b, m, c), true)
    }

    pub fn make_monic(&self, v: &Vector) -> Vector {
        match v.terms.first() {
            None => v.clone(),
            Some(t) => {
                let inv = self.ring.field().inv(&t.2).expect("nonzero leading coefficient");
                self.scale(v, &inv)
            }
        }
    }

    /// Drops components `< from` and renumbers the rest starting at zero.
    pub fn project_tail(&self, v: &Vector, from: usize, target: &FreeModule) -> Vector {
        let terms = v.terms.iter().filter(|t| t.0 >= from).map(|t| (t.0 - from, t.1.clone(), t.2.clone())).collect();
        target.vector(terms)
    }

    /// Shifts every component index up by `offset` into `target`.
    pub fn embed(&self, v: &Vector, offset: usize, target: &FreeModule) -> Vector {
        target.vector(v.terms.iter().map(|t| (t.0 + offset, t.1.clone(), t.2.clone())).collect())
    }
}

impl Vector {
    pub fn terms(&self) -> &[VTerm] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading(&self) -> Option<&VTerm> {
        self.terms.first()
    }

    /// Smallest component index carrying a nonzero term.
    pub fn min_component(&self) -> Option<usize> {
        self.terms.iter().map(|t| t.0).min()
    }

    pub(crate) fn from_sorted(terms: Vec<VTerm>) -> Self {
        Vector { terms }
    }

    pub(crate) fn drop_leading(&mut self) -> Option<VTerm> {
        if self.terms.is_empty() {
            None
        } else {
            Some(self.terms.remove(0))
        }
    }

    fn resorted(self, module: &FreeModule) -> Vector {
        module.vector(self.terms)
    }
}
