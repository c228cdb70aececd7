use std::cmp::Ordering;

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

/// Exponent vector of a monomial; its length is the ambient variable count.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(SmallVec<[u32; 8]>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(SmallVec::from_elem(0, nvars))
    }

    pub fn from_exponents(exps: &[u32]) -> Self {
        Monomial(SmallVec::from_slice(exps))
    }

    /// `x_var^exp` in `nvars` variables.
    pub fn var(nvars: usize, var: usize, exp: u32) -> Self {
        let mut m = Self::one(nvars);
        m.0[var] = exp;
        m
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `self / other` when `other` divides `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        Some(Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect()))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Index of the single variable if this is a pure power `x_i^e`, `e > 0`.
    pub fn pure_power_var(&self) -> Option<usize> {
        let mut found = None;
        for (i, &e) in self.0.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some(i);
            }
        }
        found
    }
}

/// Monomial orders. `Lex`, `Grevlex`, `WeightedGrevlex` and `Elimination`
/// are global (1 is the smallest monomial); `Local` is the anti-graded
/// reverse lexicographic order `ds` (1 is the largest monomial).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MonomialOrder {
    Lex,
    Grevlex,
    WeightedGrevlex(Vec<u32>),
    Local,
    /// Grevlex on the first `split` variables, ties broken by `inner` on the rest.
    Elimination { split: usize, inner: Box<MonomialOrder> },
}

fn revlex_tiebreak(a: &[u32], b: &[u32]) -> Ordering {
    // smaller exponent in the last differing variable wins
    for (x, y) in a.iter().zip(b).rev() {
        if x != y {
            return y.cmp(x);
        }
    }
    Ordering::Equal
}

impl MonomialOrder {
    pub fn is_global(&self) -> bool {
        !matches!(self, MonomialOrder::Local)
    }

    /// `Ordering::Greater` means `a` is the larger monomial.
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (ea, eb) = (a.exponents(), b.exponents());
        match self {
            MonomialOrder::Lex => ea.cmp(eb),
            MonomialOrder::Grevlex => {
                let (da, db) = (a.degree(), b.degree());
                da.cmp(&db).then_with(|| revlex_tiebreak(ea, eb))
            }
            MonomialOrder::WeightedGrevlex(w) => {
                let wd = |e: &[u32]| -> u64 { e.iter().zip(w).map(|(x, y)| *x as u64 * *y as u64).sum() };
                wd(ea).cmp(&wd(eb)).then_with(|| revlex_tiebreak(ea, eb))
            }
            MonomialOrder::Local => {
                let (da, db) = (a.degree(), b.degree());
                db.cmp(&da).then_with(|| revlex_tiebreak(ea, eb))
            }
            MonomialOrder::Elimination { split, inner } => {
                let (ha, hb) = (&ea[..*split], &eb[..*split]);
                let (da, db): (u32, u32) = (ha.iter().sum(), hb.iter().sum());
                da.cmp(&db)
                    .then_with(|| revlex_tiebreak(ha, hb))
                    .then_with(|| inner.cmp(a, b))
            }
        }
    }

    /// Checks that the order is well formed for `nvars` variables.
    pub fn validate(&self, nvars: usize) -> Result<(), String> {
        match self {
            MonomialOrder::WeightedGrevlex(w) => {
                if w.len() != nvars || w.contains(&0) {
                    return Err(format!("weighted order needs {nvars} positive weights"));
                }
            }
            MonomialOrder::Elimination { split, inner } => {
                if *split > nvars {
                    return Err(format!("elimination split {split} exceeds {nvars} variables"));
                }
                if !inner.is_global() {
                    return Err("elimination order needs a global inner order".into());
                }
                inner.validate(nvars)?;
            }
            _ => {}
        }
        Ok(())
    }
}
