use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::PolyError;

/// Default characteristic for modular computations.
pub const DEFAULT_PRIME: u64 = 32003;

/// A coefficient value. Rationals are kept in lowest terms with a positive
/// denominator (guaranteed by `BigRational`); modular values live in `[0, p)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Coefficient {
    Rational(BigRational),
    Modular(u64),
}

/// The coefficient field of a polynomial ring: `Q` or `F_p` for an odd prime `p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CoefficientField {
    Rational,
    Prime(u64),
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl CoefficientField {
    /// `F_p`; rejects `p = 2`, composites, and moduli too large for `u64` products.
    pub fn prime(p: u64) -> Result<Self, PolyError> {
        if p == 2 || p >= (1 << 31) || !is_prime(p) {
            return Err(PolyError::BadCharacteristic(p));
        }
        Ok(CoefficientField::Prime(p))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            CoefficientField::Rational => 0,
            CoefficientField::Prime(p) => *p,
        }
    }

    pub fn zero(&self) -> Coefficient {
        match self {
            CoefficientField::Rational => Coefficient::Rational(BigRational::zero()),
            CoefficientField::Prime(_) => Coefficient::Modular(0),
        }
    }

    pub fn one(&self) -> Coefficient {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Coefficient {
        match self {
            CoefficientField::Rational => Coefficient::Rational(BigRational::from_integer(n.into())),
            CoefficientField::Prime(p) => Coefficient::Modular(n.rem_euclid(*p as i64) as u64),
        }
    }

    pub fn from_bigint(&self, n: &BigInt) -> Coefficient {
        match self {
            CoefficientField::Rational => Coefficient::Rational(BigRational::from_integer(n.clone())),
            CoefficientField::Prime(p) => {
                let r = n.mod_floor(&BigInt::from(*p));
                Coefficient::Modular(r.to_u64().expect("reduced residue fits in u64"))
            }
        }
    }

    /// `num/den` in this field; fails when `den` vanishes in the field.
    pub fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<Coefficient, PolyError> {
        match self {
            CoefficientField::Rational => {
                if den.is_zero() {
                    return Err(PolyError::DivisionByZero);
                }
                Ok(Coefficient::Rational(BigRational::new(num.clone(), den.clone())))
            }
            CoefficientField::Prime(p) => {
                let d = self.from_bigint(den);
                if self.is_zero(&d) {
                    return Err(PolyError::DenominatorVanishes { prime: *p });
                }
                let n = self.from_bigint(num);
                Ok(self.div(&n, &d))
            }
        }
    }

    /// Converts a rational into this field (reduction mod p for `F_p`).
    pub fn from_rational(&self, q: &BigRational) -> Result<Coefficient, PolyError> {
        self.from_ratio(q.numer(), q.denom())
    }

    pub fn is_zero(&self, a: &Coefficient) -> bool {
        match a {
            Coefficient::Rational(q) => q.is_zero(),
            Coefficient::Modular(v) => *v == 0,
        }
    }

    pub fn is_one(&self, a: &Coefficient) -> bool {
        match a {
            Coefficient::Rational(q) => q.is_one(),
            Coefficient::Modular(v) => *v == 1,
        }
    }

    pub fn add(&self, a: &Coefficient, b: &Coefficient) -> Coefficient {
        match (self, a, b) {
            (_, Coefficient::Rational(x), Coefficient::Rational(y)) => Coefficient::Rational(x + y),
            (CoefficientField::Prime(p), Coefficient::Modular(x), Coefficient::Modular(y)) => {
                Coefficient::Modular((x + y) % p)
            }
            _ => panic!("coefficient from a different field"),
        }
    }

    pub fn neg(&self, a: &Coefficient) -> Coefficient {
        match (self, a) {
            (_, Coefficient::Rational(x)) => Coefficient::Rational(-x),
            (CoefficientField::Prime(p), Coefficient::Modular(x)) => Coefficient::Modular((p - x) % p),
            _ => panic!("coefficient from a different field"),
        }
    }

    pub fn sub(&self, a: &Coefficient, b: &Coefficient) -> Coefficient {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Coefficient, b: &Coefficient) -> Coefficient {
        match (self, a, b) {
            (_, Coefficient::Rational(x), Coefficient::Rational(y)) => Coefficient::Rational(x * y),
            (CoefficientField::Prime(p), Coefficient::Modular(x), Coefficient::Modular(y)) => {
                Coefficient::Modular(x * y % p)
            }
            _ => panic!("coefficient from a different field"),
        }
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self, a: &Coefficient) -> Option<Coefficient> {
        if self.is_zero(a) {
            return None;
        }
        Some(match (self, a) {
            (_, Coefficient::Rational(x)) => Coefficient::Rational(x.recip()),
            (CoefficientField::Prime(p), Coefficient::Modular(x)) => Coefficient::Modular(pow_mod(*x, p - 2, *p)),
            _ => panic!("coefficient from a different field"),
        })
    }

    /// `a / b`; panics if `b` is zero.
    pub fn div(&self, a: &Coefficient, b: &Coefficient) -> Coefficient {
        self.mul(a, &self.inv(b).expect("division by zero coefficient"))
    }

    /// The rational value of a coefficient over `Q`; `None` over `F_p`.
    pub fn as_rational<'a>(&self, a: &'a Coefficient) -> Option<&'a BigRational> {
        match a {
            Coefficient::Rational(q) => Some(q),
            Coefficient::Modular(_) => None,
        }
    }
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

impl Coefficient {
    /// True for values printed with a leading minus sign (negative rationals only).
    pub fn is_negative(&self) -> bool {
        match self {
            Coefficient::Rational(q) => q.is_negative(),
            Coefficient::Modular(_) => false,
        }
    }

    pub(crate) fn abs_string(&self) -> String {
        match self {
            Coefficient::Rational(q) => q.abs().to_string(),
            Coefficient::Modular(v) => v.to_string(),
        }
    }
}

impl fmt::Display for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coefficient::Rational(q) => write!(f, "{q}"),
            Coefficient::Modular(v) => write!(f, "{v}"),
        }
    }
}

impl fmt::Display for CoefficientField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoefficientField::Rational => write!(f, "q"),
            CoefficientField::Prime(p) => write!(f, "fp:{p}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_are_canonical() {
        let q = CoefficientField::Rational;
        let c = q.from_ratio(&BigInt::from(4), &BigInt::from(-6)).unwrap();
        assert_eq!(c, Coefficient::Rational(BigRational::new((-2).into(), 3.into())));
        assert_eq!(c.to_string(), "-2/3");
    }

    #[test]
    fn modular_arithmetic() {
        let f = CoefficientField::prime(7).unwrap();
        let a = f.from_i64(-1);
        assert_eq!(a, Coefficient::Modular(6));
        assert_eq!(f.mul(&a, &a), f.one());
        let three = f.from_i64(3);
        assert_eq!(f.mul(&three, &f.inv(&three).unwrap()), f.one());
        assert!(f.from_ratio(&BigInt::from(1), &BigInt::from(14)).is_err());
    }

    #[test]
    fn rejects_bad_primes() {
        assert!(CoefficientField::prime(2).is_err());
        assert!(CoefficientField::prime(9).is_err());
        assert!(CoefficientField::prime(DEFAULT_PRIME).is_ok());
    }
}
