//! Classical invariants of an isolated hypersurface singularity and the
//! comparison of the Milnor number with the self-pairing of the diagonal.

use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{AlgebraError, Result};
use crate::gb::{buchberger, standard_basis, Dim};
use crate::intersection::{build_double_ring, diagonal_module, ks_pairing};
use crate::poly::{MonomialOrder, Polynomial};

fn jacobian(f: &Polynomial) -> Result<Vec<Polynomial>> {
    (0..f.ring().nvars()).map(|i| Ok(f.partial_derivative(i)?)).collect()
}

/// Colength of the Jacobian ideal in the local ring at the origin (Mora
/// standard basis). Infinite exactly when the critical point at the origin is
/// not isolated. A point off the hypersurface or a smooth point gives 0.
pub fn milnor_number(f: &Polynomial) -> Result<Dim> {
    let local = f.ring().with_order(MonomialOrder::Local)?;
    let f = f.in_ring(&local)?;
    Ok(standard_basis(&local, &jacobian(&f)?)?.colength())
}

/// Colength of the Jacobian ideal in the polynomial ring: the sum of the
/// Milnor numbers over all critical points.
pub fn global_milnor_number(f: &Polynomial) -> Result<Dim> {
    let global = f.ring().with_order(MonomialOrder::Grevlex)?;
    let f = f.in_ring(&global)?;
    Ok(buchberger(&global, &jacobian(&f)?)?.colength())
}

/// Warnings about derivatives that vanish because of the characteristic.
pub fn characteristic_warnings(f: &Polynomial) -> Vec<String> {
    let p = f.ring().field().characteristic();
    if p == 0 {
        return Vec::new();
    }
    let vars = f.ring().vars();
    let mut out = Vec::new();
    for (m, _) in f.terms() {
        for (i, &e) in m.exponents().iter().enumerate() {
            if e > 0 && u64::from(e) % p == 0 {
                let term = Polynomial::term(f.ring(), m.clone(), f.ring().field().one());
                let w = format!("CHAR_DEGENERATE: {p} divides the exponent of {} in {term}", vars[i]);
                if !out.contains(&w) {
                    out.push(w);
                }
            }
        }
    }
    out
}

/// `Π (1/w_i - 1)` for `f` quasi-homogeneous of weighted degree 1.
pub fn milnor_orlik(f: &Polynomial, weights: &[BigRational]) -> Result<u64> {
    if weights.len() != f.ring().nvars() {
        return Err(AlgebraError::Shape(format!("{} weights for {} variables", weights.len(), f.ring().nvars())));
    }
    if weights.iter().any(|w| !w.is_positive()) {
        return Err(AlgebraError::Shape("weights must be positive".into()));
    }
    for (m, c) in f.terms() {
        let degree: BigRational =
            m.exponents().iter().zip(weights).map(|(&e, w)| w * BigRational::from_integer(e.into())).sum();
        if !degree.is_one() {
            return Err(AlgebraError::NotQuasiHomogeneous {
                term: Polynomial::term(f.ring(), m.clone(), c.clone()).to_string(),
                degree: degree.to_string(),
            });
        }
    }
    let product: BigRational = weights.iter().map(|w| w.recip() - BigRational::one()).product();
    if !product.is_integer() || product.is_negative() {
        return Err(AlgebraError::NonIntegralResult { value: product.to_string() });
    }
    product.to_integer().to_u64().ok_or(AlgebraError::NonIntegralResult { value: product.to_string() })
}

/// Comparison of the Milnor number with the diagonal self-pairing.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DmReport {
    pub f: String,
    pub n: i64,
    /// `-1` when infinite.
    pub mu: i64,
    pub pairing: i64,
    pub milnor_orlik: Option<u64>,
    pub verdict: bool,
    pub warnings: Vec<String>,
}

impl DmReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }
}

/// Computes `mu`, the self-pairing of the diagonal and, when weights are
/// supplied, the weighted-homogeneous formula.
pub fn deligne_milnor_check(f: &Polynomial, weights: Option<&[BigRational]>) -> Result<DmReport> {
    if f.is_constant() {
        return Err(AlgebraError::ConstantPolynomial);
    }
    let mu = milnor_number(f)?;
    let d = build_double_ring(f)?;
    let report = ks_pairing(&d, &diagonal_module(&d))?;
    let milnor_orlik = weights.map(|w| milnor_orlik(f, w)).transpose()?;

    let mut warnings = characteristic_warnings(f);
    let global = global_milnor_number(f)?;
    if global != mu {
        warnings.push(format!("LOCAL_GLOBAL_MISMATCH: local mu is {mu}, Jacobian colength over all critical points is {global}"));
    }
    if let (Some(mo), Dim::Finite(m)) = (milnor_orlik, mu) {
        if mo != m && f.ring().field().characteristic() == 0 {
            return Err(AlgebraError::Invariant(format!("Milnor number {m} but weighted formula gives {mo}")));
        }
    }
    Ok(DmReport {
        f: d.f().to_string(),
        n: f.ring().nvars() as i64 - 1,
        mu: mu.as_signed(),
        pairing: report.pairing,
        milnor_orlik,
        verdict: mu.finite().is_some_and(|m| m as i64 == report.pairing),
        warnings,
    })
}

/// Parses weights written as integers or fractions, e.g. `1/3`.
pub fn parse_weights(texts: &[impl AsRef<str>]) -> Result<Vec<BigRational>> {
    texts
        .iter()
        .map(|t| {
            let t = t.as_ref().trim();
            t.parse::<BigRational>().map_err(|_| AlgebraError::Shape(format!("bad weight `{t}`")))
        })
        .collect::<Result<Vec<_>>>()
        .and_then(|ws| {
            if ws.iter().any(|w| w.is_zero()) {
                Err(AlgebraError::Shape("weights must be nonzero".into()))
            } else {
                Ok(ws)
            }
        })
}
