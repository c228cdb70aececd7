use super::{PolyError, Polynomial};

/// Division with remainder by an ordered list of divisors (global orders only).
///
/// Returns `(q, r)` with `f = sum q_i g_i + r` where no term of `r` is
/// divisible by any leading monomial of the divisors.
pub fn multivariate_divide(f: &Polynomial, divisors: &[Polynomial]) -> Result<(Vec<Polynomial>, Polynomial), PolyError> {
    let ring = f.ring();
    if !ring.order().is_global() {
        return Err(PolyError::LocalOrder);
    }
    for g in divisors {
        if g.ring() != ring {
            return Err(PolyError::RingMismatch { left: ring.to_string(), right: g.ring().to_string() });
        }
    }
    let field = ring.field();
    let mut quotients: Vec<Vec<_>> = vec![Vec::new(); divisors.len()];
    let mut remainder = Vec::new();
    let mut p = f.clone();
    while let Some((lm, lc)) = p.leading_term() {
        let hit = divisors.iter().enumerate().find_map(|(i, g)| {
            let (gm, gc) = g.leading_term()?;
            lm.checked_div(gm).map(|m| (i, m, field.div(lc, gc)))
        });
        match hit {
            Some((i, m, c)) => {
                p = p.sub_term_multiple(&c, &m, &divisors[i]);
                quotients[i].push((m, c));
            }
            None => {
                remainder.push((lm.clone(), lc.clone()));
                let rest = p.terms()[1..].to_vec();
                p = Polynomial::from_sorted_terms(ring, rest);
            }
        }
    }
    let quotients = quotients.into_iter().map(|t| Polynomial::from_terms(ring, t)).collect();
    Ok((quotients, Polynomial::from_sorted_terms(ring, remainder)))
}

/// `a / b` when `b` divides `a` exactly.
pub fn exact_quotient(a: &Polynomial, b: &Polynomial) -> Option<Polynomial> {
    if b.is_zero() {
        return None;
    }
    let global;
    let (a2, b2) = if a.ring().order().is_global() {
        (a.clone(), b.clone())
    } else {
        global = a.ring().with_order(super::MonomialOrder::Grevlex).ok()?;
        (a.in_ring(&global).ok()?, b.in_ring(&global).ok()?)
    };
    let (q, r) = multivariate_divide(&a2, std::slice::from_ref(&b2)).ok()?;
    if !r.is_zero() {
        return None;
    }
    q.into_iter().next()?.in_ring(a.ring()).ok()
}
