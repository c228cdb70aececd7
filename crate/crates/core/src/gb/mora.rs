//! Mora's tangent-cone normal form and standard bases for the local order.

use crate::poly::Polynomial;

fn ecart(p: &Polynomial) -> u32 {
    let top = p.total_degree().unwrap_or(0);
    top - p.leading_monomial().map(|m| m.degree()).unwrap_or(0)
}

fn reduce_step(h: &Polynomial, g: &Polynomial) -> Polynomial {
    let field = h.ring().field();
    let (hm, hc) = h.leading_term().expect("nonzero");
    let (gm, gc) = g.leading_term().expect("nonzero");
    let q = hm.checked_div(gm).expect("divisible");
    h.sub_term_multiple(&field.div(hc, gc), &q, g)
}

/// Weak normal form: returns `h` with `u*f - h` in the ideal for some local unit `u`,
/// and the leading monomial of `h` not divisible by any leading monomial of `gens`.
/// Zero exactly when `f` lies in the ideal generated in the local ring.
pub fn weak_normal_form(f: &Polynomial, gens: &[Polynomial]) -> Polynomial {
    let mut t: Vec<(Polynomial, u32)> = gens.iter().filter(|g| !g.is_zero()).map(|g| (g.clone(), ecart(g))).collect();
    let mut h = f.clone();
    while let Some(hm) = h.leading_monomial().cloned() {
        let best = t
            .iter()
            .filter(|(g, _)| g.leading_monomial().is_some_and(|gm| gm.divides(&hm)))
            .min_by_key(|(_, e)| *e)
            .cloned();
        let Some((g, eg)) = best else { break };
        let eh = ecart(&h);
        if eg > eh {
            t.push((h.clone(), eh));
        }
        h = reduce_step(&h, &g);
    }
    h
}

/// Minimal monic standard basis (leading monomials generate the leading ideal).
pub fn standard_basis(gens: &[Polynomial]) -> Vec<Polynomial> {
    let mut basis: Vec<Polynomial> = gens.iter().filter(|g| !g.is_zero()).map(Polynomial::make_monic).collect();
    let mut pairs: Vec<(usize, usize)> =
        (0..basis.len()).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    while !pairs.is_empty() {
        // lowest lcm degree first, then indices
        let pos = (0..pairs.len())
            .min_by_key(|&k| {
                let (i, j) = pairs[k];
                let l = basis[i].leading_monomial().unwrap().lcm(basis[j].leading_monomial().unwrap());
                (l.degree(), j, i)
            })
            .expect("nonempty");
        let (i, j) = pairs.swap_remove(pos);
        let s = super::ideal::s_polynomial(&basis[i], &basis[j]);
        let h = weak_normal_form(&s, &basis);
        if !h.is_zero() {
            let k = basis.len();
            basis.push(h.make_monic());
            pairs.extend((0..k).map(|i| (i, k)));
        }
    }
    let lead: Vec<_> = basis.iter().map(|g| g.leading_monomial().unwrap().clone()).collect();
    let mut out: Vec<Polynomial> = basis
        .iter()
        .enumerate()
        .filter(|(i, _)| {
            !lead.iter().enumerate().any(|(j, m)| j != *i && m.divides(&lead[*i]) && (m != &lead[*i] || j < *i))
        })
        .map(|(_, g)| g.clone())
        .collect();
    let order = out.first().map(|g| g.ring().order().clone());
    if let Some(order) = order {
        out.sort_by(|a, b| order.cmp(b.leading_monomial().unwrap(), a.leading_monomial().unwrap()));
    }
    out
}
