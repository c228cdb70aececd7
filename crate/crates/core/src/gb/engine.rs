//! Buchberger's algorithm on submodules of a free module, global orders only.

use std::collections::BTreeMap;

use super::vector::{FreeModule, Vector};
use crate::poly::Monomial;

/// Order in which critical pairs are processed. Both give the same reduced
/// basis; `Fifo` exists to check exactly that.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum PairStrategy {
    /// Smallest lcm first, ties by pair indices.
    #[default]
    Normal,
    /// Pairs in creation order.
    Fifo,
}

pub(crate) fn find_reducer<'a>(basis: &'a [Vector], comp: usize, m: &Monomial) -> Option<&'a Vector> {
    basis.iter().find(|g| match g.leading() {
        Some((c, lm, _)) => *c == comp && lm.divides(m),
        None => false,
    })
}

/// Full reduction of `v` by `basis`: no term of the result is divisible by a
/// leading term of the basis (in the same component).
pub fn reduce(module: &FreeModule, v: &Vector, basis: &[Vector]) -> Vector {
    let field = module.ring().field();
    let mut p = v.clone();
    let mut rem = Vec::new();
    while let Some((c, m, x)) = p.leading().cloned() {
        match find_reducer(basis, c, &m) {
            Some(g) => {
                let (_, gm, gx) = g.leading().expect("nonzero reducer");
                let q = m.checked_div(gm).expect("divisible");
                p = module.sub_multiple(&p, &field.div(&x, gx), &q, g);
            }
            None => {
                rem.push(p.drop_leading().expect("nonempty"));
            }
        }
    }
    Vector::from_sorted(rem)
}

/// Reduces only until the leading term is irreducible.
pub fn top_reduce(module: &FreeModule, v: &Vector, basis: &[Vector]) -> Vector {
    let field = module.ring().field();
    let mut p = v.clone();
    while let Some((c, m, x)) = p.leading().cloned() {
        let Some(g) = find_reducer(basis, c, &m) else { break };
        let (_, gm, gx) = g.leading().expect("nonzero reducer");
        let q = m.checked_div(gm).expect("divisible");
        p = module.sub_multiple(&p, &field.div(&x, gx), &q, g);
    }
    p
}

pub fn s_vector(module: &FreeModule, a: &Vector, b: &Vector) -> Option<Vector> {
    let field = module.ring().field();
    let (ca, ma, xa) = a.leading()?;
    let (cb, mb, xb) = b.leading()?;
    if ca != cb {
        return None;
    }
    let l = ma.lcm(mb);
    let fa = module.mul_term(a, &l.checked_div(ma)?, &field.inv(xa)?);
    let fb = module.mul_term(b, &l.checked_div(mb)?, &field.inv(xb)?);
    Some(module.sub(&fa, &fb))
}

struct Pair {
    comp: usize,
    lcm: Monomial,
}

/// Reduced Gröbner basis of the submodule generated by `gens`: monic, inter-reduced,
/// sorted by increasing leading term.
pub fn groebner(module: &FreeModule, gens: &[Vector], strategy: PairStrategy) -> Vec<Vector> {
    assert!(module.ring().order().is_global(), "Buchberger needs a global order");
    let mut basis: Vec<Vector> = Vec::new();
    let mut pending: BTreeMap<(usize, usize), Pair> = BTreeMap::new();
    let ideal_case = module.rank() == 1;

    let add = |basis: &mut Vec<Vector>, pending: &mut BTreeMap<(usize, usize), Pair>, v: Vector| {
        let v = module.make_monic(&v);
        let (c, m, _) = v.leading().cloned().expect("nonzero");
        let j = basis.len();
        for (i, g) in basis.iter().enumerate() {
            let (gc, gm, _) = g.leading().expect("nonzero");
            if *gc == c {
                pending.insert((i, j), Pair { comp: c, lcm: gm.lcm(&m) });
            }
        }
        basis.push(v);
    };

    for g in gens {
        if !g.is_zero() {
            add(&mut basis, &mut pending, g.clone());
        }
    }

    while !pending.is_empty() {
        let key = match strategy {
            PairStrategy::Normal => {
                let mut best: Option<(&(usize, usize), &Pair)> = None;
                for (k, p) in &pending {
                    let better = match best {
                        None => true,
                        Some((_, b)) => module.cmp_terms((p.comp, &p.lcm), (b.comp, &b.lcm)).is_lt(),
                    };
                    if better {
                        best = Some((k, p));
                    }
                }
                *best.expect("nonempty").0
            }
            PairStrategy::Fifo => *pending.keys().min_by_key(|(i, j)| (*j, *i)).expect("nonempty"),
        };
        let pair = pending.remove(&key).expect("present");
        let (i, j) = key;
        let (_, mi, _) = basis[i].leading().expect("nonzero");
        let (_, mj, _) = basis[j].leading().expect("nonzero");
        if ideal_case && mi.is_coprime(mj) {
            continue;
        }
        let chain = (0..basis.len()).any(|k| {
            if k == i || k == j {
                return false;
            }
            let (kc, km, _) = basis[k].leading().expect("nonzero");
            *kc == pair.comp
                && km.divides(&pair.lcm)
                && !pending.contains_key(&(i.min(k), i.max(k)))
                && !pending.contains_key(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }
        let s = s_vector(module, &basis[i], &basis[j]).expect("same component");
        let r = reduce(module, &s, &basis);
        if !r.is_zero() {
            add(&mut basis, &mut pending, r);
        }
    }
    interreduce(module, basis)
}

/// Minimalizes, tail-reduces, normalizes and sorts a Gröbner basis.
pub fn interreduce(module: &FreeModule, basis: Vec<Vector>) -> Vec<Vector> {
    let keep: Vec<bool> = (0..basis.len())
        .map(|i| {
            let (ci, mi, _) = basis[i].leading().expect("nonzero");
            !basis.iter().enumerate().any(|(j, g)| {
                let (cj, mj, _) = g.leading().expect("nonzero");
                j != i && cj == ci && mj.divides(mi) && (mj != mi || j < i)
            })
        })
        .collect();
    let minimal: Vec<Vector> = basis.into_iter().zip(keep).filter(|(_, k)| *k).map(|(g, _)| g).collect();
    let mut out: Vec<Vector> = (0..minimal.len())
        .map(|i| {
            let others: Vec<Vector> =
                minimal.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, g)| g.clone()).collect();
            let (c, m, x) = minimal[i].leading().cloned().expect("nonzero");
            let mut tail = minimal[i].clone();
            tail.drop_leading();
            let tail = reduce(module, &tail, &others);
            let head = module.vector(vec![(c, m, x)]);
            module.make_monic(&module.add(&head, &tail))
        })
        .collect();
    out.sort_by(|a, b| {
        let (ca, ma, _) = a.leading().expect("nonzero");
        let (cb, mb, _) = b.leading().expect("nonzero");
        module.cmp_terms((*ca, ma), (*cb, mb))
    });
    out
}
