//! Submodule computations in free modules: kernels, membership, minimal
//! generators, and subquotient dimensions. Everything reduces to Gröbner
//! bases of augmented vectors under position-over-term orders.

use crate::gb::{groebner, reduce, Dim, FreeModule, ModuleOrder, PairStrategy, Staircase, Vector};
use crate::poly::Polynomial;

/// `{u in S^n : sum u_i images_i lies in <relations>}`, where `images` and
/// `relations` are vectors of `target`. Returns a reduced Gröbner basis of that
/// submodule of `S^n` (position over term).
///
/// Each image is paired with a fresh basis vector below it; eliminating the top
/// block leaves exactly the relations among the images.
pub fn kernel_modulo(target: &FreeModule, images: &[Vector], relations: &[Vector]) -> Vec<Vector> {
    let ring = target.ring();
    let (r, n) = (target.rank(), images.len());
    let aug = FreeModule::new(ring, r + n, ModuleOrder::Pot);
    let src = FreeModule::new(ring, n, ModuleOrder::Pot);
    let mut gens: Vec<Vector> = images
        .iter()
        .enumerate()
        .map(|(j, v)| aug.add(&target.embed(v, 0, &aug), &aug.basis(r + j)))
        .collect();
    gens.extend(relations.iter().map(|v| target.embed(v, 0, &aug)));
    groebner(&aug, &gens, PairStrategy::Normal)
        .into_iter()
        .filter(|g| g.min_component().is_some_and(|c| c >= r))
        .map(|g| aug.project_tail(&g, r, &src))
        .collect()
}

/// `p * e_i` for every generator `p` of `modulus` and every basis vector.
pub fn modulus_relations(module: &FreeModule, modulus: &[Polynomial]) -> Vec<Vector> {
    let mut out = Vec::new();
    for i in 0..module.rank() {
        for p in modulus {
            if !p.is_zero() {
                out.push(module.from_poly_at(i, p));
            }
        }
    }
    out
}

/// Generators of the relations among `images` over `S/(modulus)`, each
/// reduced modulo the relations of the source.
pub fn syzygies(target: &FreeModule, images: &[Vector], modulus: &[Polynomial]) -> Vec<Vector> {
    let src = FreeModule::new(target.ring(), images.len(), ModuleOrder::Pot);
    let rel_t = modulus_relations(target, modulus);
    let rel_s = modulus_relations(&src, modulus);
    let rel_gb = groebner(&src, &rel_s, PairStrategy::Normal);
    kernel_modulo(target, images, &rel_t)
        .into_iter()
        .map(|v| reduce(&src, &v, &rel_gb))
        .filter(|v| !v.is_zero())
        .collect()
}

/// True if `v` lies in the submodule generated by `gens`.
pub fn contains(module: &FreeModule, gens: &[Vector], v: &Vector) -> bool {
    let gb = groebner(module, gens, PairStrategy::Normal);
    reduce(module, v, &gb).is_zero()
}

fn max_degree(v: &Vector) -> u32 {
    v.terms().iter().map(|t| t.1.degree()).max().unwrap_or(0)
}

/// An irredundant subset of `gens` that still generates `<gens> + <relations>`
/// modulo `<relations>`. Candidates are scanned by increasing degree and then
/// pruned backwards, so for homogeneous input the result is a minimal
/// generating set.
pub fn minimal_generators(module: &FreeModule, gens: &[Vector], relations: &[Vector]) -> Vec<Vector> {
    let mut order: Vec<usize> = (0..gens.len()).collect();
    order.sort_by_key(|&i| (max_degree(&gens[i]), gens[i].len(), i));
    let mut kept: Vec<Vector> = Vec::new();
    let mut current: Vec<Vector> = relations.to_vec();
    let mut gb = groebner(module, &current, PairStrategy::Normal);
    for i in order {
        if reduce(module, &gens[i], &gb).is_zero() {
            continue;
        }
        kept.push(gens[i].clone());
        current.push(gens[i].clone());
        gb = groebner(module, &current, PairStrategy::Normal);
    }
    let mut k = kept.len();
    while k > 0 {
        k -= 1;
        let mut others: Vec<Vector> = relations.to_vec();
        others.extend(kept.iter().enumerate().filter(|(j, _)| *j != k).map(|(_, v)| v.clone()));
        if contains(module, &others, &kept[k]) {
            kept.remove(k);
        }
    }
    kept
}

/// Colength of the submodule with Gröbner basis `gb` in `module`.
pub fn colength(module: &FreeModule, gb: &[Vector]) -> Dim {
    let lead = gb.iter().filter_map(|g| g.leading().map(|(c, m, _)| (*c, m.clone()))).collect();
    Staircase::new(module.ring().nvars(), module.rank(), lead).dim()
}

/// `dim_k` of `ker(d_out) / im(d_in)` at a spot `mid = S^m / rel_mid`, where
/// `d_out` maps into `out = S^r / rel_out` (given by its column images) and
/// `d_in` is given by its column images in `mid`.
pub fn homology_dim(
    mid: &FreeModule,
    d_out: Option<(&FreeModule, &[Vector])>,
    d_in: &[Vector],
    rel_mid: &[Vector],
    rel_out: &[Vector],
) -> Dim {
    let mut image: Vec<Vector> = d_in.to_vec();
    image.extend(rel_mid.iter().cloned());
    match d_out {
        None => colength(mid, &groebner(mid, &image, PairStrategy::Normal)),
        Some((out, cols)) => {
            let cycles = kernel_modulo(out, cols, rel_out);
            if cycles.is_empty() {
                return Dim::Finite(0);
            }
            let pres = FreeModule::new(mid.ring(), cycles.len(), ModuleOrder::Pot);
            colength(&pres, &kernel_modulo(mid, &cycles, &image))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;
    use crate::poly::PolyRing;

    #[test]
    fn koszul_relation() {
        let r = PolyRing::rational(&["x", "y"]);
        let p = |s: &str| parse_polynomial(s, &r).unwrap();
        let t = FreeModule::new(&r, 1, ModuleOrder::Pot);
        let src = FreeModule::new(&r, 2, ModuleOrder::Pot);
        let syz = syzygies(&t, &[t.from_polys(&[p("x")]), t.from_polys(&[p("y")])], &[]);
        assert_eq!(syz.len(), 1);
        assert_eq!(src.to_polys(&syz[0]), vec![p("y"), p("-x")]);
        let syz = syzygies(&t, &[t.from_polys(&[p("x^2")]), t.from_polys(&[p("x*y")])], &[]);
        assert_eq!(src.to_polys(&syz[0]), vec![p("y"), p("-x")]);
        assert!(syzygies(&t, &[t.from_polys(&[p("x + y^2")])], &[]).is_empty());
    }

    #[test]
    fn minimal_generators_drop_redundancy() {
        let r = PolyRing::rational(&["x", "y"]);
        let p = |s: &str| parse_polynomial(s, &r).unwrap();
        let m = FreeModule::new(&r, 1, ModuleOrder::Pot);
        let gens: Vec<Vector> = ["x^2", "x*y", "x^2 + x*y", "y^3"].iter().map(|s| m.from_polys(&[p(s)])).collect();
        assert_eq!(minimal_generators(&m, &gens, &[]).len(), 3);
        let rels = vec![m.from_polys(&[p("y^3")])];
        assert_eq!(minimal_generators(&m, &gens, &rels).len(), 2);
    }

    #[test]
    fn homology_of_small_complexes() {
        let r = PolyRing::rational(&["x"]);
        let p = |s: &str| parse_polynomial(s, &r).unwrap();
        let m = FreeModule::new(&r, 1, ModuleOrder::Pot);
        let x = vec![m.from_polys(&[p("x")])];
        // k[x] --x--> k[x]
        assert_eq!(homology_dim(&m, None, &x, &[], &[]), Dim::Finite(1));
        assert_eq!(homology_dim(&m, Some((&m, &x)), &[], &[], &[]), Dim::Finite(0));
        // zero map
        let zero = vec![m.zero()];
        assert_eq!(homology_dim(&m, Some((&m, &zero)), &[], &[], &[]), Dim::Infinite);
        // k[x]/(x^2): kernel of x is (x), image of x is (x)
        let rel = vec![m.from_polys(&[p("x^2")])];
        assert_eq!(homology_dim(&m, Some((&m, &x)), &x, &rel, &rel), Dim::Finite(0));
        assert_eq!(homology_dim(&m, Some((&m, &x)), &[], &rel, &rel), Dim::Finite(1));
    }
}
