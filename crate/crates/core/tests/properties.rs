use std::sync::Arc;

use proptest::prelude::*;

use singlab_core::gb::{buchberger, s_polynomial, Dim};
use singlab_core::homological::PolyMatrix;
use singlab_core::mf::{divided_differences, koszul_mf, Z2Complex};
use singlab_core::parse::parse_polynomial;
use singlab_core::poly::{multivariate_divide, Coefficient, CoefficientField, Monomial, MonomialOrder, PolyRing, Polynomial};

fn ring3(order: MonomialOrder) -> Arc<PolyRing> {
    PolyRing::new(vec!["x".into(), "y".into(), "z".into()], CoefficientField::Rational, order).unwrap()
}

type RawTerm = ([u32; 3], i64, u64);

fn raw_poly(max_exp: u32, max_terms: usize) -> impl Strategy<Value = Vec<RawTerm>> {
    prop::collection::vec(([0..=max_exp, 0..=max_exp, 0..=max_exp], -9i64..=9, 1u64..=4), 0..=max_terms)
}

fn build(ring: &Arc<PolyRing>, raw: &[RawTerm]) -> Polynomial {
    let field = ring.field();
    let terms = raw
        .iter()
        .map(|(e, n, d)| {
            let c = field.from_ratio(&(*n).into(), &(*d).into()).unwrap();
            (Monomial::from_exponents(&e[..ring.nvars()]), c)
        })
        .collect::<Vec<(Monomial, Coefficient)>>();
    Polynomial::from_terms(ring, terms)
}

fn any_order() -> impl Strategy<Value = MonomialOrder> {
    prop_oneof![
        Just(MonomialOrder::Lex),
        Just(MonomialOrder::Grevlex),
        Just(MonomialOrder::Local),
        prop::collection::vec(1u32..=4, 3).prop_map(MonomialOrder::WeightedGrevlex),
    ]
}

proptest! {
    #[test]
    fn ring_axioms(a in raw_poly(3, 5), b in raw_poly(3, 5), c in raw_poly(3, 5)) {
        let r = ring3(MonomialOrder::Grevlex);
        let (a, b, c) = (build(&r, &a), build(&r, &b), build(&r, &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &Polynomial::one(&r), a.clone());
    }

    #[test]
    fn print_then_parse_is_identity(raw in raw_poly(4, 6), order in any_order()) {
        let r = ring3(order);
        let p = build(&r, &raw);
        prop_assert_eq!(parse_polynomial(&p.to_string(), &r).unwrap(), p);
    }

    #[test]
    fn modular_print_then_parse(raw in raw_poly(3, 5)) {
        let r = PolyRing::new(vec!["x".into(), "y".into(), "z".into()], CoefficientField::prime(32003).unwrap(), MonomialOrder::Grevlex).unwrap();
        let p = build(&r, &raw);
        prop_assert_eq!(parse_polynomial(&p.to_string(), &r).unwrap(), p);
    }

    #[test]
    fn monomial_orders_are_compatible(order in any_order(), a in [0u32..5, 0..5, 0..5], b in [0u32..5, 0..5, 0..5], c in [0u32..5, 0..5, 0..5]) {
        let (a, b, c) = (Monomial::from_exponents(&a), Monomial::from_exponents(&b), Monomial::from_exponents(&c));
        prop_assert_eq!(order.cmp(&a, &b), order.cmp(&b, &a).reverse());
        prop_assert_eq!(order.cmp(&a, &b).is_eq(), a == b);
        prop_assert_eq!(order.cmp(&a, &b), order.cmp(&a.mul(&c), &b.mul(&c)));
        let one = Monomial::one(3);
        if order.is_global() {
            prop_assert!(order.cmp(&a, &one).is_ge());
        } else {
            prop_assert!(order.cmp(&a, &one).is_le());
        }
    }

    #[test]
    fn groebner_bases_are_sound(gens in prop::collection::vec(raw_poly(2, 3), 1..=3), h in raw_poly(3, 4), lex in any::<bool>()) {
        let r = ring3(if lex { MonomialOrder::Lex } else { MonomialOrder::Grevlex });
        let gens: Vec<Polynomial> = gens.iter().map(|g| build(&r, g)).collect();
        let gb = buchberger(&r, &gens).unwrap();
        let basis = gb.generators();
        for g in &gens {
            prop_assert!(gb.normal_form(g).unwrap().is_zero());
        }
        for i in 0..basis.len() {
            for j in i + 1..basis.len() {
                prop_assert!(gb.normal_form(&s_polynomial(&basis[i], &basis[j])).unwrap().is_zero());
            }
        }
        let h = build(&r, &h);
        let nf = gb.normal_form(&h).unwrap();
        prop_assert_eq!(gb.normal_form(&nf).unwrap(), nf.clone());
        let (q, rem) = multivariate_divide(&h, basis).unwrap();
        let back = q.iter().zip(basis).fold(rem.clone(), |acc, (qi, gi)| &acc + &(qi * gi));
        prop_assert_eq!(back, h);
        prop_assert_eq!(rem, nf);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn koszul_factorizations_verify(pairs in prop::collection::vec((raw_poly(2, 2), raw_poly(2, 2)), 1..=3)) {
        let r = ring3(MonomialOrder::Grevlex);
        let a: Vec<Polynomial> = pairs.iter().map(|(a, _)| build(&r, a)).collect();
        let b: Vec<Polynomial> = pairs.iter().map(|(_, b)| build(&r, b)).collect();
        let mf = koszul_mf(&a, &b).unwrap();
        prop_assert_eq!(mf.size(), 1 << (a.len() - 1));
        prop_assert!(mf.verify().unwrap().holds());
    }

    #[test]
    fn divided_differences_recombine(raw in raw_poly(4, 5)) {
        let base = PolyRing::rational(&["x", "y"]);
        let f = build(&base, &raw.iter().map(|(e, n, d)| ([e[0], e[1], 0], *n, *d)).collect::<Vec<_>>());
        let double = PolyRing::rational(&["x0", "x1", "y0", "y1"]);
        let g = divided_differences(&f, &double).unwrap();
        let v = |i| Polynomial::var(&double, i);
        let sum = &(&(&v(0) - &v(2)) * &g[0]) + &(&(&v(1) - &v(3)) * &g[1]);
        let fx = f.substitute(&double, &[v(0), v(1)]).unwrap();
        let fy = f.substitute(&double, &[v(2), v(3)]).unwrap();
        prop_assert_eq!(sum, &fx - &fy);
    }

    #[test]
    fn shifting_swaps_homology(raw in raw_poly(3, 3)) {
        let r = PolyRing::rational(&["x"]);
        let p = build(&r, &raw.iter().map(|(e, n, d)| ([e[0], 0, 0], *n, *d)).collect::<Vec<_>>());
        prop_assume!(!p.is_zero());
        let z = Z2Complex::new(Polynomial::zero(&r), vec![], PolyMatrix::zeros(&r, 1, 1), PolyMatrix::scalar(&r, 1, &p)).unwrap();
        let (e, o) = z.homology(false).unwrap();
        prop_assert_eq!(z.shift().homology(false).unwrap(), (o, e));
        prop_assert_eq!(o, Dim::Finite(0));
    }
}
