//! Hand-checked values for every layer, through the public API only.

use std::sync::Arc;

use num_rational::BigRational;

use singlab_core::gb::{buchberger, standard_basis, Dim};
use singlab_core::homological::{free_resolution, syzygies, tor_dims, FpModule, FreeComplex, PolyMatrix};
use singlab_core::intersection::{
    build_double_ring, diagonal_homology_via_koszul, diagonal_homology_via_resolution, diagonal_module, graph_module,
    ks_pairing, CorrespondenceClass,
};
use singlab_core::invariants::{deligne_milnor_check, global_milnor_number, milnor_number, milnor_orlik, parse_weights};
use singlab_core::mf::{divided_differences, koszul_mf, stabilize_from_resolution, xi_fold, KoszulDgModule, MatrixFactorization, Z2Complex};
use singlab_core::parse::{parse_polynomial, parse_polynomial_list, parse_with_inferred_ring, ParseError};
use singlab_core::poly::{multivariate_divide, CoefficientField, MonomialOrder, PolyRing, Polynomial};
use singlab_core::AlgebraError;

fn ring(vars: &[&str], order: MonomialOrder) -> Arc<PolyRing> {
    PolyRing::new(vars.iter().map(|v| v.to_string()).collect(), CoefficientField::Rational, order).unwrap()
}

fn p(text: &str, r: &Arc<PolyRing>) -> Polynomial {
    parse_polynomial(text, r).unwrap()
}

fn q(text: &str) -> Polynomial {
    parse_with_inferred_ring(text, CoefficientField::Rational, MonomialOrder::Grevlex).unwrap()
}

fn m(r: &Arc<PolyRing>, rows: &[&[&str]]) -> PolyMatrix {
    PolyMatrix::from_rows(r, rows.iter().map(|row| row.iter().map(|e| p(e, r)).collect()).collect()).unwrap()
}

fn strings(ps: &[Polynomial]) -> Vec<String> {
    ps.iter().map(|x| x.to_string()).collect()
}

#[test]
fn arithmetic() {
    let r = PolyRing::rational(&["x", "y"]);
    assert_eq!(&p("x+y", &r) * &p("x-y", &r), p("x^2 - y^2", &r));
    assert_eq!(&p("x^2", &r) * &p("x^3", &r), p("x^5", &r));
    let f3 = PolyRing::new(vec!["x".into()], CoefficientField::prime(3).unwrap(), MonomialOrder::Grevlex).unwrap();
    assert_eq!(p("x+1", &f3).pow(3), p("x^3 + 1", &f3));
}

#[test]
fn derivatives() {
    let r = PolyRing::rational(&["x", "y"]);
    assert_eq!(p("x^3 + y^5", &r).partial_derivative(0).unwrap(), p("3*x^2", &r));
    assert_eq!(p("x^2*y + y^3", &r).partial_derivative(1).unwrap(), p("x^2 + 3*y^2", &r));
    let f3 = PolyRing::new(vec!["x".into()], CoefficientField::prime(3).unwrap(), MonomialOrder::Grevlex).unwrap();
    assert!(p("x^3", &f3).partial_derivative(0).unwrap().is_zero());
}

#[test]
fn division() {
    let r = ring(&["x", "y"], MonomialOrder::Lex);
    let g = [p("x*y - 1", &r), p("y^2 - 1", &r)];
    let (_, rem) = multivariate_divide(&p("x^2*y + x*y^2 + y^2", &r), &g).unwrap();
    assert_eq!(rem, p("x + y + 1", &r));
    let (qs, rem) = multivariate_divide(&Polynomial::zero(&r), &g).unwrap();
    assert!(rem.is_zero() && qs.iter().all(Polynomial::is_zero));
    let (qs, rem) = multivariate_divide(&p("x^2", &r), &[p("x", &r)]).unwrap();
    assert_eq!((qs[0].clone(), rem.is_zero()), (p("x", &r), true));
}

#[test]
fn groebner_bases() {
    let r = PolyRing::rational(&["x", "y"]);
    let gb = buchberger(&r, &[p("x^2 + y^2", &r), p("x*y", &r)]).unwrap();
    let mut got = strings(gb.generators());
    got.sort();
    assert_eq!(got, ["x*y", "x^2 + y^2", "y^3"]);
    assert!(gb.normal_form(&p("x^2*y^2", &r)).unwrap().is_zero());
    assert_eq!(buchberger(&r, &[p("x", &r)]).unwrap().generators(), &[p("x", &r)]);
    let mut jac = strings(buchberger(&r, &[p("3*x^2", &r), p("3*y^2", &r)]).unwrap().generators());
    jac.sort();
    assert_eq!(jac, ["x^2", "y^2"]);

    let x2 = buchberger(&r, &[p("x^2", &r)]).unwrap();
    assert!(x2.normal_form(&p("x^3", &r)).unwrap().is_zero());
    assert_eq!(x2.normal_form(&p("x + 1", &r)).unwrap(), p("x + 1", &r));
}

#[test]
fn colengths() {
    let r = PolyRing::rational(&["x", "y"]);
    let col = |gens: &[&str]| buchberger(&r, &gens.iter().map(|g| p(g, &r)).collect::<Vec<_>>()).unwrap().colength();
    assert_eq!(col(&["x", "y"]), Dim::Finite(1));
    assert_eq!(col(&["x^2", "y^2"]), Dim::Finite(4));
    assert_eq!(col(&["x"]), Dim::Infinite);
}

#[test]
fn local_standard_bases() {
    let r = ring(&["x"], MonomialOrder::Local);
    let sb = standard_basis(&r, &[p("x - x^2", &r)]).unwrap();
    assert_eq!(sb.leading_monomials(), vec![p("x", &r).leading_monomial().unwrap().clone()]);
    assert_eq!(sb.colength(), Dim::Finite(1));
    assert_eq!(standard_basis(&r, &[p("2*x + 3*x^2", &r)]).unwrap().colength(), Dim::Finite(1));
    assert_eq!(standard_basis(&r, &[p("x^2", &r)]).unwrap().colength(), Dim::Finite(2));
}

#[test]
fn syzygy_modules() {
    use singlab_core::gb::{FreeModule, ModuleOrder};
    let r = PolyRing::rational(&["x", "y"]);
    let target = FreeModule::new(&r, 1, ModuleOrder::Pot);
    let syz = |gens: &[&str]| {
        let images: Vec<_> = gens.iter().map(|g| target.from_polys(&[p(g, &r)])).collect();
        let src = FreeModule::new(&r, gens.len(), ModuleOrder::Pot);
        syzygies(&target, &images, &[]).iter().map(|v| strings(&src.to_polys(v))).collect::<Vec<_>>()
    };
    let s = syz(&["x", "y"]);
    assert_eq!(s.len(), 1);
    assert!(s[0] == ["y", "-x"] || s[0] == ["-y", "x"]);
    let s = syz(&["x^2", "x*y"]);
    assert_eq!(s.len(), 1);
    assert!(s[0] == ["y", "-x"] || s[0] == ["-y", "x"]);
    assert!(syz(&["x^2 + y^3"]).is_empty());
}

#[test]
fn resolutions_and_tor() {
    let r = PolyRing::rational(&["x", "y"]);
    let k = FpModule::cyclic(&r, None, &[p("x", &r), p("y", &r)]).unwrap();
    let res = free_resolution(&k, 5).unwrap();
    assert_eq!(res.complex().ranks(), &[1, 2, 1]);
    assert!(res.is_finite());
    let t = tor_dims(&k, &k, 3).unwrap();
    assert_eq!(t, vec![Dim::Finite(1), Dim::Finite(2), Dim::Finite(1), Dim::Finite(0)]);

    let s = PolyRing::rational(&["x"]);
    let x2 = p("x^2", &s);
    let k = FpModule::cyclic(&s, Some(x2.clone()), &[p("x", &s)]).unwrap();
    let res = free_resolution(&k, 5).unwrap();
    assert_eq!(res.complex().ranks(), &[1, 1, 1, 1, 1, 1]);
    for i in 1..=5 {
        assert_eq!(res.differential(i).unwrap(), &m(&s, &[&["x"]]));
    }
    assert_eq!(tor_dims(&k, &k, 4).unwrap(), vec![Dim::Finite(1); 5]);

    let free = FpModule::free(&r, None, 2).unwrap();
    assert_eq!(free_resolution(&free, 4).unwrap().complex().ranks(), &[2]);
}

#[test]
fn complex_homology() {
    let s = PolyRing::rational(&["x"]);
    let zero = FreeComplex::new(&s, None, 1, vec![m(&s, &[&["0"]])]).unwrap();
    assert_eq!(zero.homology_dims(1, false).unwrap(), vec![Dim::Infinite, Dim::Infinite]);
    let mult = FreeComplex::new(&s, None, 1, vec![m(&s, &[&["x"]])]).unwrap();
    assert_eq!(mult.homology_dims(1, false).unwrap(), vec![Dim::Finite(1), Dim::Finite(0)]);
    assert!(matches!(zero.homology_dims(1, true), Err(AlgebraError::SupportNotFinite(_))));
}

#[test]
fn factorization_checks() {
    let r = PolyRing::rational(&["x", "y"]);
    let mf = |a: &str, b: &str, w: &str| MatrixFactorization::new(p(w, &r), m(&r, &[&[a]]), m(&r, &[&[b]])).unwrap();
    assert!(mf("x", "x", "x^2").verify().unwrap().holds());
    assert!(mf("x", "y", "x*y").verify().unwrap().holds());
    assert!(!mf("x", "y", "x^2").verify().unwrap().holds());
}

#[test]
fn koszul_factorizations() {
    let r = PolyRing::rational(&["x", "y", "z"]);
    let v = |n: &[&str]| n.iter().map(|e| p(e, &r)).collect::<Vec<_>>();
    let one = koszul_mf(&v(&["x"]), &v(&["x"])).unwrap();
    assert_eq!((one.a(), one.b()), (&m(&r, &[&["x"]]), &m(&r, &[&["x"]])));
    assert_eq!(one.potential(), &p("x^2", &r));
    let two = koszul_mf(&v(&["x", "y"]), &v(&["x", "y"])).unwrap();
    assert_eq!(two.size(), 2);
    assert_eq!(two.a().mul(two.b()).unwrap(), PolyMatrix::scalar(&r, 2, &p("x^2 + y^2", &r)));
    let three = koszul_mf(&v(&["x", "y", "z"]), &v(&["x", "y", "z"])).unwrap();
    assert_eq!((three.size(), three.potential()), (4, &p("x^2 + y^2 + z^2", &r)));
    assert!(three.verify().unwrap().holds());
}

#[test]
fn divided_difference_oracles() {
    let base = PolyRing::rational(&["x"]);
    let double = PolyRing::rational(&["x0", "y0"]);
    let g = divided_differences(&p("x^3", &base), &double).unwrap();
    assert_eq!(g, vec![p("x0^2 + x0*y0 + y0^2", &double)]);
    assert!(divided_differences(&p("7", &base), &double).unwrap()[0].is_zero());
}

#[test]
fn stabilization_oracles() {
    let s = PolyRing::rational(&["x"]);
    let k = FpModule::cyclic(&s, Some(p("x^2", &s)), &[p("x", &s)]).unwrap();
    let mf = stabilize_from_resolution(&free_resolution(&k, 6).unwrap()).unwrap();
    assert_eq!((mf.a(), mf.b()), (&m(&s, &[&["x"]]), &m(&s, &[&["x"]])));

    let r = PolyRing::rational(&["x", "y"]);
    let w = p("x^2 - y^2", &r);
    let mxy = FpModule::cyclic(&r, Some(w.clone()), &[p("x - y", &r)]).unwrap();
    let mf = stabilize_from_resolution(&free_resolution(&mxy, 6).unwrap()).unwrap();
    let mut pair = [mf.a().get(0, 0).make_monic().to_string(), mf.b().get(0, 0).make_monic().to_string()];
    pair.sort();
    assert_eq!(pair, ["x + y", "x - y"]);
    assert!(mf.verify().unwrap().holds());

    let free = FpModule::free(&r, Some(w), 1).unwrap();
    assert_eq!(stabilize_from_resolution(&free_resolution(&free, 4).unwrap()).unwrap().size(), 0);
}

#[test]
fn folds() {
    let s = PolyRing::rational(&["x"]);
    let single = KoszulDgModule::new(&s, vec![], 0, vec![1], vec![], vec![]).unwrap();
    let z = xi_fold(&single).unwrap();
    assert_eq!((z.even_rank(), z.odd_rank()), (1, 0));
    assert!(z.d_plus().is_zero() && z.d_minus().is_zero());

    let free = KoszulDgModule::free_on(&s, vec![], 0, &[1], &[]).unwrap();
    assert_eq!(xi_fold(&free).unwrap().homology(false).unwrap(), (Dim::Finite(0), Dim::Finite(0)));
}

#[test]
fn z2_homology_oracles() {
    let s = PolyRing::rational(&["x"]);
    let node = Z2Complex::new(Polynomial::zero(&s), vec![], m(&s, &[&["0"]]), m(&s, &[&["2*x"]])).unwrap();
    assert_eq!(node.homology(true).unwrap(), (Dim::Finite(1), Dim::Finite(0)));
    let empty = Z2Complex::new(Polynomial::zero(&s), vec![], PolyMatrix::zeros(&s, 0, 0), PolyMatrix::zeros(&s, 0, 0)).unwrap();
    assert_eq!(empty.homology(true).unwrap(), (Dim::Finite(0), Dim::Finite(0)));
}

#[test]
fn double_rings() {
    let d = build_double_ring(&q("x^2")).unwrap();
    assert_eq!(d.potential().to_string(), "x0^2 - y0^2");
    let d = build_double_ring(&q("x^3 + y^3")).unwrap();
    assert_eq!(d.nvars(), 2);
    assert_eq!(d.potential(), &(&(&d.x(0).pow(3) + &d.x(1).pow(3)) - &(&d.y(0).pow(3) + &d.y(1).pow(3))));

    let smooth = build_double_ring(&q("x")).unwrap();
    let r = ks_pairing(&smooth, &diagonal_module(&smooth)).unwrap();
    assert_eq!(r.pairing, 0);
}

#[test]
fn diagonal_and_graphs() {
    let d = build_double_ring(&q("x^3")).unwrap();
    let delta = diagonal_module(&d);
    assert_eq!(delta.module().generator_count(), 1);
    assert_eq!(delta.module().relations().len(), 1);
    assert_eq!(delta.module().relations()[0][0], &d.x(0) - &d.y(0));

    let ident = graph_module(&d, &[q("x")]).unwrap();
    assert_eq!(ident.module(), delta.module());
    let err = graph_module(&d, &[q("-x")]).unwrap_err();
    assert_eq!(err.code(), "ENDOMORPHISM_NOT_S_LINEAR");

    let node = build_double_ring(&q("x^2")).unwrap();
    let flip = graph_module(&node, &[q("-x")]).unwrap();
    assert_eq!(flip.module().relations()[0][0], &node.x(0) + &node.y(0));
}

#[test]
fn pairings() {
    for k in 1..=5u32 {
        let d = build_double_ring(&q(&format!("x^{}", k + 1))).unwrap();
        let r = ks_pairing(&d, &diagonal_module(&d)).unwrap();
        assert_eq!(r.pairing, k as i64, "x^{}", k + 1);
        let free = CorrespondenceClass::free(&d, 1).unwrap();
        assert_eq!(ks_pairing(&d, &free).unwrap().pairing, 0);
    }
    let d = build_double_ring(&q("x^2")).unwrap();
    let r = ks_pairing(&d, &diagonal_module(&d)).unwrap();
    assert_eq!((r.even, r.odd, r.support_finite), (1, 0, true));
    assert_eq!(
        r.to_json(),
        r#"{"f":"x^2","class":"diagonal","pairing":1,"even":1,"odd":0,"stabilization_index":3,"tor_dims":[-1,1,0,1,0],"support_finite":true}"#
    );
}

#[test]
fn routes_agree_on_cusp() {
    let d = build_double_ring(&q("x^2 + y^3")).unwrap();
    let a = diagonal_homology_via_resolution(&d).unwrap();
    let b = diagonal_homology_via_koszul(&d).unwrap();
    assert_eq!(a, b);
}

#[test]
fn milnor_numbers() {
    assert_eq!(milnor_number(&q("x^2")).unwrap(), Dim::Finite(1));
    assert_eq!(milnor_number(&q("x^3 + y^3")).unwrap(), Dim::Finite(4));
    assert_eq!(milnor_number(&q("x^2 + y^3")).unwrap(), Dim::Finite(2));
    assert_eq!(milnor_number(&q("x^2 + x^3")).unwrap(), Dim::Finite(1));
    assert_eq!(global_milnor_number(&q("x^2 + x^3")).unwrap(), Dim::Finite(2));
}

#[test]
fn weighted_formula() {
    let w = |ws: &[&str]| -> Vec<BigRational> { parse_weights(ws).unwrap() };
    for k in 1..=6u64 {
        assert_eq!(milnor_orlik(&q(&format!("x^{}", k + 1)), &w(&[&format!("1/{}", k + 1)])).unwrap(), k);
    }
    assert_eq!(milnor_orlik(&q("x^3 + y^5"), &w(&["1/3", "1/5"])).unwrap(), 8);
    assert_eq!(milnor_orlik(&q("x^2 + y^2 + z^2"), &w(&["1/2", "1/2", "1/2"])).unwrap(), 1);
    assert_eq!(milnor_orlik(&q("x^2 + y^3"), &w(&["1/2", "1/2"])).unwrap_err().code(), "NOT_QUASI_HOMOGENEOUS");
}

#[test]
fn deligne_milnor_reports() {
    let r = deligne_milnor_check(&q("x^2 + y^3"), None).unwrap();
    assert_eq!((r.mu, r.pairing, r.verdict), (2, 2, true));
    let r = deligne_milnor_check(&q("x^2 + y^2 + z^2"), None).unwrap();
    assert_eq!((r.mu, r.pairing, r.verdict), (1, 1, true));
    let r = deligne_milnor_check(&q("x"), None).unwrap();
    assert_eq!((r.mu, r.pairing, r.verdict), (0, 0, true));
}

#[test]
fn parsing() {
    let r = PolyRing::rational(&["x", "y"]);
    assert_eq!(p("x^2 + y^3", &r).len(), 2);
    let two = p("3*x^2*y - 1/2", &r);
    assert_eq!(two.to_string(), "3*x^2*y - 1/2");
    match parse_polynomial("x^^2", &r).unwrap_err() {
        ParseError::Syntax { column, .. } => assert_eq!(column, 3),
        other => panic!("unexpected {other:?}"),
    }
    assert!(matches!(parse_polynomial("z", &r), Err(ParseError::UnknownVariable { .. })));
    let f7 = PolyRing::new(vec!["x".into()], CoefficientField::prime(7).unwrap(), MonomialOrder::Grevlex).unwrap();
    assert!(matches!(parse_polynomial("1/7*x", &f7), Err(ParseError::Coefficient { .. })));
    assert_eq!(parse_polynomial_list("x, y^2", &r).unwrap().len(), 2);
}
