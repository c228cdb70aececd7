//! The affine model `k[x, y] / (f(x) - f(y))` of the self fiber product,
//! correspondence classes on it, and the localized intersection pairing
//! computed from stable Tor groups.

use std::sync::Arc;

use serde::Serialize;

use crate::error::{AlgebraError, Result};
use crate::gb::{buchberger, Dim, FreeModule, ModuleOrder};
use crate::homological::{default_cap, kernel_modulo, modulus_relations, resolve_to_stabilization, FpModule, FreeResolution};
use crate::mf::{divided_differences, koszul_mf, stabilize_from_resolution, Z2Complex};
use crate::poly::{MonomialOrder, PolyRing, Polynomial};

/// `f` together with the doubled ring `k[x_0..x_{N-1}, y_0..y_{N-1}]` (grevlex)
/// and `W = f(x) - f(y)`.
#[derive(Clone, Debug)]
pub struct DoubleRing {
    f: Polynomial,
    base: Arc<PolyRing>,
    ring: Arc<PolyRing>,
    potential: Polynomial,
}

pub fn build_double_ring(f: &Polynomial) -> Result<DoubleRing> {
    if f.is_constant() {
        return Err(AlgebraError::ConstantPolynomial);
    }
    let src = f.ring();
    let base = src.with_order(MonomialOrder::Grevlex)?;
    let f = f.in_ring(&base)?;
    let n = base.nvars();
    let names = (0..n).map(|i| format!("x{i}")).chain((0..n).map(|i| format!("y{i}"))).collect();
    let ring = PolyRing::new(names, base.field(), MonomialOrder::Grevlex)?;
    let xs: Vec<Polynomial> = (0..n).map(|i| Polynomial::var(&ring, i)).collect();
    let ys: Vec<Polynomial> = (0..n).map(|i| Polynomial::var(&ring, n + i)).collect();
    let potential = &f.substitute(&ring, &xs)? - &f.substitute(&ring, &ys)?;
    Ok(DoubleRing { f, base, ring, potential })
}

impl DoubleRing {
    pub fn f(&self) -> &Polynomial {
        &self.f
    }

    /// The ring of `f`, with grevlex order.
    pub fn base(&self) -> &Arc<PolyRing> {
        &self.base
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn potential(&self) -> &Polynomial {
        &self.potential
    }

    /// Number of variables of `f`.
    pub fn nvars(&self) -> usize {
        self.base.nvars()
    }

    pub fn x(&self, i: usize) -> Polynomial {
        Polynomial::var(&self.ring, i)
    }

    pub fn y(&self, i: usize) -> Polynomial {
        Polynomial::var(&self.ring, self.nvars() + i)
    }

    /// Images of the doubled variables under `x -> x`, `y -> sigma(x)`.
    fn restriction(&self, sigma: &[Polynomial]) -> Vec<Polynomial> {
        (0..self.nvars()).map(|i| Polynomial::var(&self.base, i)).chain(sigma.iter().cloned()).collect()
    }

    fn identity(&self) -> Vec<Polynomial> {
        (0..self.nvars()).map(|i| Polynomial::var(&self.base, i)).collect()
    }
}

/// A finitely presented module over `k[x, y] / (W)`. Graph classes remember
/// their endomorphism, which lets Tor be computed by substitution.
#[derive(Clone, Debug)]
pub struct CorrespondenceClass {
    label: String,
    module: FpModule,
    graph: Option<Vec<Polynomial>>,
}

impl CorrespondenceClass {
    /// A class given by an arbitrary presentation over the doubled ring.
    pub fn from_module(d: &DoubleRing, label: impl Into<String>, module: &FpModule) -> Result<Self> {
        let module = FpModule::new(
            &d.ring,
            Some(d.potential.clone()),
            module.generator_count(),
            module.relations().to_vec(),
        )?;
        Ok(CorrespondenceClass { label: label.into(), module, graph: None })
    }

    /// `R / ideal`.
    pub fn cyclic(d: &DoubleRing, label: impl Into<String>, ideal: &[Polynomial]) -> Result<Self> {
        let module = FpModule::cyclic(&d.ring, Some(d.potential.clone()), ideal)?;
        Ok(CorrespondenceClass { label: label.into(), module, graph: None })
    }

    /// `R^rank`, a perfect class.
    pub fn free(d: &DoubleRing, rank: usize) -> Result<Self> {
        let module = FpModule::free(&d.ring, Some(d.potential.clone()), rank)?;
        Ok(CorrespondenceClass { label: "free".into(), module, graph: None })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn module(&self) -> &FpModule {
        &self.module
    }

    /// The endomorphism (as images of `x`) for diagonal and graph classes.
    pub fn graph(&self) -> Option<&[Polynomial]> {
        self.graph.as_deref()
    }
}

/// `R / (x_0 - y_0, ..., x_{N-1} - y_{N-1})`.
pub fn diagonal_module(d: &DoubleRing) -> CorrespondenceClass {
    let ideal: Vec<Polynomial> = (0..d.nvars()).map(|i| &d.x(i) - &d.y(i)).collect();
    let module = FpModule::cyclic(&d.ring, Some(d.potential.clone()), &ideal).expect("diagonal presentation");
    CorrespondenceClass { label: "diagonal".into(), module, graph: Some(d.identity()) }
}

/// `R / (y_i - sigma_i(x))`. Requires `f(sigma(x)) = f(x)`; the identity gives
/// exactly [`diagonal_module`].
pub fn graph_module(d: &DoubleRing, sigma: &[Polynomial]) -> Result<CorrespondenceClass> {
    if sigma.len() != d.nvars() {
        return Err(AlgebraError::Shape(format!("{} images for {} variables", sigma.len(), d.nvars())));
    }
    let sigma: Vec<Polynomial> = sigma.iter().map(|p| p.in_ring(&d.base)).collect::<std::result::Result<_, _>>()?;
    if sigma == d.identity() {
        return Ok(diagonal_module(d));
    }
    let composite = d.f.substitute(&d.base, &sigma)?;
    if composite != d.f {
        return Err(AlgebraError::EndomorphismNotSLinear { composite: composite.to_string() });
    }
    let xs: Vec<Polynomial> = (0..d.nvars()).map(|i| d.x(i)).collect();
    let ideal: Vec<Polynomial> = sigma
        .iter()
        .enumerate()
        .map(|(i, s)| Ok(&d.y(i) - &s.substitute(&d.ring, &xs)?))
        .collect::<Result<_>>()?;
    let label = format!("graph:{}", sigma.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(","));
    let module = FpModule::cyclic(&d.ring, Some(d.potential.clone()), &ideal)?;
    Ok(CorrespondenceClass { label, module, graph: Some(sigma) })
}

/// `I : g` in `R`, as ideal generators in the doubled ring.
pub fn colon_ideal(d: &DoubleRing, ideal: &[Polynomial], g: &Polynomial) -> Vec<Polynomial> {
    let one = FreeModule::new(&d.ring, 1, ModuleOrder::Pot);
    let mut rels: Vec<_> = ideal.iter().filter(|p| !p.is_zero()).map(|p| one.from_poly_at(0, p)).collect();
    rels.extend(modulus_relations(&one, std::slice::from_ref(&d.potential)));
    kernel_modulo(&one, &[one.from_poly_at(0, g)], &rels).iter().map(|v| one.to_polys(v).remove(0)).collect()
}

/// `0 -> R/(I:g) -> R/I -> R/(I+g) -> 0`, the first map being multiplication by `g`.
pub fn short_exact_triple(
    d: &DoubleRing,
    ideal: &[Polynomial],
    g: &Polynomial,
) -> Result<[CorrespondenceClass; 3]> {
    let colon = colon_ideal(d, ideal, g);
    let mut sum = ideal.to_vec();
    sum.push(g.clone());
    Ok([
        CorrespondenceClass::cyclic(d, "sub", &colon)?,
        CorrespondenceClass::cyclic(d, "middle", ideal)?,
        CorrespondenceClass::cyclic(d, "quotient", &sum)?,
    ])
}

/// Degree of the stable Tor of the diagonal against a class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StableTorReport {
    pub f: String,
    pub class: String,
    pub pairing: i64,
    pub even: u64,
    pub odd: u64,
    pub stabilization_index: usize,
    /// `dim Tor_n` for `n = 0..=stabilization_index + 1`; `-1` marks infinite dimension.
    pub tor_dims: Vec<i64>,
    pub support_finite: bool,
}

impl StableTorReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }
}

fn resolve_diagonal(d: &DoubleRing) -> Result<FreeResolution> {
    resolve_to_stabilization(diagonal_module(d).module(), default_cap(d.ring.nvars()))
}

/// The stable tail of the diagonal resolution as a Z/2 complex over the doubled ring.
fn diagonal_tail(res: &FreeResolution) -> Result<Z2Complex> {
    Ok(Z2Complex::from_mf(&stabilize_from_resolution(res)?))
}

/// Restricts (graph classes) or tensors (everything else) a Z/2 complex over the
/// doubled ring with `e`.
fn pair_z2(d: &DoubleRing, z: &Z2Complex, e: &CorrespondenceClass) -> Result<Z2Complex> {
    match &e.graph {
        Some(sigma) => z.substitute(&d.base, &d.restriction(sigma)),
        None => z.tensor(&e.module),
    }
}

fn finite_pair((even, odd): (Dim, Dim)) -> Result<(u64, u64)> {
    match (even.finite(), odd.finite()) {
        (Some(e), Some(o)) => Ok((e, o)),
        _ => Err(AlgebraError::SupportNotFinite(format!("stable Tor dimensions ({even}, {odd})"))),
    }
}

/// Even and odd stable Tor of the diagonal against `e`, in literal homological parity.
fn literal_stable(d: &DoubleRing, res: &FreeResolution, e: &CorrespondenceClass) -> Result<(u64, u64)> {
    finite_pair(pair_z2(d, &diagonal_tail(res)?, e)?.homology(true)?)
}

/// The localized intersection number of the diagonal with `e`: the difference
/// of stable even and odd Tor dimensions. Parities are counted after a shift by
/// the number of variables, so that the self-pairing of the diagonal is the
/// (global) Milnor number.
pub fn ks_pairing(d: &DoubleRing, e: &CorrespondenceClass) -> Result<StableTorReport> {
    let res = resolve_diagonal(d)?;
    let s = res.stabilization_index().expect("resolve_to_stabilization sets the index");
    let top = s + 3;
    let complex = res.periodic_extension(top + 1)?;
    let per_degree = match &e.graph {
        Some(sigma) => complex.substitute(&d.base, &d.restriction(sigma))?.homology_dims(top, false)?,
        None => complex.tensor(&e.module)?.homology_dims(top, false)?,
    };
    let (lit_even, lit_odd) = literal_stable(d, &res, e)?;

    // the stable window: degrees n >= s + 2 repeat n - 2
    for n in s + 2..=top {
        if per_degree[n] != per_degree[n - 2] {
            return Err(AlgebraError::Invariant(format!("Tor_{n} differs from Tor_{}", n - 2)));
        }
    }
    let (e_deg, o_deg) = if top % 2 == 0 { (top, top - 1) } else { (top - 1, top) };
    if per_degree[e_deg] != Dim::Finite(lit_even) || per_degree[o_deg] != Dim::Finite(lit_odd) {
        return Err(AlgebraError::Invariant(format!(
            "periodic complex gives ({lit_even}, {lit_odd}) but Tor_{e_deg}, Tor_{o_deg} are ({}, {})",
            per_degree[e_deg], per_degree[o_deg]
        )));
    }
    let (even, odd) = if d.nvars().is_multiple_of(2) { (lit_even, lit_odd) } else { (lit_odd, lit_even) };
    Ok(StableTorReport {
        f: d.f.to_string(),
        class: e.label.clone(),
        pairing: even as i64 - odd as i64,
        even,
        odd,
        stabilization_index: s + 2,
        tor_dims: per_degree.iter().map(|x| x.as_signed()).collect(),
        support_finite: true,
    })
}

/// Stable `(even, odd)` of the diagonal self-Tor from the resolution tail,
/// in literal parity.
pub fn diagonal_homology_via_resolution(d: &DoubleRing) -> Result<(Dim, Dim)> {
    let res = resolve_diagonal(d)?;
    pair_z2(d, &diagonal_tail(&res)?, &diagonal_module(d))?.homology(true)
}

/// The same numbers from the Koszul factorization `(x_i - y_i; g_i)` with the
/// divided differences `g_i` of `f`, restricted to the diagonal.
pub fn diagonal_homology_via_koszul(d: &DoubleRing) -> Result<(Dim, Dim)> {
    let a: Vec<Polynomial> = (0..d.nvars()).map(|i| &d.x(i) - &d.y(i)).collect();
    let b = divided_differences(&d.f, &d.ring)?;
    let mf = koszul_mf(&a, &b)?;
    Z2Complex::from_mf(&mf).substitute(&d.base, &d.restriction(&d.identity()))?.homology(true)
}

/// True if `W` vanishes modulo the ideal of `e` (a cheap sanity check for
/// user-supplied cyclic classes).
pub fn annihilated_by_potential(d: &DoubleRing, ideal: &[Polynomial]) -> Result<bool> {
    let gb = buchberger(&d.ring, ideal)?;
    Ok(gb.contains(&d.potential)?)
}
