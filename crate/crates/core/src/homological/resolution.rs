use super::complex::FreeComplex;
use super::matrix::PolyMatrix;
use super::module::FpModule;
use super::ops::{minimal_generators, modulus_relations, syzygies};
use crate::error::{AlgebraError, Result};
use crate::gb::{buchberger, FreeModule, GroebnerBasis, ModuleOrder};
use crate::poly::{exact_quotient, Polynomial};

/// A free resolution `... -> F_1 -> F_0 -> M` together with what is known
/// about its shape.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeResolution {
    complex: FreeComplex,
    minimal: bool,
    finite: bool,
    stabilization: Option<usize>,
}

impl FreeResolution {
    pub fn complex(&self) -> &FreeComplex {
        &self.complex
    }

    pub fn minimal(&self) -> bool {
        self.minimal
    }

    /// True when the resolution terminated (`F_{length+1} = 0`).
    pub fn is_finite(&self) -> bool {
        self.finite
    }

    /// Smallest `s` with `d_{i+2} = d_i` for every computed `i >= s`, confirmed
    /// by two consecutive repeats; for a finite resolution of length `L` this is `L + 1`.
    pub fn stabilization_index(&self) -> Option<usize> {
        self.stabilization
    }

    pub fn differential(&self, i: usize) -> Option<&PolyMatrix> {
        self.complex.differential(i)
    }

    /// The complex with at least `length` differentials, continuing a
    /// stabilized tail by `d_{i+2} = d_i`. Finite resolutions are returned as is.
    pub fn periodic_extension(&self, length: usize) -> Result<FreeComplex> {
        let have = self.complex.length();
        if self.finite || have >= length {
            return Ok(self.complex.clone());
        }
        let s = self.stabilization.ok_or(AlgebraError::StabilizationNotReached { cap: have })?;
        if have < s + 1 {
            return Err(AlgebraError::StabilizationNotReached { cap: have });
        }
        let mut diffs = self.complex.differentials().to_vec();
        while diffs.len() < length {
            let next = diffs[diffs.len() - 2].clone();
            diffs.push(next);
        }
        FreeComplex::new(self.complex.ring(), self.complex.potential().cloned(), self.complex.rank(0), diffs)
    }
}

/// `W adj(A) / det(A)` when it is a polynomial matrix, i.e. the partner `B`
/// with `AB = BA = W I`.
pub fn mf_partner(a: &PolyMatrix, w: &Polynomial) -> Result<Option<PolyMatrix>> {
    if !a.is_square() || a.rows() == 0 {
        return Ok(None);
    }
    let det = a.determinant()?;
    if det.is_zero() {
        return Ok(None);
    }
    let adj = a.adjugate()?;
    let mut entries = Vec::with_capacity(adj.entries().len());
    for p in adj.entries() {
        match exact_quotient(&(p * w), &det) {
            Some(q) => entries.push(q),
            None if p.is_zero() => entries.push(Polynomial::zero(a.ring())),
            None => return Ok(None),
        }
    }
    let b = PolyMatrix::new(a.ring(), a.rows(), a.cols(), entries)?;
    debug_assert_eq!(a.mul(&b)?, PolyMatrix::scalar(a.ring(), a.rows(), w));
    Ok(Some(b))
}

struct Resolver {
    module: FpModule,
    modulus: Vec<Polynomial>,
    modulus_gb: GroebnerBasis,
    stored: Vec<PolyMatrix>,
    // lifts used for partner computations; equal to `stored` except on
    // partner steps, where reduction modulo W would break A B = W I
    raw: Vec<PolyMatrix>,
    finished: bool,
    minimal: bool,
}

impl Resolver {
    fn new(m: &FpModule) -> Result<Self> {
        let module = m.pruned();
        let modulus = module.modulus();
        let modulus_gb = buchberger(module.ring(), &modulus)?;
        Ok(Resolver { module, modulus, modulus_gb, stored: Vec::new(), raw: Vec::new(), finished: false, minimal: true })
    }

    fn reduce_matrix(&self, m: &PolyMatrix) -> Result<PolyMatrix> {
        m.try_map(m.ring(), |p| Ok(self.modulus_gb.normal_form(p)?))
    }

    fn push(&mut self, stored: PolyMatrix, raw: PolyMatrix) {
        if !stored.entries_in_maximal_ideal() {
            self.minimal = false;
        }
        self.stored.push(stored);
        self.raw.push(raw);
    }

    fn step(&mut self) -> Result<()> {
        if self.finished {
            return Ok(());
        }
        let ring = self.module.ring().clone();
        let (target_rank, images) = match self.stored.last() {
            None => {
                let g = self.module.generator_count();
                let f = FreeModule::new(&ring, g, ModuleOrder::Pot);
                let rels: Vec<_> =
                    self.module.relations().iter().map(|r| f.from_polys(r)).filter(|v| !v.is_zero()).collect();
                (g, rels)
            }
            Some(d) => {
                if let Some(w) = self.module.potential() {
                    let last_raw = self.raw.last().expect("raw lift").clone();
                    if let Some(b) = mf_partner(&last_raw, w)? {
                        if b.entries_in_maximal_ideal() {
                            let stored = self.reduce_matrix(&b)?;
                            self.push(stored, b);
                            return Ok(());
                        }
                    }
                }
                let f = FreeModule::new(&ring, d.rows(), ModuleOrder::Pot);
                (d.cols(), syzygies(&f, &d.column_vectors(&f), &self.modulus))
            }
        };
        let f = FreeModule::new(&ring, target_rank, ModuleOrder::Pot);
        let mut reduced = Vec::with_capacity(images.len());
        for v in &images {
            let polys = f.to_polys(v).iter().map(|p| self.modulus_gb.normal_form(p)).collect::<std::result::Result<Vec<_>, _>>()?;
            let v = f.from_polys(&polys);
            if !v.is_zero() {
                reduced.push(v);
            }
        }
        let gens = minimal_generators(&f, &reduced, &modulus_relations(&f, &self.modulus));
        if gens.is_empty() {
            self.finished = true;
            return Ok(());
        }
        let cols: Vec<Vec<Polynomial>> = gens.iter().map(|v| f.to_polys(v)).collect();
        let d = PolyMatrix::from_columns(&ring, target_rank, &cols)?;
        self.push(d.clone(), d);
        Ok(())
    }

    fn periodic_from(&self) -> Option<usize> {
        let n = self.stored.len();
        (1..=n.saturating_sub(3)).find(|&s| {
            let d = |i: usize| &self.stored[i - 1];
            d(s + 2) == d(s) && d(s + 3) == d(s + 1)
        })
    }

    fn finish(self, stabilization: Option<usize>) -> Result<FreeResolution> {
        let complex =
            FreeComplex::new(self.module.ring(), self.module.potential().cloned(), self.module.generator_count(), self.stored)?;
        Ok(FreeResolution { complex, minimal: self.minimal, finite: self.finished, stabilization })
    }
}

/// Resolution of `m` with `length` differentials (fewer if it terminates).
/// Over `S/(W)`, a square differential whose partner `W adj(A)/det(A)` is
/// polynomial with entries in the maximal ideal continues the resolution
/// directly, since then `ker A = im B`.
pub fn free_resolution(m: &FpModule, length: usize) -> Result<FreeResolution> {
    let mut r = Resolver::new(m)?;
    while r.stored.len() < length && !r.finished {
        r.step()?;
    }
    let stab = if r.finished { Some(r.stored.len() + 1) } else if r.minimal { r.periodic_from() } else { None };
    r.finish(stab)
}

/// Resolves until two consecutive differentials repeat (`d_{s+2} = d_s`,
/// `d_{s+3} = d_{s+1}`) or the resolution ends, computing at most `cap` differentials.
pub fn resolve_to_stabilization(m: &FpModule, cap: usize) -> Result<FreeResolution> {
    let mut r = Resolver::new(m)?;
    loop {
        if r.finished {
            let s = r.stored.len() + 1;
            return r.finish(Some(s));
        }
        if !r.minimal {
            return Err(AlgebraError::NotMinimized);
        }
        if let Some(s) = r.periodic_from() {
            return r.finish(Some(s));
        }
        if r.stored.len() >= cap {
            return Err(AlgebraError::StabilizationNotReached { cap });
        }
        r.step()?;
    }
}

/// Default cap on the number of differentials: `2 * vars + 6`.
pub fn default_cap(nvars: usize) -> usize {
    2 * nvars + 6
}
