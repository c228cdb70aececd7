use std::sync::Arc;

use super::factorization::MatrixFactorization;
use super::z2::Z2Complex;
use crate::error::{AlgebraError, Result};
use crate::gb::buchberger;
use crate::homological::PolyMatrix;
use crate::poly::{exact_quotient, PolyRing, Polynomial};

/// Koszul sign of moving a generator past the members of `mask` below `i`.
fn koszul_sign(mask: usize, i: usize) -> bool {
    (mask & ((1 << i) - 1)).count_ones() % 2 == 1
}

/// Factorization of `W = Σ a_i b_i` of size `2^{n-1}`: the exterior algebra on
/// `n` generators with `D = Σ a_i ι_i + b_i ε_i`. Basis vectors are subsets
/// (bitmasks), even and odd ones listed by increasing mask; `A` is the odd to
/// even block of `D`, `B` the even to odd block.
pub fn koszul_mf(a: &[Polynomial], b: &[Polynomial]) -> Result<MatrixFactorization> {
    if a.len() != b.len() {
        return Err(AlgebraError::Shape(format!("{} left factors but {} right factors", a.len(), b.len())));
    }
    let Some(first) = a.first() else {
        return Err(AlgebraError::Shape("at least one rank-1 factor is needed".into()));
    };
    let ring = first.ring().clone();
    let a: Vec<Polynomial> = a.iter().map(|p| p.in_ring(&ring)).collect::<std::result::Result<_, _>>()?;
    let b: Vec<Polynomial> = b.iter().map(|p| p.in_ring(&ring)).collect::<std::result::Result<_, _>>()?;
    let n = a.len();
    let w = a.iter().zip(&b).fold(Polynomial::zero(&ring), |acc, (x, y)| &acc + &(x * y));

    let (mut even, mut odd) = (Vec::new(), Vec::new());
    for mask in 0..1usize << n {
        if mask.count_ones() % 2 == 0 { even.push(mask) } else { odd.push(mask) }
    }
    let index = |list: &[usize], m: usize| list.binary_search(&m).expect("basis subset");

    // column `src` of D restricted to (from -> to)
    let block = |from: &[usize], to: &[usize]| -> PolyMatrix {
        let size = from.len();
        let mut m = PolyMatrix::zeros(&ring, size, size);
        for (col, &s) in from.iter().enumerate() {
            for i in 0..n {
                let bit = 1 << i;
                let (target, coeff) = if s & bit != 0 { (s & !bit, &a[i]) } else { (s | bit, &b[i]) };
                let entry = if koszul_sign(s, i) { coeff.neg() } else { coeff.clone() };
                let row = index(to, target);
                let cur = m.get(row, col).clone();
                m.set(row, col, &cur + &entry);
            }
        }
        m
    };
    let a_mat = block(&odd, &even);
    let b_mat = block(&even, &odd);
    MatrixFactorization::checked(w, a_mat, b_mat)
}

/// `g_i` with `f(x) - f(y) = Σ (x_i - y_i) g_i`, by sequential substitution.
/// `double` must have `2N` variables: `x_0..x_{N-1}` first, then `y_0..y_{N-1}`,
/// where `N` is the number of variables of `f`.
pub fn divided_differences(f: &Polynomial, double: &Arc<PolyRing>) -> Result<Vec<Polynomial>> {
    let n = f.ring().nvars();
    if double.nvars() != 2 * n {
        return Err(AlgebraError::Shape(format!("double ring has {} variables, expected {}", double.nvars(), 2 * n)));
    }
    // h_i = f(y_0..y_{i-1}, x_i..x_{N-1})
    let h = |i: usize| -> Result<Polynomial> {
        let images: Vec<Polynomial> =
            (0..n).map(|k| Polynomial::var(double, if k < i { n + k } else { k })).collect();
        Ok(f.substitute(double, &images)?)
    };
    let mut out = Vec::with_capacity(n);
    let mut current = h(0)?;
    for i in 0..n {
        let next = h(i + 1)?;
        let diff = &current - &next;
        let linear = &Polynomial::var(double, i) - &Polynomial::var(double, n + i);
        let g = exact_quotient(&diff, &linear)
            .ok_or_else(|| AlgebraError::Invariant(format!("x{i} - y{i} does not divide a difference of f")))?;
        out.push(g);
        current = next;
    }
    Ok(out)
}

/// A bounded complex `(M, d)` of free modules over `S / (modulus)` with a
/// degree `-1` operator `h` such that `d² = 0`, `h² = 0` and `dh + hd = 0`.
/// Degrees run from `lowest` to `lowest + ranks.len() - 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KoszulDgModule {
    ring: Arc<PolyRing>,
    modulus: Vec<Polynomial>,
    lowest: i64,
    ranks: Vec<usize>,
    // d[k]: degree lowest+k -> lowest+k+1; h[k]: degree lowest+k+1 -> lowest+k
    d: Vec<PolyMatrix>,
    h: Vec<PolyMatrix>,
}

impl KoszulDgModule {
    pub fn new(
        ring: &Arc<PolyRing>,
        modulus: Vec<Polynomial>,
        lowest: i64,
        ranks: Vec<usize>,
        d: Vec<PolyMatrix>,
        h: Vec<PolyMatrix>,
    ) -> Result<Self> {
        let steps = ranks.len().saturating_sub(1);
        if d.len() != steps || h.len() != steps {
            return Err(AlgebraError::Shape(format!("{} degrees need {steps} maps of each kind", ranks.len())));
        }
        for k in 0..steps {
            if (d[k].rows(), d[k].cols()) != (ranks[k + 1], ranks[k]) {
                return Err(AlgebraError::Shape(format!("d in degree {} has the wrong shape", lowest + k as i64)));
            }
            if (h[k].rows(), h[k].cols()) != (ranks[k], ranks[k + 1]) {
                return Err(AlgebraError::Shape(format!("h in degree {} has the wrong shape", lowest + k as i64 + 1)));
            }
        }
        let modulus = modulus.iter().map(|p| p.in_ring(ring)).collect::<std::result::Result<Vec<_>, _>>()?;
        let module = KoszulDgModule { ring: ring.clone(), modulus, lowest, ranks, d, h };
        module.check()?;
        Ok(module)
    }

    /// The free module over the Koszul algebra on a bounded complex `P`:
    /// `M = P ⊕ εP` with `(εP)^k = P^{k+1}`, `d = d_P ⊕ (-d_P)` and `h(p) = εp`.
    /// `differentials[j]` maps degree `lowest + j` to `lowest + j + 1` of `P`.
    pub fn free_on(
        ring: &Arc<PolyRing>,
        modulus: Vec<Polynomial>,
        lowest: i64,
        ranks: &[usize],
        differentials: &[PolyMatrix],
    ) -> Result<Self> {
        if differentials.len() + 1 != ranks.len().max(1) {
            return Err(AlgebraError::Shape("complex needs one differential between consecutive degrees".into()));
        }
        // P indexed by position j (degree lowest + j); out of range means zero
        let p = |j: i64| if j >= 0 && (j as usize) < ranks.len() { ranks[j as usize] } else { 0 };
        let dp = |j: i64| -> PolyMatrix {
            if j >= 0 && (j as usize) < differentials.len() {
                differentials[j as usize].clone()
            } else {
                PolyMatrix::zeros(ring, p(j + 1), p(j))
            }
        };
        // M position k (degree lowest - 1 + k) is P(k-1) ⊕ P(k)
        let len = ranks.len() + 1;
        let m_ranks: Vec<usize> = (0..len as i64).map(|k| p(k - 1) + p(k)).collect();
        let mut d = Vec::new();
        let mut h = Vec::new();
        for k in 0..(len as i64 - 1) {
            let z = |r, c| PolyMatrix::zeros(ring, r, c);
            d.push(PolyMatrix::blocks(&dp(k - 1), &z(p(k), p(k)), &z(p(k + 1), p(k - 1)), &dp(k).neg())?);
            // h from position k+1 = P(k) ⊕ P(k+1) to position k = P(k-1) ⊕ P(k)
            h.push(PolyMatrix::blocks(
                &z(p(k - 1), p(k)),
                &z(p(k - 1), p(k + 1)),
                &PolyMatrix::identity(ring, p(k)),
                &z(p(k), p(k + 1)),
            )?);
        }
        Self::new(ring, modulus, lowest - 1, m_ranks, d, h)
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn lowest(&self) -> i64 {
        self.lowest
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    fn rank_at(&self, k: i64) -> usize {
        if k < 0 { 0 } else { self.ranks.get(k as usize).copied().unwrap_or(0) }
    }

    /// `d` out of position `k` (zero at the ends).
    fn d_at(&self, k: i64) -> PolyMatrix {
        match usize::try_from(k).ok().and_then(|k| self.d.get(k)) {
            Some(m) => m.clone(),
            None => PolyMatrix::zeros(&self.ring, self.rank_at(k + 1), self.rank_at(k)),
        }
    }

    /// `h` out of position `k` into position `k - 1`.
    fn h_at(&self, k: i64) -> PolyMatrix {
        match usize::try_from(k - 1).ok().and_then(|k| self.h.get(k)) {
            Some(m) => m.clone(),
            None => PolyMatrix::zeros(&self.ring, self.rank_at(k - 1), self.rank_at(k)),
        }
    }

    fn check(&self) -> Result<()> {
        let gb = buchberger(&self.ring, &self.modulus)?;
        let vanishes = |m: &PolyMatrix| -> Result<bool> {
            for p in m.entries() {
                if !gb.normal_form(p)?.is_zero() {
                    return Ok(false);
                }
            }
            Ok(true)
        };
        for k in 0..self.ranks.len() as i64 {
            let deg = self.lowest + k;
            if !vanishes(&self.d_at(k + 1).mul(&self.d_at(k))?)? {
                return Err(AlgebraError::Invariant(format!("d² is not zero on degree {deg}")));
            }
            if !vanishes(&self.h_at(k - 1).mul(&self.h_at(k))?)? {
                return Err(AlgebraError::Invariant(format!("h² is not zero on degree {deg}")));
            }
            let anti = self.d_at(k - 1).mul(&self.h_at(k))?.add(&self.h_at(k + 1).mul(&self.d_at(k))?)?;
            if !vanishes(&anti)? {
                return Err(AlgebraError::Invariant(format!("dh + hd is not zero on degree {deg}")));
            }
        }
        Ok(())
    }
}

/// Folds `(M, d, h)` into the 2-periodic complex with even part `⊕ M^{2i}`,
/// odd part `⊕ M^{2i+1}` and differential `d + h`. Summands appear by
/// increasing degree.
pub fn xi_fold(k: &KoszulDgModule) -> Result<Z2Complex> {
    let ring = k.ring.clone();
    let n = k.ranks.len() as i64;
    let is_even = |pos: i64| (k.lowest + pos).rem_euclid(2) == 0;
    let mut offsets = vec![0usize; n as usize];
    let (mut even_rank, mut odd_rank) = (0, 0);
    for pos in 0..n {
        let slot = if is_even(pos) { &mut even_rank } else { &mut odd_rank };
        offsets[pos as usize] = *slot;
        *slot += k.ranks[pos as usize];
    }
    let mut d_plus = PolyMatrix::zeros(&ring, odd_rank, even_rank);
    let mut d_minus = PolyMatrix::zeros(&ring, even_rank, odd_rank);
    for pos in 0..n {
        let target = if is_even(pos) { &mut d_plus } else { &mut d_minus };
        for (to, map) in [(pos + 1, k.d_at(pos)), (pos - 1, k.h_at(pos))] {
            if to < 0 || to >= n {
                continue;
            }
            let (r0, c0) = (offsets[to as usize], offsets[pos as usize]);
            for i in 0..map.rows() {
                for j in 0..map.cols() {
                    target.set(r0 + i, c0 + j, map.get(i, j).clone());
                }
            }
        }
    }
    let z = Z2Complex::new(Polynomial::zero(&ring), k.modulus.clone(), d_plus, d_minus)?;
    z.check()?;
    Ok(z)
}
