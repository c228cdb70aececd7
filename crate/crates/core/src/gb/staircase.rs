use std::fmt;

use serde::{Serialize, Serializer};

use crate::poly::Monomial;

/// A vector-space dimension that may be infinite.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Dim {
    Finite(u64),
    Infinite,
}

impl Dim {
    pub fn finite(self) -> Option<u64> {
        match self {
            Dim::Finite(n) => Some(n),
            Dim::Infinite => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Dim::Finite(_))
    }

    /// `-1` stands for infinite; the encoding used in reports.
    pub fn as_signed(self) -> i64 {
        match self {
            Dim::Finite(n) => n as i64,
            Dim::Infinite => -1,
        }
    }
}

impl fmt::Display for Dim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Dim::Finite(n) => write!(f, "{n}"),
            Dim::Infinite => write!(f, "INFINITE"),
        }
    }
}

impl Serialize for Dim {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Dim::Finite(n) => s.serialize_u64(*n),
            Dim::Infinite => s.serialize_str("INFINITE"),
        }
    }
}

/// Leading terms of a submodule of `S^rank`, and the standard monomials they leave.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Staircase {
    nvars: usize,
    rank: usize,
    leading: Vec<(usize, Monomial)>,
}

impl Staircase {
    pub fn new(nvars: usize, rank: usize, leading: Vec<(usize, Monomial)>) -> Self {
        Staircase { nvars, rank, leading }
    }

    pub fn leading(&self) -> &[(usize, Monomial)] {
        &self.leading
    }

    fn in_lead(&self, comp: usize, m: &Monomial) -> bool {
        self.leading.iter().any(|(c, l)| *c == comp && l.divides(m))
    }

    /// Artinian iff every component either contains 1 or a pure power of each variable.
    pub fn is_finite(&self) -> bool {
        (0..self.rank).all(|c| {
            let comp: Vec<&Monomial> = self.leading.iter().filter(|(k, _)| *k == c).map(|(_, m)| m).collect();
            comp.iter().any(|m| m.is_one())
                || (0..self.nvars).all(|v| comp.iter().any(|m| m.pure_power_var() == Some(v)))
        })
    }

    pub fn dim(&self) -> Dim {
        if !self.is_finite() {
            return Dim::Infinite;
        }
        let mut count = 0u64;
        for c in 0..self.rank {
            self.walk(c, 0, &mut vec![0; self.nvars], &mut |_| count += 1);
        }
        Dim::Finite(count)
    }

    /// Standard monomials as `(component, monomial)`; `None` if infinite.
    pub fn standard_monomials(&self) -> Option<Vec<(usize, Monomial)>> {
        if !self.is_finite() {
            return None;
        }
        let mut out = Vec::new();
        for c in 0..self.rank {
            self.walk(c, 0, &mut vec![0; self.nvars], &mut |m| out.push((c, m)));
        }
        Some(out)
    }

    // The staircase is an order ideal, so once prefix * x_v^e is a leading
    // multiple every larger exponent is too.
    fn walk(&self, comp: usize, v: usize, exps: &mut Vec<u32>, visit: &mut dyn FnMut(Monomial)) {
        if v == self.nvars {
            let m = Monomial::from_exponents(exps);
            if !self.in_lead(comp, &m) {
                visit(m);
            }
            return;
        }
        loop {
            if self.in_lead(comp, &Monomial::from_exponents(exps)) {
                break;
            }
            self.walk(comp, v + 1, exps, visit);
            exps[v] += 1;
        }
        exps[v] = 0;
    }
}
