//! Hodge diamonds `h^{p,q}` of smooth projective varieties, the E-polynomial
//! `E(u,v) = Σ (-1)^{p+q} h^{p,q} u^p v^q`, the numbers
//! `χ_p = Σ_q (-1)^{p+q} h^{p,q}`, and the off-diagonal defect
//! `Σ h^{p,q} ((q-p)/2)^2`.

use std::fmt;

use itertools::Itertools;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::{frac, int, Rational};

/// A non-fatal irregularity found while building a diamond.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Diagnostic {
    /// `h^{p,q} != h^{n-p,n-q}`.
    SerreDualityViolated { p: usize, q: usize },
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diagnostic::SerreDualityViolated { p, q } => {
                write!(f, "Serre duality fails at h^{{{p},{q}}}")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HodgeDiamond {
    n: usize,
    h: Vec<Vec<u32>>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    diagnostics: Vec<Diagnostic>,
}

impl HodgeDiamond {
    /// Hodge symmetry and `h^{0,0} = 1` are enforced; Serre duality
    /// failures are recorded in [`HodgeDiamond::diagnostics`].
    pub fn new(n: usize, h: Vec<Vec<u32>>) -> Result<Self> {
        if h.len() != n + 1 || h.iter().any(|row| row.len() != n + 1) {
            return Err(Error::InvalidDiamond(format!(
                "table must be {0}x{0} for n = {n}",
                n + 1
            )));
        }
        if h[0][0] != 1 {
            return Err(Error::InvalidDiamond(format!(
                "h^{{0,0}} must be 1, got {}",
                h[0][0]
            )));
        }
        for (p, q) in (0..=n).tuple_combinations() {
            if h[p][q] != h[q][p] {
                return Err(Error::InvalidDiamond(format!(
                    "Hodge symmetry fails: h^{{{p},{q}}} = {} but h^{{{q},{p}}} = {}",
                    h[p][q], h[q][p]
                )));
            }
        }
        let diagnostics = (0..=n)
            .cartesian_product(0..=n)
            .filter(|&(p, q)| (p, q) < (n - p, n - q) && h[p][q] != h[n - p][n - q])
            .map(|(p, q)| Diagnostic::SerreDualityViolated { p, q })
            .collect();
        Ok(HodgeDiamond { n, h, diagnostics })
    }

    /// The diagonal diamond with `h^{p,p} = betti[p]`.
    pub fn from_betti(betti: &[u64]) -> Result<Self> {
        let Some(n) = betti.len().checked_sub(1) else {
            return Err(Error::InvalidBetti("empty list".into()));
        };
        if betti[0] != 1 {
            return Err(Error::InvalidBetti(format!("h^0 must be 1, got {}", betti[0])));
        }
        if betti.iter().ne(betti.iter().rev()) {
            return Err(Error::InvalidBetti("not palindromic".into()));
        }
        let mut h = vec![vec![0u32; n + 1]; n + 1];
        for (p, &b) in betti.iter().enumerate() {
            h[p][p] = u32::try_from(b)
                .map_err(|_| Error::InvalidBetti(format!("h^{{{p},{p}}} = {b} too large")))?;
        }
        HodgeDiamond::new(n, h)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn h(&self, p: usize, q: usize) -> u32 {
        self.h[p][q]
    }

    pub fn table(&self) -> &[Vec<u32>] {
        &self.h
    }

    pub fn diagnostics(&self) -> &[Diagnostic] {
        &self.diagnostics
    }

    fn entries(&self) -> impl Iterator<Item = (usize, usize, u32)> + '_ {
        self.h
            .iter()
            .enumerate()
            .flat_map(|(p, row)| row.iter().enumerate().map(move |(q, &v)| (p, q, v)))
    }

    /// The first nonzero `h^{p,q}` with `p + q` odd, if any.
    pub fn odd_cohomology(&self) -> Option<(usize, usize, u32)> {
        self.entries().find(|&(p, q, v)| (p + q) % 2 == 1 && v != 0)
    }

    pub fn require_odd_vanishing(&self) -> Result<()> {
        match self.odd_cohomology() {
            Some((p, q, value)) => Err(Error::HypothesisViolated { p, q, value }),
            None => Ok(()),
        }
    }

    pub fn is_diagonal(&self) -> bool {
        self.entries().all(|(p, q, v)| p == q || v == 0)
    }

    /// `h^{2k} = Σ_{p+q=2k} h^{p,q}` for `k = 0..=n`.
    pub fn even_betti(&self) -> Vec<u64> {
        let mut out = vec![0u64; self.n + 1];
        for (p, q, v) in self.entries() {
            if (p + q) % 2 == 0 {
                out[(p + q) / 2] += u64::from(v);
            }
        }
        out
    }

    pub fn e_polynomial(&self) -> EPolynomial {
        let coeffs = self
            .h
            .iter()
            .enumerate()
            .map(|(p, row)| {
                row.iter()
                    .enumerate()
                    .map(|(q, &v)| sign(p + q) * i64::from(v))
                    .collect()
            })
            .collect();
        EPolynomial { coeffs }
    }

    /// `χ_p = Σ_q (-1)^{p+q} h^{p,q}`.
    pub fn chi_p(&self) -> Vec<i64> {
        self.h
            .iter()
            .enumerate()
            .map(|(p, row)| {
                row.iter()
                    .enumerate()
                    .map(|(q, &v)| sign(p + q) * i64::from(v))
                    .sum()
            })
            .collect()
    }

    /// `Σ_{p,q} h^{p,q} ((q-p)/2)^2`; zero exactly on diagonal diamonds.
    pub fn defect(&self) -> Rational {
        self.entries()
            .filter(|&(p, q, v)| p != q && v != 0)
            .map(|(p, q, v)| {
                let d = q as i64 - p as i64;
                int(v) * frac(d * d, 4)
            })
            .sum()
    }
}

fn sign(k: usize) -> i64 {
    if k % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `E(u,v)` as a coefficient table, `coeffs[p][q]` on `u^p v^q`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EPolynomial {
    coeffs: Vec<Vec<i64>>,
}

impl EPolynomial {
    pub fn coeff(&self, p: usize, q: usize) -> i64 {
        self.coeffs
            .get(p)
            .and_then(|row| row.get(q))
            .copied()
            .unwrap_or(0)
    }

    pub fn coeffs(&self) -> &[Vec<i64>] {
        &self.coeffs
    }

    /// Coefficients of `E(t, 1)` in `t`, one per `p = 0..=n`.
    pub fn at_v_one(&self) -> Vec<i64> {
        self.coeffs.iter().map(|row| row.iter().sum()).collect()
    }
}

fn monomial(var: &str, k: usize) -> String {
    match k {
        0 => String::new(),
        1 => var.to_string(),
        k => format!("{var}^{k}"),
    }
}

impl fmt::Display for EPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms: Vec<(usize, usize, i64)> = self
            .coeffs
            .iter()
            .enumerate()
            .flat_map(|(p, row)| row.iter().enumerate().map(move |(q, &c)| (p, q, c)))
            .filter(|&(_, _, c)| c != 0)
            .collect();
        if terms.is_empty() {
            return write!(f, "0");
        }
        // total degree descending, then by u-degree
        terms.sort_by(|a, b| (b.0 + b.1, b.0).cmp(&(a.0 + a.1, a.0)));
        let mut out = String::new();
        for (i, (p, q, c)) in terms.into_iter().enumerate() {
            let mono = format!("{}{}", monomial("u", p), monomial("v", q));
            let mag = c.unsigned_abs();
            let body = match (mono.is_empty(), mag) {
                (true, m) => m.to_string(),
                (false, 1) => mono,
                (false, m) => format!("{m}{mono}"),
            };
            match (i, c < 0) {
                (0, false) => out.push_str(&body),
                (0, true) => out.push_str(&format!("-{body}")),
                (_, false) => out.push_str(&format!(" + {body}")),
                (_, true) => out.push_str(&format!(" - {body}")),
            }
        }
        write!(f, "{out}")
    }
}
