//! Betti numbers and Chern numbers of a smooth toric Fano variety, read off
//! the face lattice of its anticanonical polytope Δ.
//!
//! The variety is a disjoint union of tori, one per face θ of Δ, so
//! `Ê(t) = Σ_θ (t-1)^{dim θ}`. Its coefficients are the even Betti numbers.
//! On the Chern side `c_n` counts vertices of Δ, and `c_1 c_{n-1}` sums
//! `(interior lattice points + 1)` over the edges of Δ.

use std::fmt;

use itertools::Itertools;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice_polytope::{edge_interior_points, AnticanonicalPolytope, FaceLattice};

/// Univariate polynomial with integer coefficients, lowest degree first.
/// Trailing zeros are trimmed, so the zero polynomial has no coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct IntPolynomial {
    coeffs: Vec<i64>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn constant(c: i64) -> Self {
        Self::new(vec![c])
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> i64 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn eval(&self, t: i64) -> Result<i64> {
        self.coeffs.iter().rev().try_fold(0i64, |acc, &c| {
            acc.checked_mul(t)
                .and_then(|x| x.checked_add(c))
                .ok_or(Error::Overflow)
        })
    }

    pub fn checked_mul(&self, other: &IntPolynomial) -> Result<IntPolynomial> {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return Ok(IntPolynomial::default());
        }
        let mut out = vec![0i64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                let term = a.checked_mul(b).ok_or(Error::Overflow)?;
                out[i + j] = out[i + j].checked_add(term).ok_or(Error::Overflow)?;
            }
        }
        Ok(IntPolynomial::new(out))
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let terms = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, &c)| c != 0)
            .map(|(k, &c)| match (k, c) {
                (0, c) => c.to_string(),
                (1, 1) => "t".to_string(),
                (1, c) => format!("{c}t"),
                (k, 1) => format!("t^{k}"),
                (k, c) => format!("{c}t^{k}"),
            })
            .join(" + ");
        write!(f, "{}", terms.replace("+ -", "- "))
    }
}

/// `Ê(t) = Σ_k f_k (t-1)^k`, expanded.
pub fn e_hat_polynomial(faces: &FaceLattice) -> Result<IntPolynomial> {
    // Horner in (t - 1)
    let mut acc = IntPolynomial::default();
    let shift = IntPolynomial::new(vec![-1, 1]);
    for f_k in faces.f_vector().into_iter().rev() {
        let f_k = i64::try_from(f_k).map_err(|_| Error::Overflow)?;
        acc = acc.checked_mul(&shift)?;
        let mut coeffs = acc.coeffs.clone();
        if coeffs.is_empty() {
            coeffs.push(0);
        }
        coeffs[0] = coeffs[0].checked_add(f_k).ok_or(Error::Overflow)?;
        acc = IntPolynomial::new(coeffs);
    }
    Ok(acc)
}

/// Coefficients of `Ê(t)` as even Betti numbers `h^{2k}`, `k = 0..=deg`.
pub fn betti_numbers(e_hat: &IntPolynomial) -> Result<Vec<u64>> {
    e_hat
        .coeffs
        .iter()
        .enumerate()
        .map(|(degree, &value)| {
            u64::try_from(value).map_err(|_| Error::NegativeCoefficient { degree, value })
        })
        .collect()
}

/// Exact `d²/dt² p(t)` at `t = 1`.
pub fn second_derivative_at_one(p: &IntPolynomial) -> Result<i64> {
    p.coeffs
        .iter()
        .enumerate()
        .skip(2)
        .try_fold(0i64, |acc, (k, &c)| {
            let k = i64::try_from(k).map_err(|_| Error::Overflow)?;
            (k * (k - 1))
                .checked_mul(c)
                .and_then(|x| acc.checked_add(x))
                .ok_or(Error::Overflow)
        })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ChernNumbers {
    pub c_n: i64,
    pub c1_cn1: i64,
}

/// `c_n = f_0(Δ)` and `c_1 c_{n-1} = Σ_{edges θ} (#interior(θ) + 1)`.
pub fn chern_numbers(dual: &AnticanonicalPolytope, faces: &FaceLattice) -> Result<ChernNumbers> {
    let c_n = i64::try_from(faces.faces(0).len()).map_err(|_| Error::Overflow)?;
    let mut c1_cn1 = 0i64;
    for (a, b) in dual.edges(faces) {
        let interior = edge_interior_points(&dual.vertices()[a], &dual.vertices()[b])?;
        let degree = i64::try_from(interior + 1).map_err(|_| Error::Overflow)?;
        c1_cn1 = c1_cn1.checked_add(degree).ok_or(Error::Overflow)?;
    }
    Ok(ChernNumbers { c_n, c1_cn1 })
}

/// Everything the identity checks need from a smooth toric Fano variety.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ToricInvariants {
    pub n: usize,
    pub e_hat: IntPolynomial,
    pub betti: Vec<u64>,
    pub c_n: i64,
    pub c1_cn1: i64,
    /// `f_k(Δ)` for `k = 0..=n`.
    pub f_vector: Vec<usize>,
    /// Σ over edges of Δ of the number of interior lattice points.
    pub edge_interior_total: i64,
}

impl ToricInvariants {
    pub fn compute(dual: &AnticanonicalPolytope) -> Result<Self> {
        let faces = dual.face_lattice()?;
        Self::from_faces(dual, &faces)
    }

    pub fn from_faces(dual: &AnticanonicalPolytope, faces: &FaceLattice) -> Result<Self> {
        let e_hat = e_hat_polynomial(faces)?;
        let betti = betti_numbers(&e_hat)?;
        let chern = chern_numbers(dual, faces)?;
        let f_vector = faces.f_vector();
        let f1 = i64::try_from(f_vector.get(1).copied().unwrap_or(0)).map_err(|_| Error::Overflow)?;
        Ok(ToricInvariants {
            n: faces.dim(),
            e_hat,
            betti,
            c_n: chern.c_n,
            c1_cn1: chern.c1_cn1,
            f_vector,
            edge_interior_total: chern.c1_cn1 - f1,
        })
    }

    pub fn chern(&self) -> ChernNumbers {
        ChernNumbers {
            c_n: self.c_n,
            c1_cn1: self.c1_cn1,
        }
    }
}
