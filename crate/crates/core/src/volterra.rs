//! Closed forms for the Volterra integration operator `[Tf](x) = ∫₀ˣ f(y) dy`
//! on `L²[0, 1]`.
//!
//! The singular pairs are `u_n(x) = √2·cos((n + ½)πx)` and
//! `v_n(x) = √2·sin((n + ½)πx)`, so the modulus criterion can be evaluated on
//! exact Gram entries rather than on a discretization.

use std::f64::consts::{PI, SQRT_2};

use num_complex::Complex64;

use crate::certificate::{phases_from_gram, PhaseVector};
use crate::error::Result;
use crate::linalg::ComplexMatrix;
use crate::modulus::{min_relative_gap, ModulusReport};
use crate::tolerance::Tolerances;

/// `2 / ((2n + 1)π)`.
pub fn vol_eigenvalue(n: u64) -> f64 {
    2.0 / ((2 * n + 1) as f64 * PI)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VolterraPair {
    pub index: u64,
    pub eigenvalue: f64,
}

impl VolterraPair {
    pub fn new(index: u64) -> Self {
        Self {
            index,
            eigenvalue: vol_eigenvalue(index),
        }
    }

    fn frequency(&self) -> f64 {
        (self.index as f64 + 0.5) * PI
    }

    pub fn u(&self, x: f64) -> f64 {
        SQRT_2 * (self.frequency() * x).cos()
    }

    pub fn v(&self, x: f64) -> f64 {
        SQRT_2 * (self.frequency() * x).sin()
    }

    /// `(−1)ⁿ`, the phase linking `u_n` and `v_n` through the reflection conjugation.
    pub fn alpha(&self) -> f64 {
        if self.index.is_multiple_of(2) {
            1.0
        } else {
            -1.0
        }
    }
}

/// The conjugation `[Cf](x) = conj(f(1 − x))`.
pub fn reflect_conjugate<F>(f: F) -> impl Fn(f64) -> Complex64
where
    F: Fn(f64) -> Complex64,
{
    move |x| f(1.0 - x).conj()
}

/// `⟨u_i, v_j⟩` in closed form.
pub fn vol_inner(i: u64, j: u64) -> f64 {
    if i == j {
        return 2.0 / (PI * (1 + 2 * i) as f64);
    }
    let (fi, fj) = (i as f64, j as f64);
    let sign = if (i + j).is_multiple_of(2) { 1.0 } else { -1.0 };
    let numerator = sign * (2.0 * fi + 1.0) - (2.0 * fj + 1.0);
    let denominator = PI * (fi - fj + fi * fi - fj * fj);
    numerator / denominator
}

/// `N×N` Gram block with `(i, j)` entry `⟨u_j, v_i⟩`, matching the layout of
/// [`crate::SpectralPair::gram`].
pub fn vol_gram(n: usize) -> ComplexMatrix {
    let mut g = ComplexMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            g[(i, j)] = Complex64::new(vol_inner(j as u64, i as u64), 0.0);
        }
    }
    g
}

#[derive(Debug, Clone, PartialEq)]
pub struct VolterraCheck {
    pub report: ModulusReport,
    /// Phases recovered from the Gram block, rooted at `α₀ = 1`.
    pub alphas: PhaseVector,
}

/// Evaluates the magnitude and cocycle conditions on the first `n` singular
/// pairs and recovers the phases.
pub fn vol_modulus_check(n: usize, tol: &Tolerances) -> Result<VolterraCheck> {
    let gram = vol_gram(n.max(1));
    let eigenvalues: Vec<f64> = (0..n.max(1) as u64).map(vol_eigenvalue).collect();
    let report = ModulusReport::from_gram(&gram, min_relative_gap(&eigenvalues), tol)?;
    let alphas = phases_from_gram(&gram, tol)?;
    Ok(VolterraCheck { report, alphas })
}

/// `⟨T e_n, e_m⟩` for the basis `e_n(x) = exp(2πin(x − ½))`.
///
/// With `T e_0 = x` and `T e_n = (e_n − (−1)ⁿ) / (2πin)` for `n ≠ 0`, the
/// only nonzero entries are the center `1/2`, the diagonal `−i/(2πn)`, and
/// the center row and column `(−1)ⁿ·i/(2πn)`.
pub fn volterra_entry(m: i64, n: i64) -> Complex64 {
    let parity = |k: i64| if k.rem_euclid(2) == 0 { 1.0 } else { -1.0 };
    match (m, n) {
        (0, 0) => Complex64::new(0.5, 0.0),
        (0, k) | (k, 0) => Complex64::new(0.0, parity(k) / (2.0 * PI * k as f64)),
        (m, n) if m == n => Complex64::new(0.0, -1.0 / (2.0 * PI * n as f64)),
        _ => Complex64::new(0.0, 0.0),
    }
}

/// The `(2N + 1)×(2N + 1)` truncation indexed by `m, n ∈ {−N, …, N}`; row
/// `m + N`, column `n + N` holds `⟨T e_n, e_m⟩`.
pub fn volterra_fourier_matrix(n: usize) -> ComplexMatrix {
    let size = 2 * n + 1;
    let half = n as i64;
    let mut out = ComplexMatrix::zeros(size, size);
    for r in 0..size {
        for c in 0..size {
            out[(r, c)] = volterra_entry(r as i64 - half, c as i64 - half);
        }
    }
    out
}
