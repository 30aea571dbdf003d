//! The modulus criterion: pair the eigenvectors of `T*T` and `TT*` and check
//! the magnitude and cocycle conditions on their Gram matrix.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{hermitian_eig, ComplexMatrix};
use crate::tolerance::Tolerances;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Uecsm,
    NotUecsm,
    /// Repeated (or numerically clustered) singular values: the criterion
    /// says nothing either way.
    Inapplicable,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Uecsm => "UECSM",
            Verdict::NotUecsm => "NOT_UECSM",
            Verdict::Inapplicable => "INAPPLICABLE",
        }
    }
}

/// Paired eigendecompositions of `T*T` (columns of `u`) and `TT*` (columns of `v`).
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralPair {
    /// Ascending, shared by both products.
    pub eigenvalues: Vec<f64>,
    pub u: ComplexMatrix,
    pub v: ComplexMatrix,
    /// `V*U`; entry `(i, j)` is `⟨u_j, v_i⟩`.
    pub gram: ComplexMatrix,
    pub min_rel_gap: f64,
}

impl SpectralPair {
    /// Assembles a pair from known eigenvectors, e.g. closed-form ones.
    pub fn from_parts(eigenvalues: Vec<f64>, u: ComplexMatrix, v: ComplexMatrix) -> Result<Self> {
        let n = u.ensure_square()?;
        if v.shape() != u.shape() || eigenvalues.len() != n {
            return Err(Error::DimensionMismatch {
                op: "spectral_pair",
                left: u.shape(),
                right: v.shape(),
            });
        }
        let gram = v.adjoint().multiply(&u)?;
        let min_rel_gap = min_relative_gap(&eigenvalues);
        Ok(Self {
            eigenvalues,
            u,
            v,
            gram,
            min_rel_gap,
        })
    }

    pub fn dim(&self) -> usize {
        self.eigenvalues.len()
    }

    /// `⟨u_i, v_j⟩`.
    pub fn inner(&self, i: usize, j: usize) -> num_complex::Complex64 {
        self.gram[(j, i)]
    }
}

/// Smallest `(λ_{k+1} − λ_k) / max(1, |λ|_max)` over adjacent sorted
/// eigenvalues; infinite for a single eigenvalue.
pub fn min_relative_gap(eigenvalues: &[f64]) -> f64 {
    let mut sorted = eigenvalues.to_vec();
    sorted.sort_by(f64::total_cmp);
    let top = sorted.iter().fold(1.0_f64, |m, x| m.max(x.abs()));
    sorted
        .windows(2)
        .map(|w| (w[1] - w[0]) / top)
        .fold(f64::INFINITY, f64::min)
}

pub fn spectral_pair(t: &ComplexMatrix, tol: &Tolerances) -> Result<SpectralPair> {
    tol.validate()?;
    t.ensure_square()?;
    let tstar = t.adjoint();
    let left = hermitian_eig(&tstar.multiply(t)?, tol)?;
    let right = hermitian_eig(&t.multiply(&tstar)?, tol)?;

    let top = left.eigenvalues.iter().fold(1.0_f64, |m, x| m.max(x.abs()));
    for (index, (&a, &b)) in left.eigenvalues.iter().zip(&right.eigenvalues).enumerate() {
        if (a - b).abs() > tol.test_tol * top {
            return Err(Error::SpectrumMismatch {
                index,
                left: a,
                right: b,
            });
        }
    }
    SpectralPair::from_parts(left.eigenvalues, left.eigenvectors, right.eigenvectors)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ModulusReport {
    pub verdict: Verdict,
    /// Worst `||⟨u_i,v_j⟩| − |⟨u_j,v_i⟩||` over `i < j`.
    pub max_magnitude_residual: f64,
    /// Worst `|LHS − RHS|` of the cocycle identity over `i < j < k`.
    pub max_cocycle_residual: f64,
    pub worst_pair: Option<(usize, usize)>,
    pub worst_triple: Option<(usize, usize, usize)>,
    pub min_rel_gap: f64,
}

impl ModulusReport {
    /// Evaluates both conditions on a Gram matrix whose `(i, j)` entry is
    /// `⟨u_j, v_i⟩`.
    pub fn from_gram(gram: &ComplexMatrix, min_rel_gap: f64, tol: &Tolerances) -> Result<Self> {
        let n = gram.ensure_square()?;
        // <u_i, v_j> = gram[(j, i)]
        let ip = |i: usize, j: usize| gram[(j, i)];

        let mut max_magnitude_residual = 0.0;
        let mut worst_pair = None;
        for i in 0..n {
            for j in (i + 1)..n {
                let r = (ip(i, j).norm() - ip(j, i).norm()).abs();
                if worst_pair.is_none() || r > max_magnitude_residual {
                    max_magnitude_residual = r;
                    worst_pair = Some((i, j));
                }
            }
        }

        let mut max_cocycle_residual = 0.0;
        let mut worst_triple = None;
        for i in 0..n {
            for j in (i + 1)..n {
                for k in (j + 1)..n {
                    let lhs = ip(i, j) * ip(j, k) * ip(k, i);
                    let rhs = ip(i, k) * ip(k, j) * ip(j, i);
                    let r = (lhs - rhs).norm();
                    if worst_triple.is_none() || r > max_cocycle_residual {
                        max_cocycle_residual = r;
                        worst_triple = Some((i, j, k));
                    }
                }
            }
        }

        let verdict = if min_rel_gap <= tol.gap_rel {
            Verdict::Inapplicable
        } else if max_magnitude_residual <= tol.test_tol && max_cocycle_residual <= tol.test_tol {
            Verdict::Uecsm
        } else {
            Verdict::NotUecsm
        };

        Ok(Self {
            verdict,
            max_magnitude_residual,
            max_cocycle_residual,
            worst_pair,
            worst_triple,
            min_rel_gap,
        })
    }

    pub fn is_applicable(&self) -> bool {
        self.verdict != Verdict::Inapplicable
    }
}

pub fn modulus_test(t: &ComplexMatrix, tol: &Tolerances) -> Result<ModulusReport> {
    let sp = spectral_pair(t, tol)?;
    ModulusReport::from_gram(&sp.gram, sp.min_rel_gap, tol)
}
