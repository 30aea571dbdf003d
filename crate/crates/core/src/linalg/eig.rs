//! Hermitian eigendecomposition by cyclic complex Jacobi rotations.

use num_complex::Complex64;

use super::matrix::{hermitian_residual, ComplexMatrix, ZERO};
use crate::error::{Error, Result};
use crate::tolerance::Tolerances;

const MAX_SWEEPS: usize = 100;

#[derive(Debug, Clone, PartialEq)]
pub struct EigDecomposition {
    /// Ascending; ties keep the order in which the solver produced them.
    pub eigenvalues: Vec<f64>,
    /// Column `k` is a unit eigenvector for `eigenvalues[k]`.
    pub eigenvectors: ComplexMatrix,
}

impl EigDecomposition {
    /// `Q·diag(λ)·Q*`.
    pub fn reconstruct(&self) -> ComplexMatrix {
        let n = self.eigenvalues.len();
        let q = &self.eigenvectors;
        let mut out = ComplexMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = ZERO;
                for (k, &lam) in self.eigenvalues.iter().enumerate() {
                    acc += q[(i, k)] * lam * q[(j, k)].conj();
                }
                out[(i, j)] = acc;
            }
        }
        out
    }
}

fn off_diagonal_norm(a: &ComplexMatrix) -> f64 {
    let n = a.rows();
    let mut sum = 0.0;
    for i in 0..n {
        for j in (i + 1)..n {
            sum += a[(i, j)].norm_sqr();
        }
    }
    (2.0 * sum).sqrt()
}

/// Eigenvalues and orthonormal eigenvectors of a Hermitian matrix.
///
/// Sweeps visit pairs `(p, q)` with `p < q` in row order. Each rotation first
/// removes the phase of `a[p][q]` and then applies the real symmetric Jacobi
/// rotation, so the pair is annihilated exactly. The result is sorted by
/// ascending eigenvalue with a stable sort.
pub fn hermitian_eig(h: &ComplexMatrix, tol: &Tolerances) -> Result<EigDecomposition> {
    let n = h.ensure_square()?;
    let scale = h.max_abs();
    let asym = hermitian_residual(h)?;
    if asym > tol.eig_residual * scale {
        return Err(Error::NotHermitian { residual: asym });
    }

    // Work on the exactly Hermitian part.
    let mut a = h.clone();
    for i in 0..n {
        a[(i, i)] = Complex64::new(h[(i, i)].re, 0.0);
        for j in (i + 1)..n {
            let z = (h[(i, j)] + h[(j, i)].conj()) * 0.5;
            a[(i, j)] = z;
            a[(j, i)] = z.conj();
        }
    }
    let mut v = ComplexMatrix::identity(n);
    let stop = f64::EPSILON * a.frobenius();

    let mut sweeps = 0;
    while sweeps < MAX_SWEEPS && off_diagonal_norm(&a) > stop {
        sweeps += 1;
        for p in 0..n {
            for q in (p + 1)..n {
                rotate(&mut a, &mut v, p, q);
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(i, i)].re.total_cmp(&a[(j, j)].re));
    let eigenvalues: Vec<f64> = order.iter().map(|&k| a[(k, k)].re).collect();
    let mut eigenvectors = ComplexMatrix::zeros(n, n);
    for (dst, &src) in order.iter().enumerate() {
        for i in 0..n {
            eigenvectors[(i, dst)] = v[(i, src)];
        }
    }

    let decomposition = EigDecomposition {
        eigenvalues,
        eigenvectors,
    };
    let residual = eigen_residual(h, &decomposition)?;
    if residual > tol.eig_residual * scale {
        return Err(Error::NoConvergence { sweeps, residual });
    }
    Ok(decomposition)
}

/// Worst `‖H·q_k − λ_k·q_k‖_max` over all columns.
pub fn eigen_residual(h: &ComplexMatrix, eig: &EigDecomposition) -> Result<f64> {
    let hq = h.multiply(&eig.eigenvectors)?;
    let mut worst: f64 = 0.0;
    for (k, &lam) in eig.eigenvalues.iter().enumerate() {
        for i in 0..h.rows() {
            worst = worst.max((hq[(i, k)] - eig.eigenvectors[(i, k)] * lam).norm());
        }
    }
    Ok(worst)
}

fn rotate(a: &mut ComplexMatrix, v: &mut ComplexMatrix, p: usize, q: usize) {
    let apq = a[(p, q)];
    let r = apq.norm();
    if r == 0.0 {
        return;
    }
    let phase = apq / r;
    let app = a[(p, p)].re;
    let aqq = a[(q, q)].re;

    let theta = (aqq - app) / (2.0 * r);
    let t = if theta.is_finite() {
        theta.signum() / (theta.abs() + theta.hypot(1.0))
    } else {
        0.0
    };
    let c = 1.0 / t.hypot(1.0);
    let s = t * c;

    // G = diag(1, conj(phase)) · [[c, s], [-s, c]] acting on (p, q).
    let g_pp = Complex64::new(c, 0.0);
    let g_pq = Complex64::new(s, 0.0);
    let g_qp = -phase.conj() * s;
    let g_qq = phase.conj() * c;

    let n = a.rows();
    for k in 0..n {
        let akp = a[(k, p)];
        let akq = a[(k, q)];
        a[(k, p)] = akp * g_pp + akq * g_qp;
        a[(k, q)] = akp * g_pq + akq * g_qq;
    }
    for k in 0..n {
        let apk = a[(p, k)];
        let aqk = a[(q, k)];
        a[(p, k)] = g_pp.conj() * apk + g_qp.conj() * aqk;
        a[(q, k)] = g_pq.conj() * apk + g_qq.conj() * aqk;
    }
    a[(p, q)] = ZERO;
    a[(q, p)] = ZERO;
    a[(p, p)] = Complex64::new(a[(p, p)].re, 0.0);
    a[(q, q)] = Complex64::new(a[(q, q)].re, 0.0);

    for k in 0..n {
        let vkp = v[(k, p)];
        let vkq = v[(k, q)];
        v[(k, p)] = vkp * g_pp + vkq * g_qp;
        v[(k, q)] = vkp * g_pq + vkq * g_qq;
    }
}
