//! Constructive side of the criterion: phases, the symmetric unitary `S`,
//! the conjugation `C = S·J`, a `C`-fixed basis `Q` and the symmetric `Q*TQ`.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{
    symmetry_residual, unitarity_residual, ComplexMatrix, ComplexVector, ONE, ZERO,
};
use crate::modulus::{modulus_test, spectral_pair, SpectralPair, Verdict};
use crate::tolerance::Tolerances;

/// Seed vectors shorter than this after projection are skipped.
const SEED_MIN_NORM: f64 = 1e-6;

/// Unimodular constants with `⟨u_i,v_j⟩ = α_j·conj(α_i)·⟨u_j,v_i⟩`.
#[derive(Debug, Clone, PartialEq)]
pub struct PhaseVector {
    pub alphas: Vec<Complex64>,
    /// Connected component of each index in the graph of nonzero Gram
    /// entries. Each component has its own free root phase.
    pub component: Vec<usize>,
    /// Worst violation of the phase identity over all `(i, j)`.
    pub residual: f64,
}

impl PhaseVector {
    pub fn len(&self) -> usize {
        self.alphas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.alphas.is_empty()
    }

    /// Identity residual `max |⟨u_i,v_j⟩ − α_j·conj(α_i)·⟨u_j,v_i⟩|` against `gram`.
    pub fn identity_residual(&self, gram: &ComplexMatrix) -> f64 {
        let n = self.alphas.len();
        let mut worst: f64 = 0.0;
        for i in 0..n {
            for j in 0..n {
                let expect = self.alphas[j] * self.alphas[i].conj() * gram[(i, j)];
                worst = worst.max((gram[(j, i)] - expect).norm());
            }
        }
        worst
    }
}

/// `β_ij = ⟨u_i,v_j⟩ / ⟨u_j,v_i⟩`, normalized to the unit circle.
pub fn beta(gram: &ComplexMatrix, i: usize, j: usize) -> Complex64 {
    let b = gram[(j, i)] / gram[(i, j)];
    b / b.norm()
}

/// Solves the phase identity on a Gram matrix (`(i, j)` entry `⟨u_j, v_i⟩`).
///
/// Indices are joined by an edge when both `⟨u_i,v_j⟩` and `⟨u_j,v_i⟩`
/// exceed `zero_tol`. Each component is rooted at its smallest index with
/// `α = 1`, and phases are pushed along a maximum-weight spanning tree via
/// `α_j = α_i·β_ij`, so the best-conditioned ratios are used first.
pub fn phases_from_gram(gram: &ComplexMatrix, tol: &Tolerances) -> Result<PhaseVector> {
    let n = gram.ensure_square()?;
    let weight = |i: usize, j: usize| gram[(i, j)].norm().min(gram[(j, i)].norm());

    let mut alphas = vec![ZERO; n];
    let mut component = vec![usize::MAX; n];
    let mut n_components = 0;

    for root in 0..n {
        if component[root] != usize::MAX {
            continue;
        }
        let label = n_components;
        n_components += 1;
        component[root] = label;
        alphas[root] = ONE;
        let mut members = vec![root];

        // Prim's algorithm, maximizing edge weight.
        loop {
            let mut best: Option<(usize, usize, f64)> = None;
            for &i in &members {
                for (j, &owner) in component.iter().enumerate() {
                    if owner != usize::MAX {
                        continue;
                    }
                    let w = weight(i, j);
                    if w > tol.zero_tol && best.is_none_or(|(_, _, bw)| w > bw) {
                        best = Some((i, j, w));
                    }
                }
            }
            let Some((i, j, _)) = best else { break };
            alphas[j] = alphas[i] * beta(gram, i, j);
            component[j] = label;
            members.push(j);
        }
    }

    let bound = tol.certificate_bound();
    let mut residual: f64 = 0.0;
    for i in 0..n {
        for j in 0..n {
            let r = (gram[(j, i)] - alphas[j] * alphas[i].conj() * gram[(i, j)]).norm();
            if r > bound {
                return Err(Error::PhaseInconsistency { i, j, residual: r });
            }
            residual = residual.max(r);
        }
    }

    Ok(PhaseVector {
        alphas,
        component,
        residual,
    })
}

pub fn alpha_phases(sp: &SpectralPair, tol: &Tolerances) -> Result<PhaseVector> {
    phases_from_gram(&sp.gram, tol)
}

/// `S = V·diag(α)·Uᵗ`, checked to be symmetric and unitary.
pub fn build_s(sp: &SpectralPair, alphas: &PhaseVector, tol: &Tolerances) -> Result<ComplexMatrix> {
    let a = ComplexMatrix::diagonal(&alphas.alphas)?;
    let s = sp.v.multiply(&a)?.multiply(&sp.u.transpose())?;
    let symmetry = symmetry_residual(&s)?;
    let unitarity = unitarity_residual(&s)?;
    let bound = tol.certificate_bound();
    if symmetry > bound || unitarity > bound {
        return Err(Error::SymmetryFailure {
            symmetry,
            unitarity,
        });
    }
    Ok(s)
}

/// `C x = S·conj(x)`.
pub fn apply_conjugation(s: &ComplexMatrix, x: &ComplexVector) -> Result<ComplexVector> {
    s.ensure_square()?;
    s.mul_vec(&x.conj())
}

/// Orthonormal basis of vectors fixed by `C = S·J`, as the columns of `Q`.
///
/// Each new vector starts from the first standard basis vector with a
/// nonnegligible component outside the span built so far. Averaging with its
/// image, `x + Cx`, yields a fixed vector that is automatically orthogonal to
/// the earlier ones; if that sum nearly cancels, `i(x − Cx)` is used instead.
pub fn c_real_onb(s: &ComplexMatrix, tol: &Tolerances) -> Result<ComplexMatrix> {
    let n = s.ensure_square()?;
    let mut basis: Vec<ComplexVector> = Vec::with_capacity(n);

    for _ in 0..n {
        let seed = (0..n).find_map(|k| {
            let mut x = ComplexVector::basis(n, k);
            for e in &basis {
                x = x.sub(&e.scale(x.inner(e)));
            }
            let norm = x.norm();
            (norm > SEED_MIN_NORM).then(|| x.scale(Complex64::new(1.0 / norm, 0.0)))
        });
        let Some(x) = seed else {
            return Err(Error::ConstructionFailure(format!(
                "no seed vector outside a span of dimension {}",
                basis.len()
            )));
        };

        let cx = apply_conjugation(s, &x)?;
        let mut w = x.add(&cx);
        if w.norm() < SEED_MIN_NORM {
            w = x.sub(&cx).scale(Complex64::i());
        }
        // Real Gram-Schmidt coefficients keep w fixed by C.
        for e in &basis {
            w = w.sub(&e.scale(Complex64::new(w.inner(e).re, 0.0)));
        }
        let norm = w.norm();
        if norm < SEED_MIN_NORM {
            return Err(Error::ConstructionFailure(format!(
                "fixed vector collapsed to norm {norm:e}"
            )));
        }
        basis.push(w.scale(Complex64::new(1.0 / norm, 0.0)));
    }

    let q = ComplexMatrix::from_columns(&basis)?;
    let bound = tol.certificate_bound();
    let fixed = fixed_point_residual(s, &q)?;
    let unitary = unitarity_residual(&q)?;
    if fixed > bound || unitary > bound {
        return Err(Error::ConstructionFailure(format!(
            "fixed-point residual {fixed:e}, unitarity residual {unitary:e}"
        )));
    }
    Ok(q)
}

/// `‖S·conj(Q) − Q‖_max`: how far the columns of `Q` are from being fixed by `C`.
pub fn fixed_point_residual(s: &ComplexMatrix, q: &ComplexMatrix) -> Result<f64> {
    s.multiply(&q.conj_entrywise())?.distance(q)
}

/// `‖T − C T* C‖_max = ‖T − S·Tᵗ·conj(S)‖_max`, relative to `max(1, ‖T‖_max)`.
pub fn conjugation_residual(t: &ComplexMatrix, s: &ComplexMatrix) -> Result<f64> {
    let ctc = s.multiply(&t.transpose())?.multiply(&s.conj_entrywise())?;
    Ok(t.distance(&ctc)? / t.max_abs().max(1.0))
}

#[derive(Debug, Clone, Copy, PartialEq, Default, serde::Serialize, serde::Deserialize)]
pub struct Residuals {
    pub s_symmetric: f64,
    pub s_unitary: f64,
    /// Worst violation of the phase identity.
    pub alpha: f64,
    /// `max_k ‖C·q_k − q_k‖`.
    pub fixed: f64,
    pub q_unitary: f64,
    /// `‖T − C T* C‖_max`, relative to `max(1, ‖T‖_max)`.
    pub ctc: f64,
    pub m_symmetric: f64,
}

impl Residuals {
    pub fn max(&self) -> f64 {
        self.named().iter().map(|(_, r)| *r).fold(0.0, f64::max)
    }

    pub fn named(&self) -> [(&'static str, f64); 7] {
        [
            ("s_symmetric", self.s_symmetric),
            ("s_unitary", self.s_unitary),
            ("alpha", self.alpha),
            ("fixed", self.fixed),
            ("q_unitary", self.q_unitary),
            ("ctc", self.ctc),
            ("m_symmetric", self.m_symmetric),
        ]
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Certificate {
    pub alphas: PhaseVector,
    pub s: ComplexMatrix,
    pub q: ComplexMatrix,
    /// `Q*·T·Q`, complex symmetric.
    pub m: ComplexMatrix,
    /// The `c` for which the construction ran on `T + cI`; zero when unshifted.
    pub shift: Complex64,
    pub residuals: Residuals,
}

fn measure(t: &ComplexMatrix, s: &ComplexMatrix, q: &ComplexMatrix, m: &ComplexMatrix, alpha: f64) -> Result<Residuals> {
    Ok(Residuals {
        s_symmetric: symmetry_residual(s)?,
        s_unitary: unitarity_residual(s)?,
        alpha,
        fixed: fixed_point_residual(s, q)?,
        q_unitary: unitarity_residual(q)?,
        ctc: conjugation_residual(t, s)?,
        m_symmetric: symmetry_residual(m)? / t.max_abs().max(1.0),
    })
}

fn accept(residuals: &Residuals, tol: &Tolerances) -> Result<()> {
    let bound = tol.certificate_bound();
    match residuals.named().into_iter().find(|(_, r)| *r > bound) {
        Some((check, residual)) => Err(Error::NotCertified { check, residual }),
        None => Ok(()),
    }
}

/// Runs the whole construction for a matrix that passes the modulus test.
pub fn symmetrize(t: &ComplexMatrix, tol: &Tolerances) -> Result<Certificate> {
    let report = modulus_test(t, tol)?;
    if report.verdict != Verdict::Uecsm {
        return Err(Error::NotUecsm(report.verdict));
    }
    let sp = spectral_pair(t, tol)?;
    let alphas = alpha_phases(&sp, tol)?;
    let s = build_s(&sp, &alphas, tol)?;
    let q = c_real_onb(&s, tol)?;
    let m = q.adjoint().multiply(t)?.multiply(&q)?;
    let residuals = measure(t, &s, &q, &m, alphas.residual)?;
    accept(&residuals, tol)?;
    Ok(Certificate {
        alphas,
        s,
        q,
        m,
        shift: ZERO,
        residuals,
    })
}

/// Builds the certificate on `T + cI` and reports `M = Q*(T + cI)Q − cI`,
/// which is a certificate for `T` itself.
pub fn symmetrize_shifted(t: &ComplexMatrix, shift: Complex64, tol: &Tolerances) -> Result<Certificate> {
    if shift == ZERO {
        return symmetrize(t, tol);
    }
    let shifted = symmetrize(&t.shifted(shift)?, tol)?;
    let m = shifted.m.shifted(-shift)?;
    let residuals = measure(t, &shifted.s, &shifted.q, &m, shifted.alphas.residual)?;
    accept(&residuals, tol)?;
    Ok(Certificate {
        m,
        shift,
        residuals,
        ..shifted
    })
}

/// Recomputes every certificate residual from scratch and returns the worst.
///
/// Checks unitarity of `Q`, symmetry of `M`, `M = Q*TQ`, that `S` is
/// symmetric unitary with `Q` fixed by `S·J`, and `T = S·Tᵗ·conj(S)`. The
/// phases are not consulted. Residuals that scale with `T` are divided by
/// `max(1, ‖T‖_max)`.
pub fn verify_certificate(t: &ComplexMatrix, cert: &Certificate) -> Result<f64> {
    let n = t.ensure_square()?;
    for m in [&cert.s, &cert.q, &cert.m] {
        if m.shape() != (n, n) {
            return Err(Error::DimensionMismatch {
                op: "verify_certificate",
                left: t.shape(),
                right: m.shape(),
            });
        }
    }
    let scale = t.max_abs().max(1.0);
    let qtq = cert.q.adjoint().multiply(t)?.multiply(&cert.q)?;
    let checks = [
        unitarity_residual(&cert.q)?,
        symmetry_residual(&cert.m)? / scale,
        cert.m.distance(&qtq)? / scale,
        symmetry_residual(&cert.s)?,
        unitarity_residual(&cert.s)?,
        fixed_point_residual(&cert.s, &cert.q)?,
        conjugation_residual(t, &cert.s)?,
    ];
    Ok(checks.into_iter().fold(0.0, f64::max))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn real(n: usize, data: &[f64]) -> ComplexMatrix {
        ComplexMatrix::from_real(n, n, data).unwrap()
    }

    /// Closed-form data for T = [[1, a], [0, 0]], listed with λ = 1 + a², 0.
    fn two_by_two_pair(a: f64) -> SpectralPair {
        let r = (1.0 + a * a).sqrt();
        let u = real(2, &[1.0 / r, -a / r, a / r, 1.0 / r]);
        SpectralPair::from_parts(vec![1.0 + a * a, 0.0], u, ComplexMatrix::identity(2)).unwrap()
    }

    #[test]
    fn two_by_two_phases_and_s() {
        let tol = Tolerances::default();
        let a = 1.0;
        let sp = two_by_two_pair(a);
        let alphas = alpha_phases(&sp, &tol).unwrap();
        assert_eq!(alphas.alphas[0], ONE);
        assert!((alphas.alphas[1] - c(-1.0, 0.0)).norm() < 1e-15);

        let s = build_s(&sp, &alphas, &tol).unwrap();
        let r = (1.0 + a * a).sqrt();
        let expected = real(2, &[1.0 / r, a / r, a / r, -1.0 / r]);
        assert!(s.distance(&expected).unwrap() < 1e-15);

        // C u1 = α1 v1 = (1, 0)
        let cu1 = apply_conjugation(&s, &sp.u.column(0)).unwrap();
        assert!(cu1.sub(&ComplexVector::basis(2, 0)).max_abs() < 1e-15);
    }

    #[test]
    fn identity_conjugation_is_entrywise_conj() {
        let x = ComplexVector::new(vec![c(1.0, 2.0), c(-3.0, 0.5)]).unwrap();
        let y = apply_conjugation(&ComplexMatrix::identity(2), &x).unwrap();
        assert_eq!(y, x.conj());
    }

    #[test]
    fn identity_s_gives_standard_basis() {
        let q = c_real_onb(&ComplexMatrix::identity(3), &Tolerances::default()).unwrap();
        assert_eq!(q, ComplexMatrix::identity(3));
    }

    #[test]
    fn two_by_two_fixed_basis() {
        let tol = Tolerances::default();
        let sp = two_by_two_pair(1.0);
        let s = build_s(&sp, &alpha_phases(&sp, &tol).unwrap(), &tol).unwrap();
        let q = c_real_onb(&s, &tol).unwrap();
        assert!(fixed_point_residual(&s, &q).unwrap() < 1e-15);
        assert!(unitarity_residual(&q).unwrap() < 1e-15);

        // The closed-form eigenvector basis of S (eigenvalues -1 and 1) is
        // fixed by the conjugation -S·J, the one built from α = (-1, 1).
        let a: f64 = 1.0;
        let r = (1.0 + a * a).sqrt();
        let d = (2.0 + 2.0 * a * a - 2.0 * r).sqrt();
        let e = ComplexMatrix::new(
            2,
            2,
            vec![c((1.0 - r) / d, 0.0), c(0.0, -a / d), c(a / d, 0.0), c(0.0, (1.0 - r) / d)],
        )
        .unwrap();
        assert!(fixed_point_residual(&s.scale(c(-1.0, 0.0)), &e).unwrap() < 1e-15);
        assert!(unitarity_residual(&e).unwrap() < 1e-15);
    }

    #[test]
    fn diagonal_matrix_certificate_is_trivial() {
        let tol = Tolerances::default();
        let t = real(3, &[1.0, 0.0, 0.0, 0.0, 2.0, 0.0, 0.0, 0.0, 3.0]);
        let sp = spectral_pair(&t, &tol).unwrap();
        let alphas = alpha_phases(&sp, &tol).unwrap();
        // Jacobi leaves diagonal input untouched, so U = V = I and every β is 1.
        assert!(alphas.alphas.iter().all(|a| (a - ONE).norm() < 1e-15));
        let s = build_s(&sp, &alphas, &tol).unwrap();
        assert!(s.distance(&ComplexMatrix::identity(3)).unwrap() < 1e-15);
    }

    #[test]
    fn symmetrize_rejects_non_uecsm() {
        let t = real(3, &[0., 1., 0., 0., 0., 2., 0., 0., 0.]);
        assert_eq!(
            symmetrize(&t, &Tolerances::default()).unwrap_err(),
            Error::NotUecsm(Verdict::NotUecsm)
        );
    }

    #[test]
    fn inconsistent_phases_are_reported() {
        // |g| symmetric but the cocycle fails.
        let gram = ComplexMatrix::new(
            3,
            3,
            vec![
                c(0.5, 0.0), c(0.5, 0.0), c(0.5, 0.0),
                c(0.5, 0.0), c(0.5, 0.0), c(0.0, 0.5),
                c(0.5, 0.0), c(0.5, 0.0), c(0.5, 0.0),
            ],
        )
        .unwrap();
        assert!(matches!(
            phases_from_gram(&gram, &Tolerances::default()),
            Err(Error::PhaseInconsistency { .. })
        ));
    }

    #[test]
    fn disconnected_components_get_independent_roots() {
        let gram = ComplexMatrix::new(
            3,
            3,
            vec![
                c(1.0, 0.0), ZERO, ZERO,
                ZERO, c(0.0, 0.6), c(0.8, 0.0),
                ZERO, c(0.0, 0.8), c(0.6, 0.0),
            ],
        )
        .unwrap();
        let p = phases_from_gram(&gram, &Tolerances::default()).unwrap();
        assert_eq!(p.component, vec![0, 1, 1]);
        assert_eq!(p.alphas[0], ONE);
        assert_eq!(p.alphas[1], ONE);
        assert!(p.residual < 1e-15);
        assert!((p.alphas[2] - c(0.0, 1.0)).norm() < 1e-15);
    }

    #[test]
    fn trivial_verification() {
        let cert = Certificate {
            alphas: PhaseVector {
                alphas: vec![ONE; 2],
                component: vec![0, 0],
                residual: 0.0,
            },
            s: ComplexMatrix::identity(2),
            q: ComplexMatrix::identity(2),
            m: ComplexMatrix::identity(2),
            shift: ZERO,
            residuals: Residuals::default(),
        };
        assert_eq!(verify_certificate(&ComplexMatrix::identity(2), &cert).unwrap(), 0.0);
    }
}
