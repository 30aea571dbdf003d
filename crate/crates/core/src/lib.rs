//! Decide whether a square complex matrix is unitarily equivalent to a
//! complex symmetric matrix (UECSM), and build a certificate when it is.
//!
//! The test works from the eigenvectors `u_i` of `T*T` and `v_i` of `TT*`.
//! When the singular values of `T` are distinct, `T` is UECSM exactly when
//!
//! ```text
//! |⟨u_i, v_j⟩| = |⟨u_j, v_i⟩|                                     (magnitude)
//! ⟨u_i,v_j⟩⟨u_j,v_k⟩⟨u_k,v_i⟩ = ⟨u_i,v_k⟩⟨u_k,v_j⟩⟨u_j,v_i⟩         (cocycle)
//! ```
//!
//! hold for all `i < j < k`. A passing matrix yields unimodular phases `α`,
//! a symmetric unitary `S = V·diag(α)·Uᵗ`, the conjugation `C = S·J`, a
//! `C`-fixed orthonormal basis `Q`, and the complex symmetric `Q*TQ`.
//!
//! ```
//! use uecsm::{modulus_test, symmetrize, ComplexMatrix, Tolerances, Verdict};
//!
//! let t = ComplexMatrix::from_real(3, 3, &[0., 0., 0., 1., 2., 0., 1., 0., 2.]).unwrap();
//! let tol = Tolerances::default();
//! assert_eq!(modulus_test(&t, &tol).unwrap().verdict, Verdict::Uecsm);
//!
//! let cert = symmetrize(&t, &tol).unwrap();
//! assert!(uecsm::symmetry_residual(&cert.m).unwrap() < 1e-10);
//! ```

pub mod certificate;
pub mod cli;
pub mod degeneracy;
mod error;
pub mod linalg;
pub mod modulus;
mod tolerance;
pub mod volterra;

pub use certificate::{
    alpha_phases, apply_conjugation, build_s, c_real_onb, phases_from_gram, symmetrize,
    symmetrize_shifted, verify_certificate, Certificate, PhaseVector, Residuals,
};
pub use degeneracy::{certify, shift_schedule, translate_and_test, ShiftAttempt, TranslationResult};
pub use error::{Error, Result};
pub use linalg::{
    hermitian_eig, symmetry_residual, unitarity_residual, ComplexMatrix, ComplexVector,
    EigDecomposition, Scalar,
};
pub use modulus::{modulus_test, spectral_pair, ModulusReport, SpectralPair, Verdict};
pub use tolerance::Tolerances;

pub use num_complex::Complex64;
