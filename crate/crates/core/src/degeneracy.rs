//! Translation fallback for matrices with repeated singular values.
//!
//! Being UECSM is invariant under `T ↦ T + cI`, but the singular values of
//! `T + cI` move nonlinearly with `c`, so a shift often separates them.

use num_complex::Complex64;

use crate::certificate::{symmetrize_shifted, Certificate};
use crate::error::Result;
use crate::linalg::{ComplexMatrix, ZERO};
use crate::modulus::{modulus_test, ModulusReport, Verdict};
use crate::tolerance::Tolerances;

pub const DEFAULT_MAX_ATTEMPTS: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShiftAttempt {
    pub shift: Complex64,
    pub min_rel_gap: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct TranslationResult {
    pub shift: Complex64,
    pub report: ModulusReport,
    pub attempts: Vec<ShiftAttempt>,
}

/// Shift schedule: `0`, then `‖T‖·{1, i, 1+i, 2, 2i, 2+2i, …}`, truncated to
/// `max_attempts` entries in total. A zero matrix uses unit scale.
pub fn shift_schedule(t: &ComplexMatrix, max_attempts: usize) -> Vec<Complex64> {
    let scale = match t.max_abs() {
        s if s > 0.0 => s,
        _ => 1.0,
    };
    let lattice = (1..).flat_map(|k| {
        let k = k as f64;
        [Complex64::new(k, 0.0), Complex64::new(0.0, k), Complex64::new(k, k)]
    });
    std::iter::once(ZERO)
        .chain(lattice.map(|z| z * scale))
        .take(max_attempts.max(1))
        .collect()
}

/// Runs the modulus test on `T` and, while it is inapplicable, on shifted
/// copies `T + cI`. The first applicable shift decides the verdict for `T`.
pub fn translate_and_test(t: &ComplexMatrix, tol: &Tolerances, max_attempts: usize) -> Result<TranslationResult> {
    t.ensure_square()?;
    let mut attempts = Vec::new();
    let mut last = None;
    for shift in shift_schedule(t, max_attempts) {
        let report = modulus_test(&t.shifted(shift)?, tol)?;
        attempts.push(ShiftAttempt {
            shift,
            min_rel_gap: report.min_rel_gap,
        });
        if report.is_applicable() {
            return Ok(TranslationResult {
                shift,
                report,
                attempts,
            });
        }
        last = Some((shift, report));
    }
    let (shift, report) = last.expect("schedule is never empty");
    Ok(TranslationResult {
        shift,
        report,
        attempts,
    })
}

/// Decides `T` with the translation fallback and, when it is UECSM, builds a
/// certificate for `T` itself.
pub fn certify(
    t: &ComplexMatrix,
    tol: &Tolerances,
    max_attempts: usize,
) -> Result<(TranslationResult, Option<Certificate>)> {
    let result = translate_and_test(t, tol, max_attempts)?;
    let cert = match result.report.verdict {
        Verdict::Uecsm => Some(symmetrize_shifted(t, result.shift, tol)?),
        _ => None,
    };
    Ok((result, cert))
}
