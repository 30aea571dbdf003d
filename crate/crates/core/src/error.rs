use thiserror::Error;

use crate::modulus::Verdict;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{op}: dimension mismatch, {left:?} vs {right:?}")]
    DimensionMismatch {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },

    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("expected {expected} entries, got {got}")]
    InvalidData { expected: usize, got: usize },

    #[error("matrix dimensions must be positive")]
    Empty,

    #[error("non-finite entry at ({row}, {col})")]
    NonFinite { row: usize, col: usize },

    #[error("invalid tolerances: {0}")]
    InvalidTolerances(&'static str),

    #[error("matrix is not Hermitian (residual {residual:e})")]
    NotHermitian { residual: f64 },

    #[error("eigensolver did not converge after {sweeps} sweeps (residual {residual:e})")]
    NoConvergence { sweeps: usize, residual: f64 },

    #[error("spectra of T*T and TT* disagree at index {index}: {left} vs {right}")]
    SpectrumMismatch { index: usize, left: f64, right: f64 },

    #[error("phase constraint violated on edge ({i}, {j}) by {residual:e}")]
    PhaseInconsistency { i: usize, j: usize, residual: f64 },

    #[error("S = V A U^t is not symmetric unitary (symmetry {symmetry:e}, unitarity {unitarity:e})")]
    SymmetryFailure { symmetry: f64, unitarity: f64 },

    #[error("could not build a conjugation-fixed basis: {0}")]
    ConstructionFailure(String),

    #[error("matrix verdict is {0:?}, no certificate can be built")]
    NotUecsm(Verdict),

    #[error("certificate check `{check}` failed with residual {residual:e}")]
    NotCertified { check: &'static str, residual: f64 },

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}
