use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Numeric policy shared by every stage of the test and the certificate.
///
/// All residuals are measured in the max-abs entry norm.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerances {
    /// Eigensolver residual, relative to `‖H‖_max`.
    pub eig_residual: f64,
    /// Relative eigenvalue gap below which the modulus criterion is not applied.
    pub gap_rel: f64,
    /// Threshold on the magnitude and cocycle residuals.
    pub test_tol: f64,
    /// Gram entries at or below this magnitude are treated as zero.
    pub zero_tol: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            eig_residual: 1e-10,
            gap_rel: 1e-8,
            test_tol: 1e-8,
            zero_tol: 1e-10,
        }
    }
}

impl Tolerances {
    pub fn validate(&self) -> Result<()> {
        let fields = [self.eig_residual, self.gap_rel, self.test_tol, self.zero_tol];
        if fields.iter().any(|v| !v.is_finite() || *v < 0.0) {
            return Err(Error::InvalidTolerances("all tolerances must be finite and nonnegative"));
        }
        if self.gap_rel >= 1.0 {
            return Err(Error::InvalidTolerances("gap_rel must be below 1"));
        }
        Ok(())
    }

    /// Acceptance bound for certificate residuals.
    pub fn certificate_bound(&self) -> f64 {
        10.0 * self.test_tol
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_are_valid() {
        let tol = Tolerances::default();
        tol.validate().unwrap();
        assert_eq!(tol.certificate_bound(), 1e-7);
    }

    #[test]
    fn rejects_bad_values() {
        let base = Tolerances::default();
        for bad in [
            Tolerances { gap_rel: 1.0, ..base },
            Tolerances { test_tol: -1e-3, ..base },
            Tolerances { zero_tol: f64::NAN, ..base },
        ] {
            assert!(bad.validate().is_err());
        }
    }
}
