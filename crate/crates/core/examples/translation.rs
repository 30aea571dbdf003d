//! Repeated singular values: walk the shift schedule until the criterion applies.
//!
//! `cargo run --example translation`

use uecsm::degeneracy::DEFAULT_MAX_ATTEMPTS;
use uecsm::{certify, verify_certificate, ComplexMatrix, Tolerances};

fn main() -> uecsm::Result<()> {
    let t = ComplexMatrix::from_real(
        4,
        4,
        &[1., 0., 0., 0., 0., 0., 2., 0., 0., 0., 0., 2., 0., 0., 0., 0.],
    )?;
    let (result, cert) = certify(&t, &Tolerances::default(), DEFAULT_MAX_ATTEMPTS)?;
    for a in &result.attempts {
        println!("shift {:>8}  min_rel_gap {:.3e}", a.shift.to_string(), a.min_rel_gap);
    }
    println!("verdict {} at shift {}", result.report.verdict.as_str(), result.shift);
    if let Some(cert) = cert {
        println!("certificate for T itself, residual {:.2e}", verify_certificate(&t, &cert)?);
    }
    Ok(())
}
