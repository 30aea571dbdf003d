//! Build and independently verify a symmetrizing certificate.
//!
//! `cargo run --example certificate`

use uecsm::cli::serialize_matrix;
use uecsm::{symmetrize, verify_certificate, ComplexMatrix, Tolerances};

fn main() -> uecsm::Result<()> {
    let t = ComplexMatrix::from_real(3, 3, &[9., 8., 9., 0., 7., 0., 0., 0., 7.])?;
    let cert = symmetrize(&t, &Tolerances::default())?;

    println!("phases:");
    for a in &cert.alphas.alphas {
        println!("  {a:.6}");
    }
    println!("Q:\n{}", serialize_matrix(&cert.q));
    println!("M = Q*TQ:\n{}", serialize_matrix(&cert.m));
    for (name, r) in cert.residuals.named() {
        println!("{name:>12} {r:.2e}");
    }
    println!("independent check: {:.2e}", verify_certificate(&t, &cert)?);
    Ok(())
}
