//! The Volterra integration operator on `L²[0, 1]` from its exact singular pairs.
//!
//! `cargo run --example volterra -- 8`

use uecsm::volterra::{vol_modulus_check, volterra_fourier_matrix, VolterraPair};
use uecsm::{symmetry_residual, Tolerances};

fn main() -> uecsm::Result<()> {
    let n = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(8);
    let check = vol_modulus_check(n, &Tolerances::default())?;
    println!(
        "first {n} pairs: {} (magnitude {:.1e}, cocycle {:.1e})",
        check.report.verdict.as_str(),
        check.report.max_magnitude_residual,
        check.report.max_cocycle_residual,
    );
    for (k, a) in check.alphas.alphas.iter().enumerate() {
        let p = VolterraPair::new(k as u64);
        println!("  n = {k:>2}  sigma = {:.6}  alpha = {:+.0}", p.eigenvalue, a.re);
    }
    let f = volterra_fourier_matrix(n);
    println!("Fourier truncation {}x{}, symmetry residual {:.1e}", f.rows(), f.cols(), symmetry_residual(&f)?);
    Ok(())
}
