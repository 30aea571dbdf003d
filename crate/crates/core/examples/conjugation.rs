//! Conjugations from symmetric unitaries, and the Hermitian eigensolver they rest on.
//!
//! `cargo run --example conjugation`

use uecsm::certificate::fixed_point_residual;
use uecsm::{apply_conjugation, c_real_onb, hermitian_eig, Complex64, ComplexMatrix, ComplexVector, Tolerances};

fn main() -> uecsm::Result<()> {
    let tol = Tolerances::default();
    let i = Complex64::i();
    let one = Complex64::new(1.0, 0.0);

    // S = [[0, 1], [1, 0]] gives C(x, y) = (conj y, conj x).
    let s = ComplexMatrix::new(2, 2, vec![0.0 * one, one, one, 0.0 * one])?;
    let x = ComplexVector::new(vec![one + i, 2.0 * i])?;
    let cx = apply_conjugation(&s, &x)?;
    let show = |v: &ComplexVector| v.0.iter().map(|z| z.to_string()).collect::<Vec<_>>().join(", ");
    println!("x   = ({})", show(&x));
    println!("Cx  = ({})", show(&cx));
    println!("CCx = ({})", show(&apply_conjugation(&s, &cx)?));

    let q = c_real_onb(&s, &tol)?;
    println!("C-real basis fixed to {:.1e}", fixed_point_residual(&s, &q)?);

    let h = ComplexMatrix::new(2, 2, vec![2.0 * one, i, -i, 2.0 * one])?;
    let eig = hermitian_eig(&h, &tol)?;
    println!("eigenvalues of [[2, i], [-i, 2]]: {:?}", eig.eigenvalues);
    Ok(())
}
