mod common;

use std::f64::consts::PI;

use common::*;
use uecsm::volterra::{
    reflect_conjugate, vol_gram, vol_inner, vol_modulus_check, volterra_entry, volterra_fourier_matrix, VolterraPair,
};
use uecsm::{hermitian_eig, Complex64, ModulusReport, Tolerances, Verdict};

fn inner_by_quadrature(f: impl Fn(f64) -> f64, g: impl Fn(f64) -> f64) -> f64 {
    integrate(|x| c(f(x) * g(x), 0.0), 0.0, 1.0).re
}

#[test]
fn closed_form_gram_matches_quadrature() {
    for i in 0..=8 {
        for j in 0..=8 {
            let (pi, pj) = (VolterraPair::new(i), VolterraPair::new(j));
            let q = inner_by_quadrature(|x| pi.u(x), |x| pj.v(x));
            assert!((q - vol_inner(i, j)).abs() <= 1e-9, "<u{i}, v{j}>");
        }
    }
}

#[test]
fn off_diagonal_entry_matches_quadrature_tightly() {
    let (p2, p5) = (VolterraPair::new(2), VolterraPair::new(5));
    let q = inner_by_quadrature(|x| p2.u(x), |x| p5.v(x));
    assert!((q - vol_inner(2, 5)).abs() <= 1e-10);
}

#[test]
fn singular_vectors_are_orthonormal() {
    for i in 0..=6 {
        for j in 0..=6 {
            let (pi, pj) = (VolterraPair::new(i), VolterraPair::new(j));
            let uu = inner_by_quadrature(|x| pi.u(x), |x| pj.u(x));
            let vv = inner_by_quadrature(|x| pi.v(x), |x| pj.v(x));
            let want = if i == j { 1.0 } else { 0.0 };
            assert!((uu - want).abs() <= 1e-10 && (vv - want).abs() <= 1e-10, "pair ({i}, {j})");
        }
    }
}

#[test]
fn singular_pairs_satisfy_operator_relations() {
    // T u_n = λ_n v_n, checked pointwise by quadrature of the running integral.
    for n in 0..=5 {
        let p = VolterraPair::new(n);
        for &x in &[0.1, 0.37, 0.8, 1.0] {
            let tu = integrate(|y| c(p.u(y), 0.0), 0.0, x).re;
            assert!((tu - p.eigenvalue * p.v(x)).abs() <= 1e-12);
        }
    }
}

#[test]
fn reflection_conjugation_links_pairs() {
    for n in 0..=6 {
        let p = VolterraPair::new(n);
        let cu = reflect_conjugate(|x| c(p.u(x), 0.0));
        for &x in &[0.0, 0.2, 0.55, 0.9] {
            let want = p.alpha() * p.v(x);
            assert!((cu(x) - c(want, 0.0)).norm() <= 1e-12, "n = {n}, x = {x}");
        }
    }
}

fn basis(n: i64) -> impl Fn(f64) -> Complex64 {
    move |x| Complex64::from_polar(1.0, 2.0 * PI * n as f64 * (x - 0.5))
}

#[test]
fn fourier_entries_match_quadrature() {
    for m in -3..=3 {
        for n in -3..=3 {
            let e_n = basis(n);
            let e_m = basis(m);
            let t_en = |x: f64| integrate_panels(&e_n, 0.0, x, 4);
            let q = integrate(|x| t_en(x) * e_m(x).conj(), 0.0, 1.0);
            assert!((q - volterra_entry(m, n)).norm() <= 1e-9, "({m}, {n}): {q} vs {}", volterra_entry(m, n));
        }
    }
}

#[test]
fn fourier_truncation_is_symmetric_with_rank_one_real_part() {
    let f = volterra_fourier_matrix(5);
    assert_eq!(uecsm::symmetry_residual(&f).unwrap(), 0.0);
    // (T + T*)/2 is the rank-one projection onto constants scaled by 1/2.
    let h = f.add(&f.adjoint()).unwrap().scale(c(0.5, 0.0));
    let eig = hermitian_eig(&h, &Tolerances::default()).unwrap();
    let (top, rest) = eig.eigenvalues.split_last().unwrap();
    assert!((top - 0.5).abs() <= 1e-12);
    assert!(rest.iter().all(|l| l.abs() <= 1e-12));
}

#[test]
fn magnitude_symmetry_holds_far_out() {
    for i in 0..50 {
        for j in 0..50 {
            assert!((vol_inner(i, j).abs() - vol_inner(j, i).abs()).abs() <= 1e-14);
        }
    }
}

#[test]
fn truncated_checks_are_uecsm_with_alternating_phases() {
    let tol = Tolerances::default();
    for n in [1, 2, 5, 20] {
        let check = vol_modulus_check(n, &tol).unwrap();
        assert_eq!(check.report.verdict, Verdict::Uecsm, "N = {n}");
        for (k, a) in check.alphas.alphas.iter().enumerate() {
            let want = VolterraPair::new(k as u64).alpha();
            assert!((a - c(want, 0.0)).norm() <= 1e-12, "N = {n}, k = {k}");
        }
    }
}

#[test]
fn perturbed_gram_fails_the_criterion() {
    let mut g = vol_gram(4);
    g[(0, 1)] += c(1e-3, 0.0);
    let report = ModulusReport::from_gram(&g, 0.1, &Tolerances::default()).unwrap();
    assert_eq!(report.verdict, Verdict::NotUecsm);
}
