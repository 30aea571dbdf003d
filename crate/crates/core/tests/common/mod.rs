#![allow(dead_code)]

use std::path::PathBuf;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use uecsm::{Complex64, ComplexMatrix};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

pub fn real(n: usize, data: &[f64]) -> ComplexMatrix {
    ComplexMatrix::from_real(n, n, data).unwrap()
}

pub fn data_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name)
}

pub fn load(name: &str) -> ComplexMatrix {
    let text = std::fs::read_to_string(data_path(name)).unwrap();
    uecsm::cli::parse_matrix(&text).unwrap()
}

pub fn random_complex(rng: &mut impl Rng, n: usize) -> ComplexMatrix {
    let data = (0..n * n)
        .map(|_| c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
        .collect();
    ComplexMatrix::new(n, n, data).unwrap()
}

pub fn random_hermitian(rng: &mut impl Rng, n: usize) -> ComplexMatrix {
    let a = random_complex(rng, n);
    a.add(&a.adjoint()).unwrap().scale(c(0.5, 0.0))
}

/// Modified Gram-Schmidt on the columns of a random matrix; independent of
/// the library eigensolver.
pub fn random_unitary(rng: &mut impl Rng, n: usize) -> ComplexMatrix {
    loop {
        let mut cols = random_complex(rng, n).columns();
        let mut ok = true;
        for k in 0..n {
            for j in 0..k {
                let p = cols[k].inner(&cols[j]);
                cols[k] = cols[k].sub(&cols[j].scale(p));
            }
            let norm = cols[k].norm();
            if norm < 1e-3 {
                ok = false;
                break;
            }
            cols[k] = cols[k].scale(c(1.0 / norm, 0.0));
        }
        if ok {
            return ComplexMatrix::from_columns(&cols).unwrap();
        }
    }
}

/// `W Wᵗ` is symmetric and unitary for unitary `W`.
pub fn random_symmetric_unitary(rng: &mut impl Rng, n: usize) -> ComplexMatrix {
    let w = random_unitary(rng, n);
    w.multiply(&w.transpose()).unwrap()
}

/// `W T W*`.
pub fn conjugate_by(w: &ComplexMatrix, t: &ComplexMatrix) -> ComplexMatrix {
    w.multiply(t).unwrap().multiply(&w.adjoint()).unwrap()
}

pub fn trace_power(t: &ComplexMatrix, k: usize) -> Complex64 {
    let mut p = t.clone();
    for _ in 1..k {
        p = p.multiply(t).unwrap();
    }
    p.trace()
}

/// `0 ⊕ T`: UECSM exactly when `T` is.
pub fn zero_direct_sum(t: &ComplexMatrix) -> ComplexMatrix {
    let n = t.rows();
    let mut out = ComplexMatrix::zeros(n + 1, n + 1);
    for i in 0..n {
        for j in 0..n {
            out[(i + 1, j + 1)] = t[(i, j)];
        }
    }
    out
}

/// Nodes and weights of the `order`-point Gauss-Legendre rule on [-1, 1],
/// by Newton iteration on the Legendre recurrence.
pub fn gauss_legendre_rule(order: usize) -> Vec<(f64, f64)> {
    let mut rule = Vec::with_capacity(order);
    for k in 0..order {
        let mut x = (std::f64::consts::PI * (k as f64 + 0.75) / (order as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, x);
            for m in 2..=order {
                let p2 = ((2 * m - 1) as f64 * x * p1 - (m - 1) as f64 * p0) / m as f64;
                p0 = p1;
                p1 = p2;
            }
            dp = order as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        rule.push((x, 2.0 / ((1.0 - x * x) * dp * dp)));
    }
    rule
}

/// Composite Gauss-Legendre quadrature of `f` over `[a, b]`.
pub fn integrate<F: Fn(f64) -> Complex64>(f: F, a: f64, b: f64) -> Complex64 {
    integrate_panels(f, a, b, 32)
}

pub fn integrate_panels<F: Fn(f64) -> Complex64>(f: F, a: f64, b: f64, panels: usize) -> Complex64 {
    let rule = gauss_legendre_rule(16);
    let h = (b - a) / panels as f64;
    let mut total = c(0.0, 0.0);
    for p in 0..panels {
        let lo = a + p as f64 * h;
        let mid = lo + 0.5 * h;
        for &(x, w) in &rule {
            total += f(mid + 0.5 * h * x) * (0.5 * h * w);
        }
    }
    total
}

pub struct Golden {
    pub name: &'static str,
    pub file: &'static str,
    pub uecsm: bool,
    pub needs_shift: bool,
}

pub const GOLDEN: &[Golden] = &[
    Golden { name: "lower-triangular 3x3", file: "lower_triangular.txt", uecsm: true, needs_shift: false },
    Golden { name: "weighted shift (1, 2)", file: "weighted_shift.txt", uecsm: false, needs_shift: false },
    Golden { name: "distinct spectrum, UECSM", file: "distinct_uecsm.txt", uecsm: true, needs_shift: false },
    Golden { name: "distinct spectrum, not UECSM", file: "distinct_not_uecsm.txt", uecsm: false, needs_shift: false },
    Golden { name: "repeated spectrum, UECSM", file: "repeated_uecsm.txt", uecsm: true, needs_shift: true },
    Golden { name: "repeated spectrum, not UECSM", file: "repeated_not_uecsm.txt", uecsm: false, needs_shift: true },
    Golden { name: "hidden symmetry, UECSM", file: "hidden_uecsm.txt", uecsm: true, needs_shift: false },
    Golden { name: "hidden symmetry, not UECSM", file: "hidden_not_uecsm.txt", uecsm: false, needs_shift: false },
];

fn sqrt(x: f64) -> f64 {
    x.sqrt()
}

fn symmetric3(d: [f64; 3], off: [Complex64; 3]) -> ComplexMatrix {
    let [m12, m13, m23] = off;
    ComplexMatrix::new(
        3,
        3,
        vec![c(d[0], 0.0), m12, m13, m12, c(d[1], 0.0), m23, m13, m23, c(d[2], 0.0)],
    )
    .unwrap()
}

/// Closed-form complex symmetric forms displayed for the lower-triangular
/// 3x3 example.
pub fn displayed_m_lower_triangular() -> ComplexMatrix {
    let s6 = sqrt(6.0);
    symmetric3(
        [1.0 - sqrt(1.5), (26.0 + 11.0 * s6) / 25.0, (98.0 + 3.0 * s6) / 50.0],
        [
            c(0.0, -sqrt(9.0 - s6) / 5.0),
            c(0.0, -sqrt(3.5 + s6) / 5.0),
            c(sqrt(123.0 - 47.0 * s6) / 25.0, 0.0),
        ],
    )
}

/// Closed-form forms for the three 3x3 introductory matrices, in file order.
pub fn displayed_m_intro() -> [ComplexMatrix; 3] {
    let s114 = sqrt(114.0);
    let a = symmetric3(
        [8.0 - sqrt(57.0 / 2.0), 7.0 / 37.0 * (22.0 + s114), (136.0 + 23.0 * s114) / 74.0],
        [
            c(0.0, -sqrt(1539.0 / 481.0 - 36.0 * s114 / 481.0)),
            c(0.0, -3.0 * sqrt((139.0 + 8.0 * s114) / 962.0)),
            c(sqrt(41553.0 + 3616.0 * s114) / 37.0, 0.0),
        ],
    );
    let s187 = sqrt(187.0);
    let b = symmetric3(
        [(5.0 - s187) / 2.0, (1870.0 + 293.0 * s187) / 829.0, 81.0 / (-5.0 + 3.0 * s187)],
        [
            c(0.0, -5.0 * sqrt((561.0 + 5.0 * s187) / 1658.0)),
            c(0.0, -sqrt(3350.0 / 829.0 - 125.0 * s187 / 1658.0)),
            c(9.0 / 829.0 * sqrt((173723.0 + 7075.0 * s187) / 2.0), 0.0),
        ],
    );
    let s149 = sqrt(149.0);
    let cc = symmetric3(
        [8.0 - s149 / 2.0, (207440.0 + 9477.0 * s149) / 26186.0, (92675.0 + 1808.0 * s149) / 13093.0],
        [
            c(0.0, 4.5 * sqrt((16837.0 + 64.0 * s149) / 13093.0)),
            c(0.0, sqrt(133672.0 / 13093.0 - 1296.0 * s149 / 13093.0)),
            c(18.0 * sqrt(3978002.0 + 82324.0 * s149) / 13093.0, 0.0),
        ],
    );
    [a, b, cc]
}

/// Displayed `S` and `Q` for the lower-triangular 3x3 example, with the
/// `(0, 0)` entry of `S` normalized to `−2/√6` so that `S` is unitary.
pub fn displayed_s_q_lower_triangular() -> (ComplexMatrix, ComplexMatrix) {
    let s6 = sqrt(6.0);
    let r6 = 1.0 / s6;
    let s = real(
        3,
        &[
            -2.0 * r6, r6, r6,
            r6, 0.5 + r6, -0.5 + r6,
            r6, -0.5 + r6, 0.5 + r6,
        ],
    );
    let q = ComplexMatrix::new(
        3,
        3,
        vec![
            c(0.0, -sqrt(0.5 + r6)),
            c(sqrt(11.0 - 4.0 * s6) / 5.0, 0.0),
            c(1.0 / sqrt(2.0 * (9.0 + s6)), 0.0),
            c(0.0, 1.0 / (2.0 * sqrt(3.0 + s6))),
            c(0.0, 0.0),
            c(0.5 * sqrt(3.0 + sqrt(2.0 / 3.0)), 0.0),
            c(0.0, 1.0 / (2.0 * sqrt(3.0 + s6))),
            c((sqrt(2.0) + 2.0 * sqrt(3.0)) / 5.0, 0.0),
            c(-sqrt(19.0 - 23.0 * sqrt(2.0 / 3.0)) / 10.0, 0.0),
        ],
    )
    .unwrap();
    (s, q)
}

/// `‖(M + M*)/2‖_F`, a unitary invariant.
pub fn hermitian_part_norm(m: &ComplexMatrix) -> f64 {
    m.add(&m.adjoint()).unwrap().scale(c(0.5, 0.0)).frobenius()
}
