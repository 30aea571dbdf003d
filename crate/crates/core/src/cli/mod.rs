//! Command-line front end.
//!
//! Exit codes: `0` UECSM, `1` not UECSM, `2` inapplicable after all shifts,
//! `3` parse or usage error, `4` numeric failure (eigensolver, certificate).

pub mod format;

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde::Deserialize;
use serde_json::{json, Value};

use crate::certificate::{verify_certificate, Certificate, PhaseVector, Residuals};
use crate::degeneracy::{certify, translate_and_test, TranslationResult, DEFAULT_MAX_ATTEMPTS};
use crate::error::Error;
use crate::linalg::{symmetry_residual, ComplexMatrix};
use crate::modulus::Verdict;
use crate::tolerance::Tolerances;
use crate::volterra::{vol_modulus_check, volterra_fourier_matrix};

pub use format::{parse_matrix, serialize_matrix};

pub const EXIT_UECSM: i32 = 0;
pub const EXIT_NOT_UECSM: i32 = 1;
pub const EXIT_INAPPLICABLE: i32 = 2;
pub const EXIT_USAGE: i32 = 3;
pub const EXIT_NUMERIC: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "uecsm", version, about = "Test whether a complex matrix is unitarily equivalent to a complex symmetric matrix")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run the modulus test, shifting by multiples of I if it is inapplicable
    Test(MatrixArgs),
    /// Test, then build and check a complex symmetric form Q*TQ
    Certify {
        #[command(flatten)]
        args: MatrixArgs,
        /// Check a certificate file (JSON from `certify --format json`) instead of building one
        #[arg(long, value_name = "CERT_FILE")]
        verify: Option<PathBuf>,
    },
    /// Check the closed-form Volterra operator data
    Volterra {
        /// Number of singular pairs, and half-width of the Fourier truncation
        #[arg(long, default_value_t = 5)]
        n: usize,
        #[command(flatten)]
        common: CommonArgs,
    },
}

#[derive(Debug, Args)]
pub struct CommonArgs {
    /// Threshold on the magnitude and cocycle residuals
    #[arg(long)]
    pub tol: Option<f64>,
    /// Relative eigenvalue gap required for applicability
    #[arg(long)]
    pub gap: Option<f64>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct MatrixArgs {
    /// Matrix file, or `-` for standard input
    pub input: String,
    /// Maximum number of shifts tried, including the unshifted matrix
    #[arg(long, default_value_t = DEFAULT_MAX_ATTEMPTS)]
    pub max_shifts: usize,
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CommandKind {
    Test,
    Certify,
    Volterra,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub command: CommandKind,
    pub format: Format,
    pub tol: Tolerances,
    pub max_attempts: usize,
    pub volterra_n: usize,
    pub verify: Option<PathBuf>,
}

impl RunConfig {
    fn with_common(command: CommandKind, common: &CommonArgs) -> Result<Self, Error> {
        let mut tol = Tolerances::default();
        if let Some(t) = common.tol {
            tol.test_tol = t;
        }
        if let Some(g) = common.gap {
            tol.gap_rel = g;
        }
        tol.validate()?;
        Ok(Self {
            command,
            format: common.format,
            tol,
            max_attempts: DEFAULT_MAX_ATTEMPTS,
            volterra_n: 5,
            verify: None,
        })
    }

    /// Splits parsed arguments into the run configuration and the input path.
    pub fn from_cli(cli: &Cli) -> Result<(Self, Option<String>), Error> {
        match &cli.command {
            Command::Test(args) => {
                let mut cfg = Self::with_common(CommandKind::Test, &args.common)?;
                cfg.max_attempts = args.max_shifts.max(1);
                Ok((cfg, Some(args.input.clone())))
            }
            Command::Certify { args, verify } => {
                let mut cfg = Self::with_common(CommandKind::Certify, &args.common)?;
                cfg.max_attempts = args.max_shifts.max(1);
                cfg.verify = verify.clone();
                Ok((cfg, Some(args.input.clone())))
            }
            Command::Volterra { n, common } => {
                let mut cfg = Self::with_common(CommandKind::Volterra, common)?;
                if *n < 2 {
                    return Err(Error::InvalidTolerances("volterra --n must be at least 2"));
                }
                cfg.volterra_n = *n;
                Ok((cfg, None))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct MatrixFile {
    pub path: String,
    pub parsed: ComplexMatrix,
}

impl MatrixFile {
    /// Reads `path`, with `-` meaning `stdin`.
    pub fn load(path: &str, stdin: &mut dyn Read) -> Result<Self, String> {
        let text = if path == "-" {
            let mut s = String::new();
            stdin.read_to_string(&mut s).map_err(|e| format!("<stdin>: {e}"))?;
            s
        } else {
            std::fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))?
        };
        let parsed = parse_matrix(&text).map_err(|e| format!("{path}: {e}"))?;
        Ok(Self {
            path: path.to_string(),
            parsed,
        })
    }
}

pub fn exit_code(verdict: Verdict) -> i32 {
    match verdict {
        Verdict::Uecsm => EXIT_UECSM,
        Verdict::NotUecsm => EXIT_NOT_UECSM,
        Verdict::Inapplicable => EXIT_INAPPLICABLE,
    }
}

fn error_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. }
        | Error::NotSquare { .. }
        | Error::InvalidTolerances(_)
        | Error::NonFinite { .. }
        | Error::InvalidData { .. }
        | Error::Empty
        | Error::DimensionMismatch { .. } => EXIT_USAGE,
        _ => EXIT_NUMERIC,
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_cli<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{e}");
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_UECSM };
        }
    };
    let (config, input) = match RunConfig::from_cli(&cli) {
        Ok(v) => v,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_USAGE;
        }
    };
    let input = match input.map(|p| MatrixFile::load(&p, stdin)).transpose() {
        Ok(v) => v,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            return EXIT_USAGE;
        }
    };
    match run(&config, input.as_ref(), out) {
        Ok(code) => code,
        Err(RunError::Library(e)) => {
            let _ = writeln!(err, "error: {e}");
            error_code(&e)
        }
        Err(RunError::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(RunError::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_NUMERIC
        }
    }
}

#[derive(Debug)]
pub enum RunError {
    Library(Error),
    Usage(String),
    Io(std::io::Error),
}

impl From<Error> for RunError {
    fn from(e: Error) -> Self {
        RunError::Library(e)
    }
}

impl From<std::io::Error> for RunError {
    fn from(e: std::io::Error) -> Self {
        RunError::Io(e)
    }
}

/// Runs a configured command and writes its report; returns the exit code.
pub fn run(config: &RunConfig, input: Option<&MatrixFile>, out: &mut dyn Write) -> Result<i32, RunError> {
    if config.command == CommandKind::Volterra {
        return run_volterra(config, out);
    }
    let t = &input
        .ok_or_else(|| RunError::Usage("missing input matrix".into()))?
        .parsed;

    if config.command == CommandKind::Certify {
        if let Some(path) = &config.verify {
            return run_verify(config, t, path, out);
        }
    }

    let (result, cert) = match config.command {
        CommandKind::Certify => certify(t, &config.tol, config.max_attempts)?,
        _ => (translate_and_test(t, &config.tol, config.max_attempts)?, None),
    };

    let mut report = translation_json(&result);
    if let Some(cert) = &cert {
        let fields = certificate_json(cert);
        report.as_object_mut().unwrap().extend(fields.as_object().unwrap().clone());
    }
    match config.format {
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&report).unwrap())?,
        Format::Text => write_text(out, &result, cert.as_ref())?,
    }
    Ok(exit_code(result.report.verdict))
}

fn run_verify(config: &RunConfig, t: &ComplexMatrix, path: &Path, out: &mut dyn Write) -> Result<i32, RunError> {
    let text = std::fs::read_to_string(path).map_err(|e| RunError::Usage(format!("{}: {e}", path.display())))?;
    let cert = read_certificate(&text).map_err(|e| RunError::Usage(format!("{}: {e}", path.display())))?;
    let residual = verify_certificate(t, &cert)?;
    let bound = config.tol.certificate_bound();
    let verified = residual <= bound;
    let verdict = if verified { Verdict::Uecsm } else { Verdict::Inapplicable };
    match config.format {
        Format::Json => {
            let v = json!({
                "verdict": verdict.as_str(),
                "verified": verified,
                "verification_residual": residual,
                "bound": bound,
            });
            writeln!(out, "{}", serde_json::to_string_pretty(&v).unwrap())?;
        }
        Format::Text => {
            writeln!(out, "verified: {verified}")?;
            writeln!(out, "verification_residual: {residual:.16e}")?;
            writeln!(out, "bound: {bound:.16e}")?;
        }
    }
    Ok(if verified { EXIT_UECSM } else { EXIT_NUMERIC })
}

fn run_volterra(config: &RunConfig, out: &mut dyn Write) -> Result<i32, RunError> {
    let n = config.volterra_n;
    let check = vol_modulus_check(n, &config.tol)?;
    let fourier = volterra_fourier_matrix(n);
    let fourier_symmetry = symmetry_residual(&fourier)?;
    let r = &check.report;
    match config.format {
        Format::Json => {
            let v = json!({
                "verdict": r.verdict.as_str(),
                "n": n,
                "min_rel_gap": finite_or_null(r.min_rel_gap),
                "max_magnitude_residual": r.max_magnitude_residual,
                "max_cocycle_residual": r.max_cocycle_residual,
                "alphas": check.alphas.alphas.iter().map(|&z| pair(z)).collect::<Vec<_>>(),
                "fourier_matrix": matrix_json(&fourier),
                "fourier_symmetry_residual": fourier_symmetry,
            });
            writeln!(out, "{}", serde_json::to_string_pretty(&v).unwrap())?;
        }
        Format::Text => {
            writeln!(out, "verdict: {}", r.verdict.as_str())?;
            writeln!(out, "n: {n}")?;
            writeln!(out, "min_rel_gap: {}", sci(r.min_rel_gap))?;
            writeln!(out, "max_magnitude_residual: {}", sci(r.max_magnitude_residual))?;
            writeln!(out, "max_cocycle_residual: {}", sci(r.max_cocycle_residual))?;
            let alphas: Vec<String> = check.alphas.alphas.iter().map(|&z| sig6_complex(z)).collect();
            writeln!(out, "alphas: {}", alphas.join(" "))?;
            writeln!(out, "fourier_symmetry_residual: {}", sci(fourier_symmetry))?;
            writeln!(out, "fourier_matrix ({}x{}):", fourier.rows(), fourier.cols())?;
            write_matrix_text(out, &fourier)?;
        }
    }
    Ok(exit_code(r.verdict))
}

fn pair(z: Complex64) -> Value {
    json!([z.re, z.im])
}

fn finite_or_null(x: f64) -> Value {
    if x.is_finite() {
        json!(x)
    } else {
        Value::Null
    }
}

/// Rows of `[re, im]` pairs.
pub fn matrix_json(m: &ComplexMatrix) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|i| Value::Array(m.row(i).iter().map(|&z| pair(z)).collect()))
            .collect(),
    )
}

fn matrix_from_json(rows: &[Vec<[f64; 2]>]) -> Result<ComplexMatrix, Error> {
    let rows: Vec<Vec<Complex64>> = rows
        .iter()
        .map(|r| r.iter().map(|&[re, im]| Complex64::new(re, im)).collect())
        .collect();
    ComplexMatrix::from_rows(&rows)
}

fn translation_json(result: &TranslationResult) -> Value {
    let r = &result.report;
    json!({
        "verdict": r.verdict.as_str(),
        "shift": pair(result.shift),
        "min_rel_gap": finite_or_null(r.min_rel_gap),
        "max_magnitude_residual": r.max_magnitude_residual,
        "max_cocycle_residual": r.max_cocycle_residual,
        "worst_pair": r.worst_pair,
        "worst_triple": r.worst_triple,
        "attempts": result.attempts.iter().map(|a| json!({
            "shift": pair(a.shift),
            "min_rel_gap": finite_or_null(a.min_rel_gap),
        })).collect::<Vec<_>>(),
    })
}

fn certificate_json(cert: &Certificate) -> Value {
    json!({
        "alphas": cert.alphas.alphas.iter().map(|&z| pair(z)).collect::<Vec<_>>(),
        "S": matrix_json(&cert.s),
        "Q": matrix_json(&cert.q),
        "M": matrix_json(&cert.m),
        "residuals": cert.residuals,
    })
}

#[derive(Deserialize)]
struct CertificateFile {
    #[serde(rename = "S")]
    s: Vec<Vec<[f64; 2]>>,
    #[serde(rename = "Q")]
    q: Vec<Vec<[f64; 2]>>,
    #[serde(rename = "M")]
    m: Vec<Vec<[f64; 2]>>,
    #[serde(default)]
    alphas: Vec<[f64; 2]>,
    #[serde(default)]
    shift: Option<[f64; 2]>,
}

/// Reads the JSON written by `certify --format json`. Only `S`, `Q` and `M`
/// are required.
pub fn read_certificate(text: &str) -> Result<Certificate, String> {
    let file: CertificateFile = serde_json::from_str(text).map_err(|e| e.to_string())?;
    let alphas: Vec<Complex64> = file.alphas.iter().map(|&[re, im]| Complex64::new(re, im)).collect();
    let n = alphas.len();
    let shift = file.shift.map_or(Complex64::new(0.0, 0.0), |[re, im]| Complex64::new(re, im));
    Ok(Certificate {
        alphas: PhaseVector {
            alphas,
            component: vec![0; n],
            residual: 0.0,
        },
        s: matrix_from_json(&file.s).map_err(|e| format!("S: {e}"))?,
        q: matrix_from_json(&file.q).map_err(|e| format!("Q: {e}"))?,
        m: matrix_from_json(&file.m).map_err(|e| format!("M: {e}"))?,
        shift,
        residuals: Residuals::default(),
    })
}

fn sci(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.16e}")
    } else {
        format!("{x}")
    }
}

/// Six significant digits, switching to exponent form outside `[1e-4, 1e6)`.
fn sig6(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    let exp = x.abs().log10().floor() as i32;
    if !(-4..6).contains(&exp) {
        return format!("{x:.5e}");
    }
    let decimals = (5 - exp).max(0) as usize;
    let s = format!("{x:.decimals$}");
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

fn sig6_complex(z: Complex64) -> String {
    if z.im == 0.0 {
        return sig6(z.re);
    }
    let im = sig6(z.im.abs());
    let sign = if z.im < 0.0 { '-' } else { '+' };
    if z.re == 0.0 {
        format!("{}{im}i", if sign == '-' { "-" } else { "" })
    } else {
        format!("{}{sign}{im}i", sig6(z.re))
    }
}

fn write_matrix_text(out: &mut dyn Write, m: &ComplexMatrix) -> std::io::Result<()> {
    for i in 0..m.rows() {
        let row: Vec<String> = m.row(i).iter().map(|&z| format!("{:>24}", sig6_complex(z))).collect();
        writeln!(out, "  {}", row.join(" "))?;
    }
    Ok(())
}

fn write_text(out: &mut dyn Write, result: &TranslationResult, cert: Option<&Certificate>) -> std::io::Result<()> {
    let r = &result.report;
    writeln!(out, "verdict: {}", r.verdict.as_str())?;
    writeln!(out, "shift: {}", sig6_complex(result.shift))?;
    writeln!(out, "attempts: {}", result.attempts.len())?;
    writeln!(out, "min_rel_gap: {}", sci(r.min_rel_gap))?;
    writeln!(out, "max_magnitude_residual: {}", sci(r.max_magnitude_residual))?;
    writeln!(out, "max_cocycle_residual: {}", sci(r.max_cocycle_residual))?;
    if let Some((i, j)) = r.worst_pair {
        writeln!(out, "worst_pair: {i} {j}")?;
    }
    if let Some((i, j, k)) = r.worst_triple {
        writeln!(out, "worst_triple: {i} {j} {k}")?;
    }
    let Some(cert) = cert else { return Ok(()) };
    let alphas: Vec<String> = cert.alphas.alphas.iter().map(|&z| sig6_complex(z)).collect();
    writeln!(out, "alphas: {}", alphas.join(" "))?;
    for (name, m) in [("S", &cert.s), ("Q", &cert.q), ("M", &cert.m)] {
        writeln!(out, "{name}:")?;
        write_matrix_text(out, m)?;
    }
    writeln!(out, "residuals:")?;
    for (name, value) in cert.residuals.named() {
        writeln!(out, "  {name}: {}", sci(value))?;
    }
    Ok(())
}
