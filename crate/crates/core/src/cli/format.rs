//! Plain-text matrix files.
//!
//! ```text
//! # comment lines start with '#'
//! 2
//! 1     1+2i
//! 0     -3i
//! ```
//!
//! The first non-comment line is the dimension `n`; the next `n` non-comment
//! lines hold `n` whitespace-separated entries each. An entry is a real
//! literal optionally followed by a signed imaginary part ending in `i`.
//! Blank lines are ignored.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::ComplexMatrix;

fn parse_error(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

fn parse_real(s: &str) -> Option<f64> {
    // f64::from_str also takes "inf" and "NaN"; only digits are allowed here.
    if s.is_empty() || s.chars().any(|c| c.is_ascii_alphabetic() && c != 'e' && c != 'E') {
        return None;
    }
    s.parse::<f64>().ok().filter(|x| x.is_finite())
}

/// Parses one entry such as `1`, `-3i`, `2.5-0.5i`, `1e-3+2E4i` or `-i`.
pub fn parse_entry(token: &str) -> Option<Complex64> {
    let token = token.replace('\u{2212}', "-");
    let Some(body) = token.strip_suffix('i') else {
        return parse_real(&token).map(|re| Complex64::new(re, 0.0));
    };
    // Split at the last sign that is not the leading one and not part of an exponent.
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| matches!(bytes[k], b'+' | b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    let (re_part, im_part) = match split {
        Some(k) => (&body[..k], &body[k..]),
        None => ("", body),
    };
    let re = if re_part.is_empty() { 0.0 } else { parse_real(re_part)? };
    let im = match im_part {
        "" | "+" => 1.0,
        "-" => -1.0,
        s => parse_real(s)?,
    };
    Some(Complex64::new(re, im))
}

/// Parses a matrix file. Rows of a consistent width different from `n` give
/// [`Error::NotSquare`]; ragged rows give [`Error::Parse`].
pub fn parse_matrix(text: &str) -> Result<ComplexMatrix> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(k, l)| (k + 1, l))
        .filter(|(_, l)| {
            let t = l.trim();
            !t.is_empty() && !t.starts_with('#')
        });

    let (header_line, header) = lines.next().ok_or_else(|| parse_error(1, 1, "missing dimension line"))?;
    let header = header.trim();
    let n: usize = header
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| parse_error(header_line, 1, format!("expected a positive dimension, found `{header}`")))?;

    let mut rows: Vec<(usize, Vec<Complex64>)> = Vec::with_capacity(n);
    for _ in 0..n {
        let (line_no, line) = lines
            .next()
            .ok_or_else(|| parse_error(text.lines().count() + 1, 1, format!("expected {n} rows, found {}", rows.len())))?;
        let mut row = Vec::new();
        for (column, token) in tokens(line) {
            let z = parse_entry(token)
                .ok_or_else(|| parse_error(line_no, column, format!("invalid entry `{token}`")))?;
            row.push(z);
        }
        rows.push((line_no, row));
    }
    if let Some((line_no, _)) = lines.next() {
        return Err(parse_error(line_no, 1, format!("unexpected data after {n} rows")));
    }

    let width = rows[0].1.len();
    if width != n && rows.iter().all(|(_, r)| r.len() == width) {
        return Err(Error::NotSquare { rows: n, cols: width });
    }
    if let Some((line_no, row)) = rows.iter().find(|(_, r)| r.len() != n) {
        let line = text.lines().nth(line_no - 1).unwrap_or_default();
        let column = tokens(line).nth(n).map_or(line.len() + 1, |(c, _)| c);
        return Err(parse_error(*line_no, column, format!("expected {n} entries, found {}", row.len())));
    }

    let data = rows.into_iter().flat_map(|(_, r)| r).collect();
    ComplexMatrix::new(n, n, data)
}

/// Whitespace-separated tokens with their 1-based byte columns.
fn tokens(line: &str) -> impl Iterator<Item = (usize, &str)> {
    line.split_whitespace()
        .map(move |tok| (tok.as_ptr() as usize - line.as_ptr() as usize + 1, tok))
}

pub fn format_entry(z: Complex64) -> String {
    if z.im == 0.0 && z.im.is_sign_positive() {
        return format!("{}", z.re);
    }
    let sign = if z.im.is_sign_negative() { '-' } else { '+' };
    format!("{}{}{}i", z.re, sign, z.im.abs())
}

/// Inverse of [`parse_matrix`]; uses shortest round-trip decimals.
pub fn serialize_matrix(m: &ComplexMatrix) -> String {
    let mut out = format!("{}\n", m.rows());
    for i in 0..m.rows() {
        let row: Vec<String> = m.row(i).iter().map(|&z| format_entry(z)).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}
