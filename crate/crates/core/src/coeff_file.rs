//! Coefficient file format: UTF-8 text, one `k,re,im` line per nonzero
//! coefficient, `#` comment lines, unordered indices accepted, duplicate
//! indices rejected.

use crate::error::{CoreError, Result};
use crate::poly::TrigPoly;
use num_complex::Complex64;
use std::collections::HashSet;
use std::path::Path;

pub fn parse_coefficients(text: &str) -> Result<TrigPoly> {
    let mut terms: Vec<(i64, Complex64)> = Vec::new();
    let mut seen: HashSet<i64> = HashSet::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut parts = line.split(',').map(str::trim);
        let (k, re, im) = match (parts.next(), parts.next(), parts.next(), parts.next()) {
            (Some(k), Some(re), Some(im), None) => (k, re, im),
            _ => {
                return Err(CoreError::Parse(format!(
                    "line {}: expected `k,re,im`, got {raw:?}",
                    lineno + 1
                )))
            }
        };
        let k: i64 = k.parse().map_err(|_| {
            CoreError::Parse(format!("line {}: bad index {k:?}", lineno + 1))
        })?;
        let re: f64 = re.parse().map_err(|_| {
            CoreError::Parse(format!("line {}: bad real part {re:?}", lineno + 1))
        })?;
        let im: f64 = im.parse().map_err(|_| {
            CoreError::Parse(format!("line {}: bad imaginary part {im:?}", lineno + 1))
        })?;
        if !seen.insert(k) {
            return Err(CoreError::DuplicateCoefficient { k });
        }
        terms.push((k, Complex64::new(re, im)));
    }
    Ok(TrigPoly::from_terms(&terms))
}

pub fn format_coefficients(p: &TrigPoly) -> String {
    let mut out = String::from("# trigonometric polynomial coefficients: k,re,im\n");
    for (k, c) in p.terms() {
        out.push_str(&format!("{k},{:.17e},{:.17e}\n", c.re, c.im));
    }
    out
}

pub fn read_coefficients(path: &Path) -> Result<TrigPoly> {
    parse_coefficients(&std::fs::read_to_string(path)?)
}

pub fn write_coefficients(path: &Path, p: &TrigPoly) -> Result<()> {
    std::fs::write(path, format_coefficients(p))?;
    Ok(())
}
