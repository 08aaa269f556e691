//! Matrix files: a JSON array of rows, each entry a scalar string such as
//! `"-3/4"`, `"1+2i"` or `"i"`, or a JSON integer.

use std::path::Path;

use serde_json::Value;
use sp6_core::{Error, GaussRat, Matrix, Result};

pub fn parse_matrix(text: &str) -> Result<Matrix<GaussRat>> {
    let value: Value = serde_json::from_str(text).map_err(|e| Error::Parse(format!("not JSON: {e}")))?;
    let rows = value.as_array().ok_or_else(|| Error::Parse("expected an array of rows".into()))?;
    if rows.is_empty() {
        return Err(Error::Parse("matrix has no rows".into()));
    }
    let parsed = rows
        .iter()
        .map(|row| {
            row.as_array()
                .ok_or_else(|| Error::Parse("each row must be an array".into()))?
                .iter()
                .map(parse_entry)
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Matrix::from_rows(parsed).map_err(|e| Error::Parse(e.to_string()))
}

fn parse_entry(v: &Value) -> Result<GaussRat> {
    match v {
        Value::String(s) => s.parse(),
        Value::Number(n) => {
            n.as_i64().map(GaussRat::from_int).ok_or_else(|| Error::Parse(format!("non-integer number {n}; write fractions as strings")))
        }
        other => Err(Error::Parse(format!("unexpected entry {other}"))),
    }
}

pub fn read_matrix(path: &Path) -> Result<Matrix<GaussRat>> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    parse_matrix(&text)
}

pub fn to_json(m: &Matrix<GaussRat>) -> String {
    let rows: Vec<Vec<String>> = m.to_rows().iter().map(|r| r.iter().map(ToString::to_string).collect()).collect();
    serde_json::to_string(&rows).expect("strings serialize")
}

/// `λ^6 - 22*λ^4 + …` from coefficients listed leading first.
pub fn format_charpoly(coeffs: &[GaussRat]) -> String {
    let degree = coeffs.len().saturating_sub(1);
    let mut out = String::new();
    for (k, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let power = degree - k;
        let negative = c.is_real() && c.sign_key() < 0;
        let magnitude = if negative { -c } else { c.clone() };
        let coeff = if magnitude.is_real() { magnitude.to_string() } else { format!("({magnitude})") };
        let term = match (power, magnitude.is_one()) {
            (0, _) => coeff,
            (1, true) => "λ".to_string(),
            (_, true) => format!("λ^{power}"),
            (1, false) => format!("{coeff}*λ"),
            (_, false) => format!("{coeff}*λ^{power}"),
        };
        match (out.is_empty(), negative) {
            (true, true) => out.push_str(&format!("-{term}")),
            (true, false) => out.push_str(&term),
            (false, true) => out.push_str(&format!(" - {term}")),
            (false, false) => out.push_str(&format!(" + {term}")),
        }
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}
