//! Text forms used in traces and golden files.
//!
//! A polynomial is its coefficient list low-to-high in brackets, `[a5,a6]` for
//! `α⁶X + α⁵`. A bivariate polynomial lists its nonzero `Y^j` columns from the
//! top down: `Y*[a3,a4,a6] + [a6,a2]`.

use crate::bivariate::BiPoly;
use crate::error::{Error, Result};
use crate::gf2m::{Field, FieldElement};
use crate::poly::Poly;

/// How coefficients are spelled.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Notation {
    /// Powers of the generator: `0`, `1`, `a`, `a2`, ...
    Power,
    /// Lowercase hex of the basis encoding.
    Hex,
}

pub fn element(f: &Field, c: FieldElement, notation: Notation) -> String {
    match notation {
        Notation::Power => f.power_name(c),
        Notation::Hex => c.to_string(),
    }
}

pub fn poly(f: &Field, p: &Poly, notation: Notation) -> String {
    let parts: Vec<String> = p.coeffs().iter().map(|&c| element(f, c, notation)).collect();
    format!("[{}]", parts.join(","))
}

pub fn bipoly(f: &Field, q: &BiPoly, notation: Notation) -> String {
    let mut terms = Vec::new();
    for (j, col) in q.columns().iter().enumerate().rev() {
        if col.is_zero() {
            continue;
        }
        let body = poly(f, col, notation);
        terms.push(match j {
            0 => body,
            1 => format!("Y*{body}"),
            _ => format!("Y^{j}*{body}"),
        });
    }
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join(" + ")
    }
}

pub fn points(f: &Field, pts: &[(FieldElement, FieldElement)], notation: Notation) -> String {
    pts.iter()
        .map(|&(x, y)| format!("({},{})", element(f, x, notation), element(f, y, notation)))
        .collect::<Vec<_>>()
        .join(" ")
}

fn parse_element(f: &Field, s: &str, notation: Notation) -> Result<FieldElement> {
    match notation {
        Notation::Power => f.parse_power_name(s),
        Notation::Hex => f.parse_hex(s),
    }
}

pub fn parse_poly(f: &Field, s: &str, notation: Notation) -> Result<Poly> {
    let inner = s
        .trim()
        .strip_prefix('[')
        .and_then(|r| r.strip_suffix(']'))
        .ok_or_else(|| Error::Parse(format!("polynomial must be bracketed: {s:?}")))?;
    if inner.trim().is_empty() {
        return Ok(Poly::zero());
    }
    let coeffs = inner
        .split(',')
        .map(|c| parse_element(f, c, notation))
        .collect::<Result<Vec<_>>>()?;
    Ok(Poly::from_coeffs(coeffs))
}

pub fn parse_bipoly(f: &Field, s: &str, notation: Notation) -> Result<BiPoly> {
    let s = s.trim();
    if s == "0" {
        return Ok(BiPoly::zero());
    }
    let mut cols: Vec<Poly> = Vec::new();
    for term in s.split(" + ") {
        let term = term.trim();
        let (j, body) = if let Some(rest) = term.strip_prefix("Y^") {
            let (deg, body) = rest
                .split_once('*')
                .ok_or_else(|| Error::Parse(format!("malformed term {term:?}")))?;
            let j = deg
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("malformed Y exponent in {term:?}")))?;
            (j, body)
        } else if let Some(body) = term.strip_prefix("Y*") {
            (1, body)
        } else {
            (0, term)
        };
        if cols.len() <= j {
            cols.resize(j + 1, Poly::zero());
        }
        cols[j] = cols[j].add(&parse_poly(f, body, notation)?, f);
    }
    Ok(BiPoly::from_columns(cols))
}
