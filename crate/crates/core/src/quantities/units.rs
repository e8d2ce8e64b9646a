//! Parsing of `"<number> <unit>"` strings such as `"1e-12 kg"`, `"1e6 m/s"`,
//! `"1e-4 m^2"`, `"0.1 1/s"` or `"4 pi"` into SI quantities.

use super::{Dimension, Quantity};
use crate::error::{Error, Result};

const PREFIXES: &[(&str, f64)] = &[
    ("da", 1e1),
    ("Y", 1e24),
    ("Z", 1e21),
    ("E", 1e18),
    ("P", 1e15),
    ("T", 1e12),
    ("G", 1e9),
    ("M", 1e6),
    ("k", 1e3),
    ("h", 1e2),
    ("d", 1e-1),
    ("c", 1e-2),
    ("m", 1e-3),
    ("u", 1e-6),
    ("µ", 1e-6),
    ("μ", 1e-6),
    ("n", 1e-9),
    ("p", 1e-12),
    ("f", 1e-15),
    ("a", 1e-18),
    ("z", 1e-21),
    ("y", 1e-24),
];

fn base_unit(symbol: &str) -> Option<(f64, Dimension)> {
    let unit = match symbol {
        "1" | "rad" => (1.0, Dimension::DIMENSIONLESS),
        "pi" | "π" => (std::f64::consts::PI, Dimension::DIMENSIONLESS),
        "g" => (1e-3, Dimension::MASS),
        "m" => (1.0, Dimension::LENGTH),
        "s" => (1.0, Dimension::TIME),
        "A" => (1.0, Dimension::CURRENT),
        "K" => (1.0, Dimension::TEMPERATURE),
        "mol" => (1.0, Dimension::AMOUNT),
        "cd" => (1.0, Dimension::LUMINOSITY),
        "Hz" => (1.0, Dimension::FREQUENCY),
        "N" => (1.0, Dimension::FORCE),
        "J" => (1.0, Dimension::FORCE.mul(Dimension::LENGTH)),
        "W" => (1.0, Dimension::FORCE.mul(Dimension::VELOCITY)),
        _ => return None,
    };
    Some(unit)
}

fn prefixable(symbol: &str) -> bool {
    !matches!(symbol, "1" | "rad" | "pi" | "π")
}

fn lookup(symbol: &str) -> Option<(f64, Dimension)> {
    if let Some(u) = base_unit(symbol) {
        return Some(u);
    }
    PREFIXES.iter().find_map(|(p, scale)| {
        let rest = symbol.strip_prefix(p)?;
        let (s, d) = base_unit(rest).filter(|_| prefixable(rest))?;
        Some((scale * s, d))
    })
}

/// Parses a unit expression (no number) into its SI scale factor and dimension.
///
/// Terms are separated by `*`, `·` or `/`; each `/` divides by the single term
/// that follows it. Exponents are written `^n`.
pub fn parse_unit(expr: &str) -> Result<(f64, Dimension)> {
    let fail = |reason: String| Error::UnitParse {
        input: expr.to_string(),
        reason,
    };
    let expr = expr.trim();
    if expr.is_empty() {
        return Ok((1.0, Dimension::DIMENSIONLESS));
    }
    let mut scale = 1.0;
    let mut dim = Dimension::DIMENSIONLESS;
    let mut divide = false;
    let mut token = String::new();
    let mut flush = |token: &mut String, divide: bool| -> Result<()> {
        let t = token.trim();
        if t.is_empty() {
            return Err(fail("empty unit term".into()));
        }
        let (symbol, power) = match t.split_once('^') {
            Some((s, p)) => {
                let p: i8 = p
                    .trim()
                    .parse()
                    .map_err(|_| fail(format!("bad exponent `{p}`")))?;
                (s.trim(), p)
            }
            None => (t, 1),
        };
        let (s, d) = lookup(symbol).ok_or_else(|| fail(format!("unknown unit `{symbol}`")))?;
        let power = if divide { -power } else { power };
        scale *= s.powi(i32::from(power));
        dim = dim.mul(d.powi(power));
        token.clear();
        Ok(())
    };
    for ch in expr.chars() {
        match ch {
            '*' | '·' => {
                flush(&mut token, divide)?;
                divide = false;
            }
            '/' => {
                flush(&mut token, divide)?;
                divide = true;
            }
            c => token.push(c),
        }
    }
    flush(&mut token, divide)?;
    Ok((scale, dim))
}

/// Parses `"<number> <unit>"` into an SI scalar quantity.
pub fn parse_quantity(input: &str) -> Result<Quantity> {
    let trimmed = input.trim();
    let split = trimmed.find(char::is_whitespace).unwrap_or(trimmed.len());
    let (number, unit) = trimmed.split_at(split);
    let value: f64 = number.parse().map_err(|_| Error::UnitParse {
        input: input.to_string(),
        reason: format!("bad number `{number}`"),
    })?;
    let (scale, dim) = parse_unit(unit).map_err(|e| match e {
        Error::UnitParse { reason, .. } => Error::UnitParse {
            input: input.to_string(),
            reason,
        },
        other => other,
    })?;
    Ok(Quantity::scalar(value * scale, dim))
}

/// Parses and checks the result against `expected`.
pub fn parse_quantity_as(input: &str, expected: Dimension) -> Result<Quantity> {
    let q = parse_quantity(input)?;
    if q.dim() != expected {
        return Err(Error::UnitParse {
            input: input.to_string(),
            reason: format!("expected dimension {expected}, got {}", q.dim()),
        });
    }
    Ok(q)
}
