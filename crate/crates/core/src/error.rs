use thiserror::Error;

use crate::quantities::Dimension;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch in {op}: {left} vs {right}")]
    DimensionMismatch {
        op: &'static str,
        left: Dimension,
        right: Dimension,
    },
    #[error("{op} requires 3-vector operands")]
    NotAVector { op: &'static str },
    #[error("{op} requires scalar operands")]
    NotAScalar { op: &'static str },
    #[error("dimension {dim} has no exact square root in half-integer exponents")]
    IrrationalDimension { dim: Dimension },
    #[error("{name} must be positive and finite, got {value:e}")]
    NonPositive { name: &'static str, value: f64 },
    #[error("{name} must be finite, got {value:e}")]
    NonFinite { name: &'static str, value: f64 },
    #[error("speed {speed:e} m/s is not below c = {c:e} m/s")]
    Superluminal { speed: f64, c: f64 },
    #[error("unknown GEM convention `{0}` (expected paper-literal or maxwell-consistent)")]
    UnknownConvention(String),
    #[error("{what} not normalized: squared norm {norm:e}")]
    Unnormalized { what: &'static str, norm: f64 },
    #[error("invalid density matrix: {0}")]
    InvalidDensity(String),
    #[error("Fock cutoff {cutoff} too small: {reason}")]
    CutoffTooSmall { cutoff: usize, reason: String },
    #[error("unit parse error in `{input}`: {reason}")]
    UnitParse { input: String, reason: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn positive(name: &'static str, value: f64) -> Result<f64> {
    if value.is_finite() && value > 0.0 {
        Ok(value)
    } else {
        Err(Error::NonPositive { name, value })
    }
}

pub(crate) fn finite(name: &'static str, value: f64) -> Result<f64> {
    if value.is_finite() {
        Ok(value)
    } else {
        Err(Error::NonFinite { name, value })
    }
}
