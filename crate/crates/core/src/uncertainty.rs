//! Confinement-scale uncertainty products: electromagnetic, metric, Christoffel,
//! the Christoffel product bound, the mixed GEM bound, and the length at which
//! the gravitational bound reaches one.
//!
//! Comparisons with "unity" are made on SI numeric values. Each bound keeps its
//! SI dimension so the report can show what is being compared.

use serde::{Deserialize, Serialize};

use crate::error::{positive, Result};
use crate::quantities::{planck_length, Constants, Dimension, Quantity};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BoundKind {
    /// ΔE ΔH ≥ ħc / L⁴
    Em,
    /// δg ≥ l_P / L
    Metric,
    /// ΔΓ ≥ l_P / L²
    Christoffel,
    /// ΔΓ₁ ΔΓ₂ ≥ l_P² / L⁴
    ChristoffelProduct,
    /// ΔE_G ΔH_G ≥ G ħ / (c³ r³ L)
    GemProduct,
}

/// A lower bound on an uncertainty (or uncertainty product).
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct UncertaintyBound {
    pub kind: BoundKind,
    pub value: Quantity,
    pub confinement: f64,
    pub separation: Option<f64>,
}

impl UncertaintyBound {
    /// The SI numeric value, which is also the "comparable to unity" indicator.
    pub fn si_numeric(&self) -> f64 {
        self.value.as_scalar().expect("bounds are scalar")
    }
}

fn length(q: &Quantity, name: &'static str) -> Result<f64> {
    q.require(Dimension::LENGTH, name)?;
    positive(name, q.as_scalar()?)
}

fn lp(k: &Constants) -> f64 {
    planck_length(k).as_scalar().expect("scalar")
}

pub fn em_product_bound(l: &Quantity, k: &Constants) -> Result<UncertaintyBound> {
    let l = length(l, "L")?;
    // J·s · m/s / m⁴ = J/m³
    let dim = Dimension::ACTION.mul(Dimension::VELOCITY).div(Dimension::LENGTH.powi(4));
    Ok(UncertaintyBound {
        kind: BoundKind::Em,
        value: Quantity::scalar(k.hbar_si() * k.c_si() / l.powi(4), dim),
        confinement: l,
        separation: None,
    })
}

pub fn metric_uncertainty(l: &Quantity, k: &Constants) -> Result<UncertaintyBound> {
    let l = length(l, "L")?;
    Ok(UncertaintyBound {
        kind: BoundKind::Metric,
        value: Quantity::dimensionless(lp(k) / l),
        confinement: l,
        separation: None,
    })
}

pub fn christoffel_uncertainty(l: &Quantity, k: &Constants) -> Result<UncertaintyBound> {
    let l = length(l, "L")?;
    Ok(UncertaintyBound {
        kind: BoundKind::Christoffel,
        value: Quantity::scalar(lp(k) / (l * l), Dimension::LENGTH.recip()),
        confinement: l,
        separation: None,
    })
}

/// l_P² / L⁴, evaluated from the Planck length.
pub fn christoffel_product_bound(l: &Quantity, k: &Constants) -> Result<UncertaintyBound> {
    let l = length(l, "L")?;
    let lp = lp(k);
    Ok(UncertaintyBound {
        kind: BoundKind::ChristoffelProduct,
        value: Quantity::scalar((lp / (l * l)).powi(2), Dimension::LENGTH.powi(-2)),
        confinement: l,
        separation: None,
    })
}

/// ħG / (c³ L⁴): the same bound evaluated directly from the constants.
pub fn christoffel_product_bound_constants(l: &Quantity, k: &Constants) -> Result<f64> {
    let l = length(l, "L")?;
    Ok(k.hbar_si() * k.g_si() / (k.c_si().powi(3) * l.powi(4)))
}

/// G ħ / (c³ r³ L). Numerically equal to the Christoffel product bound when L = r.
pub fn gem_product_bound(r: &Quantity, l: &Quantity, k: &Constants) -> Result<UncertaintyBound> {
    let r = length(r, "r")?;
    let l = length(l, "L")?;
    Ok(UncertaintyBound {
        kind: BoundKind::GemProduct,
        value: Quantity::scalar(
            k.g_si() * k.hbar_si() / (k.c_si().powi(3) * r.powi(3) * l),
            Dimension::LENGTH.powi(-2),
        ),
        confinement: l,
        separation: Some(r),
    })
}

/// The L at which l_P² / L⁴ = 1 in SI numerics, i.e. √(l_P · 1 m).
pub fn unity_scale(k: &Constants) -> Quantity {
    Quantity::scalar(lp(k).sqrt(), Dimension::LENGTH)
}
