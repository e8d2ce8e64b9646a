use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{Dimension, Quantity};
use crate::error::{Error, Result};

/// Fundamental constants consumed by every formula in the crate.
///
/// Natural-unit evaluation is done by building a record with unit values via
/// [`Constants::from_si`]; there is no separate code path.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Constants {
    pub g: Quantity,
    pub hbar: Quantity,
    pub c: Quantity,
    pub mu0: Quantity,
}

impl Constants {
    /// CODATA 2018 values, SI.
    pub const fn codata2018() -> Constants {
        Constants::from_si(6.674_30e-11, 1.054_571_817e-34, 299_792_458.0, 1.256_637_062_12e-6)
    }

    pub const fn from_si(g: f64, hbar: f64, c: f64, mu0: f64) -> Constants {
        Constants {
            g: Quantity::scalar(g, Dimension::GRAVITATIONAL),
            hbar: Quantity::scalar(hbar, Dimension::ACTION),
            c: Quantity::scalar(c, Dimension::VELOCITY),
            mu0: Quantity::scalar(mu0, Dimension::PERMEABILITY),
        }
    }

    pub fn g_si(&self) -> f64 {
        si(&self.g)
    }

    pub fn hbar_si(&self) -> f64 {
        si(&self.hbar)
    }

    pub fn c_si(&self) -> f64 {
        si(&self.c)
    }
}

impl Default for Constants {
    fn default() -> Self {
        Constants::codata2018()
    }
}

// Constants are always scalars by construction.
fn si(q: &Quantity) -> f64 {
    q.as_scalar().expect("constants are scalar")
}

/// √(ħG/c³), carried through the half-exponent dimension algebra.
pub fn planck_length(k: &Constants) -> Quantity {
    let area = k
        .hbar
        .mul(&k.g)
        .and_then(|x| x.div(&k.c.powi(3)?))
        .expect("scalar constants");
    area.sqrt().expect("ħG/c³ is an area")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ConventionName {
    /// ε_G = 1/(4πG), μ_G = 4G/c², exactly as printed.
    PaperLiteral,
    /// ε_G = 1/(4πG), μ_G = 4πG/c², so that ε_G μ_G c² = 1.
    MaxwellConsistent,
}

impl ConventionName {
    pub const ALL: [ConventionName; 2] = [ConventionName::PaperLiteral, ConventionName::MaxwellConsistent];

    pub fn as_str(&self) -> &'static str {
        match self {
            ConventionName::PaperLiteral => "paper-literal",
            ConventionName::MaxwellConsistent => "maxwell-consistent",
        }
    }
}

impl fmt::Display for ConventionName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ConventionName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key: String = s
            .chars()
            .filter(|c| !matches!(c, '-' | '_' | ' '))
            .collect::<String>()
            .to_ascii_lowercase();
        match key.as_str() {
            "paperliteral" | "literal" => Ok(ConventionName::PaperLiteral),
            "maxwellconsistent" | "maxwell" => Ok(ConventionName::MaxwellConsistent),
            _ => Err(Error::UnknownConvention(s.to_string())),
        }
    }
}

/// The (ε_G, μ_G) pair under a named convention.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct GemConvention {
    pub name: ConventionName,
    /// kg·s²/m³, so that M/(ε_G r²) is an acceleration.
    pub eps_g: Quantity,
    /// m/kg, so that μ_G I / r is a rate.
    pub mu_g: Quantity,
}

impl GemConvention {
    pub fn eps_g_si(&self) -> f64 {
        si(&self.eps_g)
    }

    pub fn mu_g_si(&self) -> f64 {
        si(&self.mu_g)
    }

    /// ε_G μ_G c²: 1 for Maxwell-consistent, 1/π for paper-literal.
    pub fn wave_speed_identity(&self, k: &Constants) -> f64 {
        self.eps_g_si() * self.mu_g_si() * k.c_si() * k.c_si()
    }
}

pub fn gem_constants(k: &Constants, name: ConventionName) -> GemConvention {
    let g = k.g_si();
    let c2 = k.c_si() * k.c_si();
    let eps_g = 1.0 / (4.0 * PI * g);
    let mu_g = match name {
        ConventionName::PaperLiteral => 4.0 * g / c2,
        ConventionName::MaxwellConsistent => 4.0 * PI * g / c2,
    };
    GemConvention {
        name,
        eps_g: Quantity::scalar(eps_g, Dimension::GRAVITATIONAL.recip()),
        mu_g: Quantity::scalar(mu_g, Dimension::GRAVITATIONAL.div(Dimension::VELOCITY.powi(2))),
    }
}

/// Looks up a convention by its textual name.
pub fn gem_constants_named(k: &Constants, name: &str) -> Result<GemConvention> {
    Ok(gem_constants(k, name.parse()?))
}
