//! Electric-like and magnetic-like gravitational fields in the weak-field limit,
//! the gravitational Lorentz force, and the two-mass force estimate.

use std::f64::consts::PI;

use log::warn;
use serde::{Deserialize, Serialize};

use crate::error::{positive, Error, Result};
use crate::quantities::{
    gem_constants, Constants, ConventionName, Dimension, GemConvention, Quantity,
};

/// Speeds above this fraction of c trigger a non-relativistic-regime warning.
pub const RELATIVISTIC_WARN_BETA: f64 = 0.1;

/// A point mass with a velocity.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct MassBody {
    mass: Quantity,
    velocity: Quantity,
}

impl MassBody {
    /// `velocity` must be a 3-vector in m/s with |v| < c; a warning is logged above 0.1c.
    pub fn new(mass: Quantity, velocity: Quantity, k: &Constants) -> Result<MassBody> {
        mass.require(Dimension::MASS, "mass")?;
        positive("mass", mass.as_scalar()?)?;
        velocity.require(Dimension::VELOCITY, "velocity")?;
        velocity.as_vector()?;
        let speed = velocity.magnitude();
        check_subluminal(speed, k)?;
        if speed > RELATIVISTIC_WARN_BETA * k.c_si() {
            warn!(
                "speed {speed:e} m/s exceeds {RELATIVISTIC_WARN_BETA}c; weak-field GEM formulas lose accuracy"
            );
        }
        Ok(MassBody { mass, velocity })
    }

    pub fn mass(&self) -> Quantity {
        self.mass
    }

    pub fn velocity(&self) -> Quantity {
        self.velocity
    }

    pub fn speed(&self) -> f64 {
        self.velocity.magnitude()
    }
}

fn check_subluminal(speed: f64, k: &Constants) -> Result<()> {
    let c = k.c_si();
    if !speed.is_finite() || speed >= c {
        return Err(Error::Superluminal { speed, c });
    }
    Ok(())
}

/// One evaluation of the field pair at a point, with H_G = B_G / μ_G.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct GemFieldSample {
    pub e_g: Quantity,
    pub b_g: Quantity,
    pub h_g: Quantity,
    pub convention: ConventionName,
}

impl GemFieldSample {
    pub fn new(e_g: Quantity, b_g: Quantity, conv: &GemConvention) -> Result<GemFieldSample> {
        e_g.require(Dimension::ACCELERATION, "e_g")?;
        b_g.require(Dimension::FREQUENCY, "b_g")?;
        let h_g = b_g.div(&conv.mu_g)?;
        Ok(GemFieldSample {
            e_g,
            b_g,
            h_g,
            convention: conv.name,
        })
    }
}

fn checked_scalar(q: &Quantity, dim: Dimension, name: &'static str) -> Result<f64> {
    q.require(dim, name)?;
    q.as_scalar()
}

/// E_G = M / (ε_G r²) = 4πG M / r². Identical under both conventions.
pub fn electric_like_field(mass: &Quantity, r: &Quantity, conv: &GemConvention) -> Result<Quantity> {
    let m = positive("mass", checked_scalar(mass, Dimension::MASS, "mass")?)?;
    let r = positive("r", checked_scalar(r, Dimension::LENGTH, "r")?)?;
    Ok(Quantity::scalar(
        m / (conv.eps_g_si() * r * r),
        Dimension::ACCELERATION,
    ))
}

/// Coulomb-form field M / (4π ε_G r²) = G M / r², the ordinary Newtonian value.
pub fn electric_like_field_newtonian(
    mass: &Quantity,
    r: &Quantity,
    conv: &GemConvention,
) -> Result<Quantity> {
    Ok(electric_like_field(mass, r, conv)?.scale(1.0 / (4.0 * PI)))
}

/// Line-current form B_G = μ_G I / r, with I a mass current in kg/s.
pub fn magnetic_like_field_line(
    current: &Quantity,
    r: &Quantity,
    conv: &GemConvention,
) -> Result<Quantity> {
    let i = checked_scalar(current, Dimension::MASS_CURRENT, "mass current")?;
    crate::error::finite("mass current", i)?;
    let r = positive("r", checked_scalar(r, Dimension::LENGTH, "r")?)?;
    Ok(Quantity::scalar(conv.mu_g_si() * i / r, Dimension::FREQUENCY))
}

/// Biot–Savart point closure: μ_G M |v| sin θ / (4π r²).
pub fn magnetic_like_field_point(
    body: &MassBody,
    r: &Quantity,
    angle: f64,
    conv: &GemConvention,
) -> Result<Quantity> {
    let r = positive("r", checked_scalar(r, Dimension::LENGTH, "r")?)?;
    let m = body.mass.as_scalar()?;
    Ok(Quantity::scalar(
        conv.mu_g_si() * m * body.speed() * angle.sin() / (4.0 * PI * r * r),
        Dimension::FREQUENCY,
    ))
}

/// F = M (E_G + v × B_G); both fields must be 3-vectors.
pub fn lorentz_force(body: &MassBody, e_g: &Quantity, b_g: &Quantity) -> Result<Quantity> {
    e_g.require(Dimension::ACCELERATION, "e_g")?;
    b_g.require(Dimension::FREQUENCY, "b_g")?;
    let induced = body.velocity.cross(b_g)?;
    body.mass.mul(&e_g.add(&induced)?)
}

/// Magnetic-to-electric force ratio for parallel mass currents, ε_G μ_G v².
///
/// Maxwell-consistent gives (v/c)², paper-literal gives v²/(πc²).
pub fn force_ratio(v: &Quantity, conv: &GemConvention, k: &Constants) -> Result<f64> {
    v.require(Dimension::VELOCITY, "velocity")?;
    let speed = v.magnitude();
    check_subluminal(speed, k)?;
    Ok(conv.eps_g_si() * conv.mu_g_si() * speed * speed)
}

/// Forces for two equal masses moving in parallel at separation r.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScenarioReport {
    pub convention: ConventionName,
    pub mass: f64,
    pub separation: f64,
    pub speed: f64,
    /// M · E_G with E_G = 4πG M / r².
    pub f_electric_paper_literal: f64,
    /// M · G M / r².
    pub f_electric_newtonian: f64,
    pub force_ratio: f64,
    pub f_magnetic_paper_literal: f64,
    pub f_magnetic_newtonian: f64,
    pub relativistic_warning: bool,
}

/// The magnetic force is reported through [`force_ratio`] (parallel line
/// currents), not through the point closure.
pub fn two_mass_scenario(
    mass: &Quantity,
    r: &Quantity,
    v: &Quantity,
    conv: &GemConvention,
    k: &Constants,
) -> Result<ScenarioReport> {
    let m = mass.as_scalar()?;
    let e_lit = electric_like_field(mass, r, conv)?.as_scalar()?;
    let e_newt = electric_like_field_newtonian(mass, r, conv)?.as_scalar()?;
    let ratio = force_ratio(v, conv, k)?;
    let f_lit = m * e_lit;
    let f_newt = m * e_newt;
    let speed = v.magnitude();
    Ok(ScenarioReport {
        convention: conv.name,
        mass: m,
        separation: r.as_scalar()?,
        speed,
        f_electric_paper_literal: f_lit,
        f_electric_newtonian: f_newt,
        force_ratio: ratio,
        f_magnetic_paper_literal: f_lit * ratio,
        f_magnetic_newtonian: f_newt * ratio,
        relativistic_warning: speed > RELATIVISTIC_WARN_BETA * k.c_si(),
    })
}

/// Convenience: runs [`two_mass_scenario`] under both conventions.
pub fn two_mass_scenario_all(
    mass: &Quantity,
    r: &Quantity,
    v: &Quantity,
    k: &Constants,
) -> Result<Vec<ScenarioReport>> {
    ConventionName::ALL
        .iter()
        .map(|&name| two_mass_scenario(mass, r, v, &gem_constants(k, name), k))
        .collect()
}
