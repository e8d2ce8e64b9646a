//! Static-limit branch phases from the Newtonian potential between two masses.

use serde::{Deserialize, Serialize};

use super::{check_weights, entangling_combination, phase_state, EQUAL_WEIGHTS};
use crate::error::{positive, Result};
use crate::exec;
use crate::quantities::Constants;

/// Masses, interaction time and the four branch-pair separations (SI).
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct NewtonianSetup {
    pub m1: f64,
    pub m2: f64,
    pub duration: f64,
    /// Separations for (+,+), (+,−), (−,+), (−,−).
    pub separations: [f64; 4],
}

impl NewtonianSetup {
    pub fn new(m1: f64, m2: f64, duration: f64, separations: [f64; 4]) -> Result<NewtonianSetup> {
        positive("m1", m1)?;
        positive("m2", m2)?;
        positive("T", duration)?;
        for d in separations {
            positive("separation", d)?;
        }
        Ok(NewtonianSetup { m1, m2, duration, separations })
    }

    pub fn with_duration(&self, duration: f64) -> Result<NewtonianSetup> {
        NewtonianSetup::new(self.m1, self.m2, duration, self.separations)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct NewtonianPhases {
    pub phases: [f64; 4],
    pub delta_phi: f64,
    /// From the partial transpose of the equal-weight phase state.
    pub negativity: f64,
}

/// φ_s = G m₁ m₂ T / (ħ d_s) for each branch pair.
pub fn newtonian_phase_model(setup: &NewtonianSetup, k: &Constants) -> Result<NewtonianPhases> {
    let setup = NewtonianSetup::new(setup.m1, setup.m2, setup.duration, setup.separations)?;
    let scale = k.g_si() * setup.m1 * setup.m2 * setup.duration / k.hbar_si();
    let phases = setup.separations.map(|d| scale / d);
    check_weights(&EQUAL_WEIGHTS)?;
    let rho = phase_state(phases, EQUAL_WEIGHTS)?;
    Ok(NewtonianPhases {
        phases,
        delta_phi: entangling_combination(phases),
        negativity: rho.negativity(),
    })
}

/// Runs the model over several interaction times, ordered as given.
pub fn newtonian_sweep(setup: &NewtonianSetup, durations: &[f64], k: &Constants) -> Result<Vec<NewtonianPhases>> {
    exec::try_map(durations, |&t| newtonian_phase_model(&setup.with_duration(t)?, k))
}

/// Interaction time after which Δφ advances by 2π.
pub fn negativity_period(setup: &NewtonianSetup, k: &Constants) -> Result<f64> {
    let unit = newtonian_phase_model(&setup.with_duration(1.0)?, k)?;
    Ok(std::f64::consts::TAU / unit.delta_phi.abs())
}
