//! Entanglement witness for non-commuting field degrees of freedom.
//!
//! Two mass qubits (branch labels s₁, s₂ = ±1) couple to one field mode through
//!
//! ```text
//! H/ħ = ω a†a + (f₁ s₁ + f₂ s₂)(a + a†)
//! ```
//!
//! Starting from the vacuum, each branch is a displaced coherent state with an
//! accumulated phase, which gives the reduced two-qubit state in closed form.
//! [`fock_oracle`] integrates the same Hamiltonian in a truncated Fock space
//! and [`classical_baseline`] swaps the quadrature for a c-number drive.

mod density;
mod fock;
mod newtonian;

use std::f64::consts::TAU;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

pub use density::{
    binary_entropy, entangling_combination, negativity, phase_state, TwoQubitDensity, HERMITIAN_TOL, PSD_TOL,
    PURE_TOL, TRACE_TOL,
};
pub use fock::{fock_oracle, FockEvolution, FockOptions, LEAKAGE_TOL};
pub use newtonian::{
    negativity_period, newtonian_phase_model, newtonian_sweep, NewtonianPhases, NewtonianSetup,
};

use crate::error::{finite, positive, Error, Result};
use crate::exec;

/// Branch labels in basis order.
pub const BRANCHES: [(i8, i8); 4] = [(1, 1), (1, -1), (-1, 1), (-1, -1)];

/// Equal superposition of both masses: 1/2 on every branch.
pub const EQUAL_WEIGHTS: [Complex64; 4] = [Complex64::new(0.5, 0.0); 4];

const WEIGHT_TOL: f64 = 1e-9;

/// One field mode and the two branch couplings to its quadrature, all in 1/s.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct FieldMode {
    omega: f64,
    f1: f64,
    f2: f64,
}

impl FieldMode {
    pub fn new(omega: f64, f1: f64, f2: f64) -> Result<FieldMode> {
        positive("omega", omega)?;
        finite("f1", f1)?;
        finite("f2", f2)?;
        Ok(FieldMode { omega, f1, f2 })
    }

    /// Mode with couplings given as fractions of ω.
    pub fn relative(omega: f64, f1_over_omega: f64, f2_over_omega: f64) -> Result<FieldMode> {
        FieldMode::new(omega, f1_over_omega * omega, f2_over_omega * omega)
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }

    pub fn f1(&self) -> f64 {
        self.f1
    }

    pub fn f2(&self) -> f64 {
        self.f2
    }

    /// f₁ s₁ + f₂ s₂.
    pub fn branch_coupling(&self, s1: i8, s2: i8) -> f64 {
        self.f1 * f64::from(s1) + self.f2 * f64::from(s2)
    }

    /// Time at which ωt equals `omega_t`.
    pub fn time_at(&self, omega_t: f64) -> f64 {
        omega_t / self.omega
    }
}

/// Exact state of one branch: coherent amplitude and accumulated phase.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct BranchRecord {
    pub s1: i8,
    pub s2: i8,
    pub alpha: Complex64,
    pub theta: f64,
}

fn check_time(t: f64) -> Result<f64> {
    if t.is_finite() && t >= 0.0 {
        Ok(t)
    } else {
        Err(Error::NonPositive { name: "t", value: t })
    }
}

fn check_sign(s: i8) -> Result<()> {
    if s == 1 || s == -1 {
        Ok(())
    } else {
        Err(Error::NonFinite { name: "branch sign", value: f64::from(s) })
    }
}

/// α = (f/ω)(e^{−iωt} − 1), θ = (f/ω)²(ωt − sin ωt), field starting in vacuum.
pub fn branch_evolution(mode: &FieldMode, s1: i8, s2: i8, t: f64) -> Result<BranchRecord> {
    check_sign(s1)?;
    check_sign(s2)?;
    let t = check_time(t)?;
    let x = mode.branch_coupling(s1, s2) / mode.omega;
    let wt = mode.omega * t;
    Ok(BranchRecord {
        s1,
        s2,
        alpha: (Complex64::from_polar(1.0, -wt) - 1.0) * x,
        theta: x * x * (wt - wt.sin()),
    })
}

fn branch_records(mode: &FieldMode, t: f64) -> Result<[BranchRecord; 4]> {
    let mut out = [BranchRecord { s1: 1, s2: 1, alpha: Complex64::new(0.0, 0.0), theta: 0.0 }; 4];
    for (slot, &(s1, s2)) in out.iter_mut().zip(BRANCHES.iter()) {
        *slot = branch_evolution(mode, s1, s2, t)?;
    }
    Ok(out)
}

/// ⟨β|α⟩ = exp(−(|α|² + |β|² − 2β̄α)/2).
pub fn coherent_overlap(alpha: Complex64, beta: Complex64) -> Complex64 {
    (-(alpha.norm_sqr() + beta.norm_sqr() - 2.0 * beta.conj() * alpha) / 2.0).exp()
}

pub(crate) fn check_weights(weights: &[Complex64; 4]) -> Result<()> {
    let norm: f64 = weights.iter().map(|w| w.norm_sqr()).sum();
    if (norm - 1.0).abs() > WEIGHT_TOL || !norm.is_finite() {
        return Err(Error::Unnormalized { what: "branch weights", norm });
    }
    Ok(())
}

/// Reduced two-qubit state after tracing out the field.
pub fn reduced_state(mode: &FieldMode, t: f64, weights: &[Complex64; 4]) -> Result<TwoQubitDensity> {
    check_weights(weights)?;
    let rec = branch_records(mode, t)?;
    let matrix = nalgebra::Matrix4::from_fn(|s, sp| {
        weights[s]
            * weights[sp].conj()
            * Complex64::from_polar(1.0, rec[s].theta - rec[sp].theta)
            * coherent_overlap(rec[s].alpha, rec[sp].alpha)
    });
    TwoQubitDensity::new(matrix)
}

/// Δφ(t) = 8 f₁ f₂ (ωt − sin ωt)/ω².
pub fn entangling_phase(mode: &FieldMode, t: f64) -> Result<f64> {
    let t = check_time(t)?;
    let wt = mode.omega * t;
    Ok(8.0 * mode.f1 * mode.f2 * (wt - wt.sin()) / (mode.omega * mode.omega))
}

/// A c-number field q(t) = amplitude · cos(ωt + phase) driving both masses.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClassicalDrive {
    pub amplitude: f64,
    pub phase: f64,
}

impl Default for ClassicalDrive {
    fn default() -> Self {
        ClassicalDrive { amplitude: 1.0, phase: 0.0 }
    }
}

impl ClassicalDrive {
    /// ∫₀ᵗ q(τ) dτ.
    fn integral(&self, omega: f64, t: f64) -> f64 {
        self.amplitude * ((omega * t + self.phase).sin() - self.phase.sin()) / omega
    }
}

/// Same couplings, but the quadrature is a commuting function of time: each
/// mass only picks up a local phase −f_i s_i ∫q, so the state stays a product.
pub fn classical_baseline(
    mode: &FieldMode,
    drive: &ClassicalDrive,
    t: f64,
    weights: &[Complex64; 4],
) -> Result<TwoQubitDensity> {
    check_weights(weights)?;
    let t = check_time(t)?;
    let q = drive.integral(mode.omega, t);
    let phases = BRANCHES.map(|(s1, s2)| -mode.branch_coupling(s1, s2) * q);
    phase_state(phases, *weights)
}

/// Closed-form witness observables at one time.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct WitnessPoint {
    pub t: f64,
    pub omega_t: f64,
    pub entangling_phase: f64,
    pub negativity: f64,
    pub purity: f64,
}

pub fn witness_point(mode: &FieldMode, t: f64, weights: &[Complex64; 4]) -> Result<WitnessPoint> {
    let rho = reduced_state(mode, t, weights)?;
    Ok(WitnessPoint {
        t,
        omega_t: mode.omega * t,
        entangling_phase: entangling_phase(mode, t)?,
        negativity: rho.negativity(),
        purity: rho.purity(),
    })
}

/// Evaluates [`witness_point`] over many ωt values, ordered as given.
pub fn witness_sweep(
    mode: &FieldMode,
    omega_ts: &[f64],
    weights: &[Complex64; 4],
) -> Result<Vec<WitnessPoint>> {
    exec::try_map(omega_ts, |&wt| witness_point(mode, mode.time_at(wt), weights))
}

/// Negativity of the phase state with entangling phase Δφ: |sin(Δφ/2)|/2.
pub fn phase_state_negativity(delta_phi: f64) -> f64 {
    (delta_phi / 2.0).sin().abs() / 2.0
}

/// First revival time ωt = 2π.
pub const REVIVAL_OMEGA_T: f64 = TAU;
