//! Brute-force oracle: RK4 integration of the branch ⊗ truncated-Fock system.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::{check_time, check_weights, FieldMode, TwoQubitDensity, BRANCHES};
use crate::error::{Error, Result};

/// Maximum tolerated norm drift or top-level population.
pub const LEAKAGE_TOL: f64 = 1e-8;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct FockOptions {
    /// Highest retained Fock number.
    pub cutoff: usize,
    /// RK4 steps per field period 2π/ω (at least 1000).
    pub steps_per_period: usize,
}

impl FockOptions {
    pub fn new(cutoff: usize) -> FockOptions {
        FockOptions { cutoff, steps_per_period: 2000 }
    }
}

/// Final joint state in branch-major order, `joint[s·(cutoff+1) + n]`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FockEvolution {
    pub cutoff: usize,
    pub steps: usize,
    pub joint: Vec<Complex64>,
    pub density: TwoQubitDensity,
    /// max over the run of |‖ψ‖² − 1| and the top-level population.
    pub leakage: f64,
}

impl FockEvolution {
    pub fn branch(&self, s: usize) -> &[Complex64] {
        let dim = self.cutoff + 1;
        &self.joint[s * dim..(s + 1) * dim]
    }
}

/// Largest |α_s(τ)|² reached for τ ∈ [0, t].
fn peak_displacement_sq(mode: &FieldMode, t: f64) -> f64 {
    let wt = (mode.omega() * t).min(std::f64::consts::PI);
    BRANCHES
        .iter()
        .map(|&(s1, s2)| {
            let x = mode.branch_coupling(s1, s2) / mode.omega();
            2.0 * x * x * (1.0 - wt.cos())
        })
        .fold(0.0, f64::max)
}

// dψ/dt = −i H ψ with H = ω n + f_s (a + a†) per branch block.
fn derivative(mode: &FieldMode, couplings: &[f64; 4], dim: usize, psi: &[Complex64], out: &mut [Complex64]) {
    let minus_i = Complex64::new(0.0, -1.0);
    for (s, &f) in couplings.iter().enumerate() {
        let block = &psi[s * dim..(s + 1) * dim];
        let target = &mut out[s * dim..(s + 1) * dim];
        for n in 0..dim {
            let mut h = block[n] * (mode.omega() * n as f64);
            if n > 0 {
                h += block[n - 1] * (f * (n as f64).sqrt());
            }
            if n + 1 < dim {
                h += block[n + 1] * (f * ((n + 1) as f64).sqrt());
            }
            target[n] = minus_i * h;
        }
    }
}

fn top_population(psi: &[Complex64], dim: usize) -> f64 {
    (0..4).map(|s| psi[s * dim + dim - 1].norm_sqr()).sum()
}

/// Integrates the joint Schrödinger equation from |w⟩ ⊗ |0⟩ and traces out the field.
pub fn fock_oracle(
    mode: &FieldMode,
    t: f64,
    weights: &[Complex64; 4],
    options: FockOptions,
) -> Result<FockEvolution> {
    check_weights(weights)?;
    let t = check_time(t)?;
    let cutoff = options.cutoff;
    let peak = peak_displacement_sq(mode, t);
    if cutoff == 0 || peak > cutoff as f64 / 10.0 {
        return Err(Error::CutoffTooSmall {
            cutoff,
            reason: format!("peak |α|² = {peak:e} exceeds cutoff/10"),
        });
    }
    let dim = cutoff + 1;
    let len = 4 * dim;
    let couplings = BRANCHES.map(|(s1, s2)| mode.branch_coupling(s1, s2));

    let periods = mode.omega() * t / std::f64::consts::TAU;
    let per_period = options.steps_per_period.max(1000) as f64;
    let steps = ((periods * per_period).ceil() as usize).max(1);
    let h = t / steps as f64;

    let mut psi = vec![Complex64::new(0.0, 0.0); len];
    for s in 0..4 {
        psi[s * dim] = weights[s];
    }
    let mut k1 = vec![Complex64::new(0.0, 0.0); len];
    let mut k2 = k1.clone();
    let mut k3 = k1.clone();
    let mut k4 = k1.clone();
    let mut tmp = k1.clone();
    let mut leakage: f64 = 0.0;

    for _ in 0..steps {
        derivative(mode, &couplings, dim, &psi, &mut k1);
        for i in 0..len {
            tmp[i] = psi[i] + k1[i] * (h / 2.0);
        }
        derivative(mode, &couplings, dim, &tmp, &mut k2);
        for i in 0..len {
            tmp[i] = psi[i] + k2[i] * (h / 2.0);
        }
        derivative(mode, &couplings, dim, &tmp, &mut k3);
        for i in 0..len {
            tmp[i] = psi[i] + k3[i] * h;
        }
        derivative(mode, &couplings, dim, &tmp, &mut k4);
        for i in 0..len {
            psi[i] += (k1[i] + k2[i] * 2.0 + k3[i] * 2.0 + k4[i]) * (h / 6.0);
        }
        leakage = leakage.max(top_population(&psi, dim));
    }

    let norm: f64 = psi.iter().map(|z| z.norm_sqr()).sum();
    leakage = leakage.max((norm - 1.0).abs());
    if leakage > LEAKAGE_TOL {
        return Err(Error::CutoffTooSmall {
            cutoff,
            reason: format!("norm leakage {leakage:e} exceeds {LEAKAGE_TOL:e}"),
        });
    }

    let matrix = nalgebra::Matrix4::from_fn(|s, sp| {
        (0..dim)
            .map(|n| psi[s * dim + n] * psi[sp * dim + n].conj())
            .sum::<Complex64>()
    });
    // Integration error can leave ~1e-13 of non-Hermitian residue.
    let matrix = (matrix + matrix.adjoint()).scale(0.5);
    let trace = matrix.trace().re;
    let density = TwoQubitDensity::new(matrix.map(|z| z / trace))?;

    Ok(FockEvolution {
        cutoff,
        steps,
        joint: psi,
        density,
        leakage,
    })
}
