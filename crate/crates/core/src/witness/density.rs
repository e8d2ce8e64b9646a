use nalgebra::{Matrix2, Matrix4};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const HERMITIAN_TOL: f64 = 1e-12;
pub const TRACE_TOL: f64 = 1e-12;
pub const PSD_TOL: f64 = 1e-10;
/// Purity above which the state is treated as pure for entropy reporting.
pub const PURE_TOL: f64 = 1e-8;

/// Density matrix of the two mass qubits.
///
/// Basis order is (s1, s2) ∈ {(+,+), (+,−), (−,+), (−,−)}, i.e. index
/// `2·b1 + b2` with `b = 0` for the `+` branch.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TwoQubitDensity {
    matrix: Matrix4<Complex64>,
}

impl TwoQubitDensity {
    /// Validates Hermiticity, unit trace and positivity.
    pub fn new(matrix: Matrix4<Complex64>) -> Result<TwoQubitDensity> {
        let skew = (matrix - matrix.adjoint()).iter().map(|z| z.norm()).fold(0.0, f64::max);
        if skew > HERMITIAN_TOL {
            return Err(Error::InvalidDensity(format!("not Hermitian (max |ρ-ρ†| = {skew:e})")));
        }
        let trace = matrix.trace();
        if (trace.re - 1.0).abs() > TRACE_TOL || trace.im.abs() > TRACE_TOL {
            return Err(Error::InvalidDensity(format!("trace {trace} differs from 1")));
        }
        let rho = TwoQubitDensity { matrix };
        let min = rho.eigenvalues().into_iter().fold(f64::INFINITY, f64::min);
        if min < -PSD_TOL {
            return Err(Error::InvalidDensity(format!("negative eigenvalue {min:e}")));
        }
        Ok(rho)
    }

    /// Outer product |ψ⟩⟨ψ| of a normalized 4-component state.
    pub fn pure(psi: [Complex64; 4]) -> Result<TwoQubitDensity> {
        let norm: f64 = psi.iter().map(|z| z.norm_sqr()).sum();
        if (norm - 1.0).abs() > 1e-9 {
            return Err(Error::Unnormalized { what: "state", norm });
        }
        let matrix = Matrix4::from_fn(|i, j| psi[i] * psi[j].conj());
        TwoQubitDensity::new(matrix)
    }

    pub fn matrix(&self) -> &Matrix4<Complex64> {
        &self.matrix
    }

    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.matrix[(row, col)]
    }

    pub fn eigenvalues(&self) -> [f64; 4] {
        hermitian_eigenvalues(&self.matrix)
    }

    /// Tr ρ².
    pub fn purity(&self) -> f64 {
        (self.matrix * self.matrix).trace().re
    }

    /// Transpose on the second qubit.
    pub fn partial_transpose(&self) -> Matrix4<Complex64> {
        partial_transpose_second(&self.matrix)
    }

    /// (‖ρ^{T₂}‖₁ − 1)/2.
    pub fn negativity(&self) -> f64 {
        let trace_norm: f64 = hermitian_eigenvalues(&self.partial_transpose())
            .iter()
            .map(|l| l.abs())
            .sum();
        ((trace_norm - 1.0) / 2.0).max(0.0)
    }

    /// Reduced state of mass 1 (trace over mass 2).
    pub fn reduced_first(&self) -> Matrix2<Complex64> {
        Matrix2::from_fn(|i, j| self.matrix[(2 * i, 2 * j)] + self.matrix[(2 * i + 1, 2 * j + 1)])
    }

    /// Base-2 entanglement entropy, only defined when the state is pure.
    pub fn entanglement_entropy(&self) -> Option<f64> {
        if self.purity() < 1.0 - PURE_TOL {
            return None;
        }
        let r = self.reduced_first();
        Some(binary_entropy(&r))
    }

    /// Largest entrywise modulus difference.
    pub fn max_entry_distance(&self, other: &TwoQubitDensity) -> f64 {
        (self.matrix - other.matrix).iter().map(|z| z.norm()).fold(0.0, f64::max)
    }
}

pub fn negativity(rho: &TwoQubitDensity) -> f64 {
    rho.negativity()
}

fn partial_transpose_second(m: &Matrix4<Complex64>) -> Matrix4<Complex64> {
    Matrix4::from_fn(|row, col| {
        let (a1, a2) = (row / 2, row % 2);
        let (b1, b2) = (col / 2, col % 2);
        m[(2 * a1 + b2, 2 * b1 + a2)]
    })
}

fn hermitian_eigenvalues(m: &Matrix4<Complex64>) -> [f64; 4] {
    let herm = (m + m.adjoint()).scale(0.5);
    let v = herm.symmetric_eigenvalues();
    [v[0], v[1], v[2], v[3]]
}

/// Von Neumann entropy in bits of a 2×2 density matrix.
pub fn binary_entropy(r: &Matrix2<Complex64>) -> f64 {
    let a = r[(0, 0)].re;
    let d = r[(1, 1)].re;
    let off = r[(0, 1)].norm();
    let mean = 0.5 * (a + d);
    let half_gap = (0.25 * (a - d) * (a - d) + off * off).sqrt();
    let h = |p: f64| {
        let p = p.clamp(0.0, 1.0);
        if p == 0.0 { 0.0 } else { -p * p.log2() }
    };
    (h(mean + half_gap) + h(mean - half_gap)).max(0.0)
}

/// The pure state with amplitudes `weights[s] · e^{i phases[s]}`.
pub fn phase_state(phases: [f64; 4], weights: [Complex64; 4]) -> Result<TwoQubitDensity> {
    let psi = std::array::from_fn(|s| weights[s] * Complex64::from_polar(1.0, phases[s]));
    TwoQubitDensity::pure(psi)
}

/// Combination θ₊₊ + θ₋₋ − θ₊₋ − θ₋₊ that no pair of local phases can produce.
pub fn entangling_combination(phases: [f64; 4]) -> f64 {
    phases[0] + phases[3] - phases[1] - phases[2]
}
