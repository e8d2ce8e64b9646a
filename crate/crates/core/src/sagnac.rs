//! Toy model of a rotating interferometer spun in a superposition of two
//! angular frequencies. Uses the matter-wave Sagnac phase 4 m A Ω / ħ and an
//! idealized two-port output; rotor states for distinct Ω are orthogonal.

use nalgebra::Matrix2;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{positive, Error, Result};
use crate::quantities::Constants;
use crate::witness::binary_entropy;

const NORM_TOL: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SagnacScenario {
    pub omega1: f64,
    pub omega2: f64,
    pub c1: Complex64,
    pub c2: Complex64,
    /// Enclosed area, m².
    pub area: f64,
    /// Particle mass, kg.
    pub mass: f64,
}

impl SagnacScenario {
    pub fn new(
        omega1: f64,
        omega2: f64,
        c1: Complex64,
        c2: Complex64,
        area: f64,
        mass: f64,
    ) -> Result<SagnacScenario> {
        let s = SagnacScenario { omega1, omega2, c1, c2, area, mass };
        s.validate()?;
        Ok(s)
    }

    fn validate(&self) -> Result<()> {
        crate::error::finite("omega1", self.omega1)?;
        crate::error::finite("omega2", self.omega2)?;
        positive("area", self.area)?;
        positive("mass", self.mass)?;
        let norm = self.c1.norm_sqr() + self.c2.norm_sqr();
        if (norm - 1.0).abs() > NORM_TOL || !norm.is_finite() {
            return Err(Error::Unnormalized { what: "rotor amplitudes", norm });
        }
        Ok(())
    }
}

/// φ = 4 m A Ω / ħ.
pub fn sagnac_phase(omega: f64, area: f64, mass: f64, k: &Constants) -> Result<f64> {
    crate::error::finite("omega", omega)?;
    positive("area", area)?;
    positive("mass", mass)?;
    Ok(4.0 * mass * area * omega / k.hbar_si())
}

/// Angular frequency giving Sagnac phase `phase`.
pub fn omega_for_phase(phase: f64, area: f64, mass: f64, k: &Constants) -> Result<f64> {
    positive("area", area)?;
    positive("mass", mass)?;
    Ok(phase * k.hbar_si() / (4.0 * mass * area))
}

/// cos(φ/2)|bright⟩ + i sin(φ/2)|dark⟩.
pub fn output_port(phase: f64) -> [Complex64; 2] {
    let h = phase / 2.0;
    [Complex64::new(h.cos(), 0.0), Complex64::new(0.0, h.sin())]
}

/// Rotor ⊗ output-port pure state; `amplitudes[rotor][port]`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct BipartiteState {
    pub amplitudes: [[Complex64; 2]; 2],
}

impl BipartiteState {
    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.iter().flatten().map(|z| z.norm_sqr()).sum()
    }

    fn reduced_rotor(&self) -> Matrix2<Complex64> {
        let a = &self.amplitudes;
        Matrix2::from_fn(|i, j| a[i][0] * a[j][0].conj() + a[i][1] * a[j][1].conj())
    }
}

/// c₁|Ω₁⟩|out(φ(Ω₁))⟩ + c₂|Ω₂⟩|out(φ(Ω₂))⟩.
pub fn joint_state(s: &SagnacScenario, k: &Constants) -> Result<BipartiteState> {
    s.validate()?;
    let p1 = output_port(sagnac_phase(s.omega1, s.area, s.mass, k)?);
    let p2 = output_port(sagnac_phase(s.omega2, s.area, s.mass, k)?);
    Ok(BipartiteState {
        amplitudes: [p1.map(|z| s.c1 * z), p2.map(|z| s.c2 * z)],
    })
}

/// Von Neumann entropy of the rotor (equivalently the particle), in bits.
pub fn rotor_particle_entanglement(state: &BipartiteState) -> Result<f64> {
    let norm = state.norm_sqr();
    if (norm - 1.0).abs() > NORM_TOL || !norm.is_finite() {
        return Err(Error::Unnormalized { what: "bipartite state", norm });
    }
    Ok(binary_entropy(&state.reduced_rotor()))
}

/// |⟨out(φ₁)|out(φ₂)⟩| = |cos((φ₁ − φ₂)/2)|.
pub fn branch_overlap(phase1: f64, phase2: f64) -> f64 {
    ((phase1 - phase2) / 2.0).cos().abs()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_1_SQRT_2, PI};

    fn k() -> Constants {
        Constants::codata2018()
    }

    fn h(p: f64) -> f64 {
        if p <= 0.0 { 0.0 } else { -p * p.log2() }
    }

    #[test]
    fn phase_values() {
        assert_eq!(sagnac_phase(0.0, 1e-4, 1e-26, &k()).unwrap(), 0.0);
        let p = sagnac_phase(1.0, 1e-4, 1e-26, &k()).unwrap();
        assert!((p / (4e-30 / 1.054_571_817e-34) - 1.0).abs() < 1e-14);
        assert!((p / 3.793e4 - 1.0).abs() < 1e-3);
        let p2 = sagnac_phase(2.0, 3e-4, 5e-26, &k()).unwrap();
        assert!((p2 / (p * 30.0) - 1.0).abs() < 1e-14);
        assert!(sagnac_phase(1.0, 0.0, 1.0, &k()).is_err());
        assert!(sagnac_phase(1.0, 1.0, -1.0, &k()).is_err());
    }

    #[test]
    fn equal_frequencies_give_product() {
        let a = Complex64::new(FRAC_1_SQRT_2, 0.0);
        let s = SagnacScenario::new(3.0, 3.0, a, a, 1e-4, 1e-26).unwrap();
        let e = rotor_particle_entanglement(&joint_state(&s, &k()).unwrap()).unwrap();
        assert_eq!(e, 0.0);
    }

    #[test]
    fn single_branch_gives_product() {
        let one = Complex64::new(1.0, 0.0);
        let s = SagnacScenario::new(0.0, 1e-4, one, Complex64::new(0.0, 0.0), 1e-4, 1e-26).unwrap();
        let e = rotor_particle_entanglement(&joint_state(&s, &k()).unwrap()).unwrap();
        assert!(e.abs() < 1e-12);
    }

    #[test]
    fn phase_difference_pi_is_maximal() {
        let (area, mass) = (1e-4, 1e-26);
        let w2 = omega_for_phase(PI, area, mass, &k()).unwrap();
        let a = Complex64::new(FRAC_1_SQRT_2, 0.0);
        let s = SagnacScenario::new(0.0, w2, a, a, area, mass).unwrap();
        let state = joint_state(&s, &k()).unwrap();
        assert!((state.norm_sqr() - 1.0).abs() < 1e-12);
        let e = rotor_particle_entanglement(&state).unwrap();
        assert!((e - 1.0).abs() < 1e-9);
    }

    #[test]
    fn entropy_follows_overlap() {
        let (area, mass) = (1e-4, 1e-26);
        let c1 = Complex64::new(0.6, 0.0);
        let c2 = Complex64::new(0.0, 0.8);
        for w2 in [1e-6, 1e-5, 3e-5, 7e-5] {
            let s = SagnacScenario::new(0.0, w2, c1, c2, area, mass).unwrap();
            let e = rotor_particle_entanglement(&joint_state(&s, &k()).unwrap()).unwrap();
            let o = branch_overlap(0.0, sagnac_phase(w2, area, mass, &k()).unwrap());
            let disc = (1.0 - 4.0 * 0.36 * 0.64 * (1.0 - o * o)).sqrt();
            let expected = h((1.0 + disc) / 2.0) + h((1.0 - disc) / 2.0);
            assert!((e - expected).abs() < 1e-10);
            assert!((0.0..=1.0).contains(&e));
        }
    }

    #[test]
    fn rejects_unnormalized() {
        let a = Complex64::new(0.8, 0.0);
        assert!(SagnacScenario::new(0.0, 1.0, a, a, 1.0, 1.0).is_err());
        let bad = BipartiteState { amplitudes: [[a, a], [a, a]] };
        assert!(rotor_particle_entanglement(&bad).is_err());
    }
}
