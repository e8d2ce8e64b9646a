use std::fmt;

use serde::{Deserialize, Serialize};

/// Number of SI base dimensions tracked.
pub const BASE_COUNT: usize = 7;

const SYMBOLS: [&str; BASE_COUNT] = ["kg", "m", "s", "A", "K", "mol", "cd"];

/// Exponents over the seven SI base dimensions, stored as numerators over a
/// fixed denominator of 2 so half-integer powers are exact.
///
/// Order: mass, length, time, current, temperature, amount, luminosity.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Dimension {
    halves: [i8; BASE_COUNT],
}

impl Dimension {
    pub const DIMENSIONLESS: Dimension = Dimension { halves: [0; BASE_COUNT] };
    pub const MASS: Dimension = Dimension::new(1, 0, 0, 0, 0, 0, 0);
    pub const LENGTH: Dimension = Dimension::new(0, 1, 0, 0, 0, 0, 0);
    pub const TIME: Dimension = Dimension::new(0, 0, 1, 0, 0, 0, 0);
    pub const CURRENT: Dimension = Dimension::new(0, 0, 0, 1, 0, 0, 0);
    pub const TEMPERATURE: Dimension = Dimension::new(0, 0, 0, 0, 1, 0, 0);
    pub const AMOUNT: Dimension = Dimension::new(0, 0, 0, 0, 0, 1, 0);
    pub const LUMINOSITY: Dimension = Dimension::new(0, 0, 0, 0, 0, 0, 1);

    pub const VELOCITY: Dimension = Dimension::new(0, 1, -1, 0, 0, 0, 0);
    pub const ACCELERATION: Dimension = Dimension::new(0, 1, -2, 0, 0, 0, 0);
    pub const FORCE: Dimension = Dimension::new(1, 1, -2, 0, 0, 0, 0);
    pub const FREQUENCY: Dimension = Dimension::new(0, 0, -1, 0, 0, 0, 0);
    pub const AREA: Dimension = Dimension::new(0, 2, 0, 0, 0, 0, 0);
    pub const MASS_CURRENT: Dimension = Dimension::new(1, 0, -1, 0, 0, 0, 0);
    pub const ACTION: Dimension = Dimension::new(1, 2, -1, 0, 0, 0, 0);
    pub const GRAVITATIONAL: Dimension = Dimension::new(-1, 3, -2, 0, 0, 0, 0);
    pub const PERMEABILITY: Dimension = Dimension::new(1, 1, -2, -2, 0, 0, 0);

    /// Integer exponents, in base-dimension order.
    pub const fn new(
        mass: i8,
        length: i8,
        time: i8,
        current: i8,
        temperature: i8,
        amount: i8,
        luminosity: i8,
    ) -> Dimension {
        Dimension {
            halves: [
                2 * mass,
                2 * length,
                2 * time,
                2 * current,
                2 * temperature,
                2 * amount,
                2 * luminosity,
            ],
        }
    }

    /// Exponents given directly as numerators over 2.
    pub const fn from_halves(halves: [i8; BASE_COUNT]) -> Dimension {
        Dimension { halves }
    }

    pub fn halves(&self) -> [i8; BASE_COUNT] {
        self.halves
    }

    /// Exponent of base dimension `index` as a float (e.g. 0.5 for a square root).
    pub fn exponent(&self, index: usize) -> f64 {
        f64::from(self.halves[index]) / 2.0
    }

    pub fn is_dimensionless(&self) -> bool {
        self.halves.iter().all(|&h| h == 0)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn mul(self, other: Dimension) -> Dimension {
        self.zip(other, |a, b| a + b)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn div(self, other: Dimension) -> Dimension {
        self.zip(other, |a, b| a - b)
    }

    pub fn recip(self) -> Dimension {
        Dimension::DIMENSIONLESS.div(self)
    }

    pub fn powi(self, n: i8) -> Dimension {
        Dimension {
            halves: self.halves.map(|h| h * n),
        }
    }

    /// Square root; `None` when an exponent would leave the half-integer lattice.
    pub fn sqrt(self) -> Option<Dimension> {
        if self.halves.iter().any(|h| h % 2 != 0) {
            return None;
        }
        Some(Dimension {
            halves: self.halves.map(|h| h / 2),
        })
    }

    fn zip(self, other: Dimension, f: impl Fn(i8, i8) -> i8) -> Dimension {
        let mut halves = [0; BASE_COUNT];
        for (i, h) in halves.iter_mut().enumerate() {
            *h = f(self.halves[i], other.halves[i]);
        }
        Dimension { halves }
    }
}

impl fmt::Display for Dimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_dimensionless() {
            return f.write_str("1");
        }
        let mut first = true;
        for (sym, &h) in SYMBOLS.iter().zip(self.halves.iter()) {
            if h == 0 {
                continue;
            }
            if !first {
                f.write_str("·")?;
            }
            first = false;
            f.write_str(sym)?;
            match (h % 2 == 0, h / 2) {
                (true, 1) => {}
                (true, e) => write!(f, "^{e}")?,
                (false, _) => write!(f, "^{h}/2")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn newton_is_kg_m_per_s2() {
        let n = Dimension::MASS.mul(Dimension::ACCELERATION);
        assert_eq!(n, Dimension::FORCE);
        assert_eq!(n.to_string(), "kg·m·s^-2");
    }

    #[test]
    fn half_exponents_round_trip_through_sqrt() {
        let area = Dimension::AREA;
        assert_eq!(area.sqrt(), Some(Dimension::LENGTH));
        let half_length = Dimension::from_halves([0, 1, 0, 0, 0, 0, 0]);
        assert_eq!(half_length.sqrt(), None);
        assert_eq!(half_length.powi(2), Dimension::LENGTH);
        assert_eq!(half_length.to_string(), "m^1/2");
        assert_eq!(half_length.exponent(1), 0.5);
    }

    #[test]
    fn recip_cancels() {
        let g = Dimension::GRAVITATIONAL;
        assert!(g.mul(g.recip()).is_dimensionless());
        assert_eq!(Dimension::DIMENSIONLESS.to_string(), "1");
    }
}
