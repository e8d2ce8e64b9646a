//! Comparison of computed values against verbal or order-of-magnitude claims.
//! Tolerances are supplied by the caller (the CLI reads them from config).

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "rule", rename_all = "snake_case")]
pub enum ClaimRule {
    /// |log₁₀(computed/target)| ≤ max_decades.
    OrderOf { target: f64, max_decades: f64 },
    /// computed < bound.
    UpperBound { bound: f64 },
    /// computed > bound.
    LowerBound { bound: f64 },
    /// target/factor ≤ computed ≤ target·factor.
    WithinFactor { target: f64, factor: f64 },
    /// |computed/target − 1| ≤ rel_tol.
    Relative { target: f64, rel_tol: f64 },
    /// |computed − target| ≤ abs_tol.
    Absolute { target: f64, abs_tol: f64 },
}

impl ClaimRule {
    pub fn reference(&self) -> f64 {
        match *self {
            ClaimRule::OrderOf { target, .. }
            | ClaimRule::WithinFactor { target, .. }
            | ClaimRule::Relative { target, .. }
            | ClaimRule::Absolute { target, .. } => target,
            ClaimRule::UpperBound { bound } | ClaimRule::LowerBound { bound } => bound,
        }
    }

    pub fn holds(&self, computed: f64) -> bool {
        if !computed.is_finite() {
            return false;
        }
        match *self {
            ClaimRule::OrderOf { target, max_decades } => decade_gap(computed, target).abs() <= max_decades,
            ClaimRule::UpperBound { bound } => computed < bound,
            ClaimRule::LowerBound { bound } => computed > bound,
            ClaimRule::WithinFactor { target, factor } => {
                computed >= target / factor && computed <= target * factor
            }
            ClaimRule::Relative { target, rel_tol } => (computed / target - 1.0).abs() <= rel_tol,
            ClaimRule::Absolute { target, abs_tol } => (computed - target).abs() <= abs_tol,
        }
    }

    pub fn describe(&self) -> String {
        match *self {
            ClaimRule::OrderOf { target, max_decades } => {
                format!("order of {target:e} within {max_decades} decades")
            }
            ClaimRule::UpperBound { bound } => format!("< {bound:e}"),
            ClaimRule::LowerBound { bound } => format!("> {bound:e}"),
            ClaimRule::WithinFactor { target, factor } => format!("within factor {factor} of {target:e}"),
            ClaimRule::Relative { target, rel_tol } => format!("{target:e} to {rel_tol:e} relative"),
            ClaimRule::Absolute { target, abs_tol } => format!("{target:e} ± {abs_tol:e}"),
        }
    }
}

/// log₁₀(computed / reference); signed, NaN for non-positive ratios.
pub fn decade_gap(computed: f64, reference: f64) -> f64 {
    (computed / reference).log10()
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClaimCheck {
    pub id: String,
    pub quote: String,
    pub computed: f64,
    pub rule: ClaimRule,
    pub decade_gap: f64,
    pub agrees: bool,
}

impl ClaimCheck {
    pub fn evaluate(id: impl Into<String>, quote: impl Into<String>, computed: f64, rule: ClaimRule) -> ClaimCheck {
        ClaimCheck {
            id: id.into(),
            quote: quote.into(),
            computed,
            rule,
            decade_gap: decade_gap(computed, rule.reference()),
            agrees: rule.holds(computed),
        }
    }

    pub fn verdict(&self) -> &'static str {
        if self.agrees {
            "agree"
        } else {
            "disagree"
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn yocto_newton_gap() {
        let c = ClaimCheck::evaluate(
            "yn",
            "order of a yoctoNewton",
            6.674_30e-23,
            ClaimRule::OrderOf { target: 1e-24, max_decades: 3.0 },
        );
        assert!(c.agrees);
        assert!((c.decade_gap - 1.824_43).abs() < 1e-4);
        let tight = ClaimRule::OrderOf { target: 1e-24, max_decades: 1.0 };
        assert!(!tight.holds(6.674_30e-23));
    }

    #[test]
    fn bounds_and_factors() {
        assert!(ClaimRule::UpperBound { bound: 1e-3 }.holds(1.1e-5));
        assert!(!ClaimRule::UpperBound { bound: 1e-3 }.holds(1e-3));
        assert!(ClaimRule::WithinFactor { target: 1.0, factor: 100.0 }.holds(3.16e-2));
        assert!(!ClaimRule::WithinFactor { target: 1.0, factor: 10.0 }.holds(3.16e-2));
        assert!(!ClaimRule::Relative { target: 1.0, rel_tol: 0.1 }.holds(f64::NAN));
    }

    #[test]
    fn rule_deserializes_from_tagged_table() {
        let rule: ClaimRule =
            serde_json::from_str(r#"{"rule":"order_of","target":1e-24,"max_decades":3.0}"#).unwrap();
        assert_eq!(rule, ClaimRule::OrderOf { target: 1e-24, max_decades: 3.0 });
    }
}
