//! Weak-field gravito-electromagnetism and an exact model of the
//! entanglement witness for non-commuting gravitational degrees of freedom.
//!
//! - [`quantities`]: dimension-checked values, CODATA constants, GEM conventions.
//! - [`gem_fields`]: electric-like / magnetic-like fields and the Lorentz force.
//! - [`uncertainty`]: confinement-scale uncertainty bounds.
//! - [`witness`]: two mass qubits coupled to one quantized mode.
//! - [`sagnac`]: rotating-interferometer toy model.
//!
//! Sweeps run through [`exec`], which is parallel with the default
//! `parallel` feature and sequential without it.

pub mod claims;
pub mod error;
pub mod exec;
pub mod gem_fields;
pub mod quantities;
pub mod sagnac;
pub mod uncertainty;
pub mod witness;

pub use error::{Error, Result};
pub use quantities::{Constants, ConventionName, Dimension, GemConvention, Quantity};
