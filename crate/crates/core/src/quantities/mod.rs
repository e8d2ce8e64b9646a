//! Dimension-checked quantities, CODATA constants and the GEM constant conventions.

mod constants;
mod dimension;
mod quantity;
pub mod units;

pub use constants::{
    gem_constants, gem_constants_named, planck_length, Constants, ConventionName, GemConvention,
};
pub use dimension::{Dimension, BASE_COUNT};
pub use quantity::{quantity_arith, ArithOp, Quantity, Value};
pub use units::{parse_quantity, parse_quantity_as};
