//! Example scenarios shipped inside the binary.

use crate::error::{CliError, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Example {
    pub name: &'static str,
    pub summary: &'static str,
    pub toml: &'static str,
}

pub const EXAMPLES: &[Example] = &[
    Example {
        name: "micron-EM-unity",
        summary: "EM uncertainty product hbar c / L^4 at L = 1 um versus one",
        toml: include_str!("../scenarios/micron-EM-unity.toml"),
    },
    Example {
        name: "nanogram-forces",
        summary: "electric-like and magnetic-like forces between two moving nanogram masses",
        toml: include_str!("../scenarios/nanogram-forces.toml"),
    },
    Example {
        name: "unity-scale",
        summary: "confinement where the Christoffel product bound reaches one",
        toml: include_str!("../scenarios/unity-scale.toml"),
    },
    Example {
        name: "witness-revival",
        summary: "negativity of two masses coupled to one field mode over two periods",
        toml: include_str!("../scenarios/witness-revival.toml"),
    },
    Example {
        name: "sagnac-maximal",
        summary: "rotor and particle maximally entangled by a pi Sagnac phase difference",
        toml: include_str!("../scenarios/sagnac-maximal.toml"),
    },
];

pub fn find(name: &str) -> Result<&'static Example> {
    EXAMPLES.iter().find(|e| e.name == name).ok_or_else(|| {
        let known: Vec<_> = EXAMPLES.iter().map(|e| e.name).collect();
        CliError::config("example", format!("unknown example `{name}`; known: {}", known.join(", ")))
    })
}
