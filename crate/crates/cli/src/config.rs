//! Scenario configuration: a flat TOML file with typed `"value unit"` strings,
//! an optional sweep, and the claim tolerances used in the report.
//!
//! ```toml
//! name = "nanogram-forces"
//! kind = "field"
//! convention = "maxwell-consistent"
//!
//! [params]
//! mass = "1e-12 kg"
//!
//! [sweep]
//! param = "speed"
//! min = "1e5 m/s"
//! max = "1e7 m/s"
//! count = 5
//! spacing = "log"
//!
//! [[claims]]
//! id = "yocto"
//! quote = "of the order of a yoctoNewton"
//! metric = "f_electric_newtonian"
//! rule = "order_of"
//! target = 1e-24
//! max_decades = 3.0
//! ```

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;
use std::str::FromStr;

use gemwit_core::claims::ClaimRule;
use gemwit_core::quantities::{parse_quantity, ConventionName, Dimension};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ScenarioKind {
    Field,
    Uncertainty,
    Witness,
    Sagnac,
}

impl ScenarioKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            ScenarioKind::Field => "field",
            ScenarioKind::Uncertainty => "uncertainty",
            ScenarioKind::Witness => "witness",
            ScenarioKind::Sagnac => "sagnac",
        }
    }
}

impl fmt::Display for ScenarioKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ScenarioKind {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "field" => Ok(ScenarioKind::Field),
            "uncertainty" => Ok(ScenarioKind::Uncertainty),
            "witness" => Ok(ScenarioKind::Witness),
            "sagnac" => Ok(ScenarioKind::Sagnac),
            other => Err(CliError::config("kind", format!("unknown scenario kind `{other}`"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ParamValue {
    Bool(bool),
    Number(f64),
    Text(String),
}

impl fmt::Display for ParamValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParamValue::Bool(b) => write!(f, "{b}"),
            ParamValue::Number(x) => write!(f, "{x:e}"),
            ParamValue::Text(s) => f.write_str(s),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Spacing {
    Linear,
    Log,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSweep {
    param: String,
    min: ParamValue,
    max: ParamValue,
    count: usize,
    #[serde(default)]
    spacing: Option<Spacing>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClaimSpec {
    pub id: String,
    pub quote: String,
    pub metric: String,
    #[serde(flatten)]
    pub rule: ClaimRule,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConfig {
    #[serde(default)]
    name: Option<String>,
    kind: ScenarioKind,
    #[serde(default)]
    convention: Option<String>,
    #[serde(default)]
    description: Option<String>,
    #[serde(default)]
    params: BTreeMap<String, ParamValue>,
    #[serde(default)]
    sweep: Option<RawSweep>,
    #[serde(default)]
    claims: Vec<ClaimSpec>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ParamKind {
    Quantity(Dimension),
    Flag,
    /// One of a fixed set of words.
    Choice(&'static [&'static str]),
}

/// One parameter a scenario kind accepts.
#[derive(Clone, Copy, Debug)]
pub struct ParamSpec {
    pub name: &'static str,
    pub kind: ParamKind,
    /// Unit the parameter is reported in (SI).
    pub unit: &'static str,
    pub default: &'static str,
}

impl ParamSpec {
    pub const fn quantity(name: &'static str, dim: Dimension, unit: &'static str, default: &'static str) -> ParamSpec {
        ParamSpec { name, kind: ParamKind::Quantity(dim), unit, default }
    }

    pub const fn flag(name: &'static str, default: &'static str) -> ParamSpec {
        ParamSpec { name, kind: ParamKind::Flag, unit: "bool", default }
    }

    pub const fn choice(name: &'static str, options: &'static [&'static str], default: &'static str) -> ParamSpec {
        ParamSpec { name, kind: ParamKind::Choice(options), unit: "", default }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepSpec {
    pub param: String,
    pub spacing: Spacing,
    pub values: Vec<f64>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ScenarioConfig {
    pub name: String,
    pub kind: ScenarioKind,
    pub convention: ConventionName,
    pub description: Option<String>,
    pub params: BTreeMap<String, ParamValue>,
    pub sweep: Option<SweepSpec>,
    pub claims: Vec<ClaimSpec>,
}

/// A `key=value` override from the command line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Override {
    pub key: String,
    pub value: String,
}

impl FromStr for Override {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self> {
        let (key, value) = s
            .split_once('=')
            .ok_or_else(|| CliError::config(s, "override must look like key=value"))?;
        let key = key.trim();
        if key.is_empty() {
            return Err(CliError::config(s, "empty override key"));
        }
        Ok(Override {
            key: key.to_string(),
            value: value.trim().to_string(),
        })
    }
}

pub fn read_table(path: &Path) -> Result<toml::Table> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path.display().to_string(), e))?;
    parse_table(&text)
}

pub fn parse_table(text: &str) -> Result<toml::Table> {
    text.parse::<toml::Table>()
        .map_err(|e| CliError::config("config", e.message().to_string()))
}

fn override_value(key: &str, value: &str) -> toml::Value {
    if key == "sweep.count" {
        if let Ok(n) = value.parse::<i64>() {
            return toml::Value::Integer(n);
        }
    }
    match value {
        "true" => toml::Value::Boolean(true),
        "false" => toml::Value::Boolean(false),
        _ => toml::Value::String(value.to_string()),
    }
}

/// Applies overrides in order. Keys are `name`, `convention`, `description`,
/// `sweep.<field>`, `params.<name>`, or a bare parameter name.
pub fn apply_overrides(table: &mut toml::Table, overrides: &[Override]) -> Result<()> {
    for ov in overrides {
        let value = override_value(&ov.key, &ov.value);
        let (section, key) = match ov.key.split_once('.') {
            Some((s, k)) => (Some(s), k),
            None => match ov.key.as_str() {
                "name" | "convention" | "description" | "kind" => (None, ov.key.as_str()),
                _ => (Some("params"), ov.key.as_str()),
            },
        };
        match section {
            None => {
                table.insert(key.to_string(), value);
            }
            Some(s @ ("params" | "sweep")) => {
                let entry = table
                    .entry(s.to_string())
                    .or_insert_with(|| toml::Value::Table(toml::Table::new()));
                let sub = entry
                    .as_table_mut()
                    .ok_or_else(|| CliError::config(s, "expected a table"))?;
                sub.insert(key.to_string(), value);
            }
            Some(other) => {
                return Err(CliError::config(&ov.key, format!("cannot override section `{other}`")));
            }
        }
    }
    Ok(())
}

impl ScenarioConfig {
    /// Builds a validated config from a TOML table. `expected_kind` comes from
    /// the subcommand; `specs` lists the parameters that kind accepts.
    pub fn from_table(
        mut table: toml::Table,
        expected_kind: Option<ScenarioKind>,
        specs: impl Fn(ScenarioKind) -> &'static [ParamSpec],
    ) -> Result<ScenarioConfig> {
        if let Some(kind) = expected_kind {
            match table.get("kind") {
                None => {
                    table.insert("kind".into(), toml::Value::String(kind.as_str().into()));
                }
                Some(toml::Value::String(k)) if k == kind.as_str() => {}
                Some(other) => {
                    return Err(CliError::config(
                        "kind",
                        format!("config declares kind {other} but subcommand is `{kind}`"),
                    ))
                }
            }
        }
        if let Some(toml::Value::String(k)) = table.get("kind") {
            k.parse::<ScenarioKind>()?;
        }
        let raw: RawConfig = toml::Value::Table(table)
            .try_into()
            .map_err(|e: toml::de::Error| CliError::config("config", e.message().to_string()))?;

        let kind = raw.kind;
        let specs = specs(kind);
        for key in raw.params.keys() {
            if !specs.iter().any(|s| s.name == key) {
                return Err(CliError::config(
                    format!("params.{key}"),
                    format!("unknown parameter for `{kind}` scenarios"),
                ));
            }
        }
        let convention = match &raw.convention {
            Some(c) => c
                .parse::<ConventionName>()
                .map_err(|e| CliError::config("convention", e.to_string()))?,
            None => ConventionName::MaxwellConsistent,
        };
        let mut cfg = ScenarioConfig {
            name: raw.name.unwrap_or_else(|| kind.as_str().to_string()),
            kind,
            convention,
            description: raw.description,
            params: raw.params,
            sweep: None,
            claims: raw.claims,
        };
        if cfg.name.is_empty()
            || !cfg
                .name
                .chars()
                .all(|c| c.is_ascii_alphanumeric() || c == '-' || c == '_')
        {
            return Err(CliError::config("name", "use letters, digits, `-` or `_` only"));
        }
        // Validate every parameter up front so errors name the field.
        for spec in specs {
            match spec.kind {
                ParamKind::Quantity(_) => {
                    cfg.quantity(spec)?;
                }
                ParamKind::Flag => {
                    cfg.flag(spec)?;
                }
                ParamKind::Choice(_) => {
                    cfg.choice(spec)?;
                }
            }
        }
        if let Some(sweep) = raw.sweep {
            cfg.sweep = Some(build_sweep(&sweep, specs)?);
        }
        Ok(cfg)
    }

    fn raw_param(&self, spec: &ParamSpec) -> ParamValue {
        self.params
            .get(spec.name)
            .cloned()
            .unwrap_or_else(|| ParamValue::Text(spec.default.to_string()))
    }

    /// SI value of a parameter, checked against its declared dimension.
    pub fn quantity(&self, spec: &ParamSpec) -> Result<f64> {
        param_si(&self.raw_param(spec), spec, &format!("params.{}", spec.name))
    }

    pub fn flag(&self, spec: &ParamSpec) -> Result<bool> {
        match self.raw_param(spec) {
            ParamValue::Bool(b) => Ok(b),
            ParamValue::Text(t) if t == "true" => Ok(true),
            ParamValue::Text(t) if t == "false" => Ok(false),
            other => Err(CliError::config(
                format!("params.{}", spec.name),
                format!("expected true or false, got `{other}`"),
            )),
        }
    }

    pub fn choice(&self, spec: &ParamSpec) -> Result<&'static str> {
        let field = format!("params.{}", spec.name);
        let ParamKind::Choice(options) = spec.kind else {
            return Err(CliError::config(field, "not a choice parameter"));
        };
        let raw = self.raw_param(spec);
        let word = match &raw {
            ParamValue::Text(t) => t.as_str(),
            _ => "",
        };
        options
            .iter()
            .find(|o| **o == word)
            .copied()
            .ok_or_else(|| CliError::config(field, format!("`{raw}` is not one of {}", options.join(", "))))
    }

    /// Display string for a parameter as configured (or its default).
    pub fn display_param(&self, spec: &ParamSpec) -> String {
        self.raw_param(spec).to_string()
    }
}

fn param_si(value: &ParamValue, spec: &ParamSpec, field: &str) -> Result<f64> {
    let q = match value {
        ParamValue::Number(x) => gemwit_core::Quantity::dimensionless(*x),
        ParamValue::Text(t) => parse_quantity(t).map_err(|e| CliError::config(field, e.to_string()))?,
        ParamValue::Bool(_) => return Err(CliError::config(field, "expected a number with unit")),
    };
    let ParamKind::Quantity(dim) = spec.kind else {
        return Err(CliError::config(field, "expected true or false"));
    };
    if q.dim() != dim {
        return Err(CliError::config(
            field,
            format!("`{value}` has dimension {}, expected {dim} ({})", q.dim(), spec.unit),
        ));
    }
    let x = q.as_scalar().expect("parsed quantities are scalar");
    if !x.is_finite() {
        return Err(CliError::config(field, "value is not finite"));
    }
    Ok(x)
}

fn build_sweep(raw: &RawSweep, specs: &[ParamSpec]) -> Result<SweepSpec> {
    let spec = specs
        .iter()
        .find(|s| s.name == raw.param && matches!(s.kind, ParamKind::Quantity(_)))
        .ok_or_else(|| CliError::config("sweep.param", format!("`{}` cannot be swept", raw.param)))?;
    if raw.count < 2 {
        return Err(CliError::config("sweep.count", "need at least 2 points"));
    }
    let min = param_si(&raw.min, spec, "sweep.min")?;
    let max = param_si(&raw.max, spec, "sweep.max")?;
    let spacing = raw.spacing.unwrap_or(Spacing::Linear);
    let n = raw.count;
    let values = match spacing {
        Spacing::Linear => (0..n)
            .map(|i| {
                if i == n - 1 {
                    max
                } else {
                    min + (max - min) * i as f64 / (n - 1) as f64
                }
            })
            .collect(),
        Spacing::Log => {
            if min <= 0.0 || max <= 0.0 {
                return Err(CliError::config("sweep.spacing", "log spacing needs positive min and max"));
            }
            let (a, b) = (min.ln(), max.ln());
            (0..n)
                .map(|i| match i {
                    0 => min,
                    i if i == n - 1 => max,
                    i => (a + (b - a) * i as f64 / (n - 1) as f64).exp(),
                })
                .collect()
        }
    };
    Ok(SweepSpec {
        param: raw.param.clone(),
        spacing,
        values,
    })
}
