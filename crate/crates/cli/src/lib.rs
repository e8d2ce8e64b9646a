//! Command-line front end for `gemwit-core`: TOML scenario configs with typed
//! `"value unit"` inputs, in-config sweeps, and deterministic CSV plus text
//! reports.

pub mod bundled;
pub mod config;
pub mod error;
pub mod report;
pub mod scenarios;

use std::path::Path;

use gemwit_core::Constants;

pub use config::{Override, ScenarioConfig, ScenarioKind};
pub use error::{CliError, Result};
pub use report::Artifacts;
pub use scenarios::Outcome;

/// Reads (or defaults) a config, applies `--set` overrides and then the
/// `--convention` flag, and validates the result.
pub fn load_config(
    path: Option<&Path>,
    kind: Option<ScenarioKind>,
    overrides: &[Override],
    convention: Option<&str>,
) -> Result<ScenarioConfig> {
    let table = match path {
        Some(p) => config::read_table(p)?,
        None => toml::Table::new(),
    };
    build_config(table, kind, overrides, convention)
}

pub fn load_config_str(
    text: &str,
    kind: Option<ScenarioKind>,
    overrides: &[Override],
    convention: Option<&str>,
) -> Result<ScenarioConfig> {
    build_config(config::parse_table(text)?, kind, overrides, convention)
}

fn build_config(
    mut table: toml::Table,
    kind: Option<ScenarioKind>,
    overrides: &[Override],
    convention: Option<&str>,
) -> Result<ScenarioConfig> {
    config::apply_overrides(&mut table, overrides)?;
    if let Some(c) = convention {
        table.insert("convention".into(), toml::Value::String(c.to_string()));
    }
    if kind.is_none() && !table.contains_key("kind") {
        return Err(CliError::config("kind", "missing; set it in the config or use a subcommand"));
    }
    ScenarioConfig::from_table(table, kind, scenarios::param_specs)
}

pub fn evaluate(cfg: &ScenarioConfig) -> Result<Outcome> {
    scenarios::evaluate(cfg, &Constants::codata2018())
}

/// Evaluates a config and writes its CSV, report and metadata into `out`.
pub fn execute(cfg: &ScenarioConfig, out: &Path) -> Result<(Outcome, Artifacts)> {
    let k = Constants::codata2018();
    let outcome = scenarios::evaluate(cfg, &k)?;
    let artifacts = report::write_outputs(&outcome, &k, out)?;
    Ok((outcome, artifacts))
}

/// Loads `config_path`, runs it into `out`, and returns the process exit code.
pub fn run(config_path: &Path, out: &Path, overrides: &[Override]) -> i32 {
    match load_config(Some(config_path), None, overrides, None).and_then(|cfg| execute(&cfg, out)) {
        Ok(_) => 0,
        Err(e) => {
            log::error!("{e}");
            e.exit_code()
        }
    }
}

/// Runs a bundled example by name.
pub fn run_example(name: &str, out: &Path) -> Result<(Outcome, Artifacts)> {
    let ex = bundled::find(name)?;
    let cfg = load_config_str(ex.toml, None, &[], None)?;
    execute(&cfg, out)
}
