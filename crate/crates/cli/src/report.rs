//! Output files: the CSV table, the text report and the metadata sidecar.
//! The CSV and report depend only on the config, so repeated runs are
//! byte-identical; the wall-clock timestamp lives in the sidecar alone.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

use gemwit_core::quantities::{gem_constants, Constants, ConventionName};
use serde::Serialize;

use crate::config::Spacing;
use crate::error::{CliError, Result};
use crate::scenarios::{Cell, Outcome};

/// Shortest decimal that parses back to the same `f64`.
pub fn fmt_num(x: f64) -> String {
    format!("{x:e}")
}

fn cell_text(c: &Cell) -> String {
    match c {
        Cell::Num(x) => fmt_num(*x),
        Cell::Text(s) => s.clone(),
    }
}

pub fn render_csv(outcome: &Outcome) -> Result<Vec<u8>> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    let csv_err = |e: csv::Error| CliError::io("csv buffer", std::io::Error::other(e));
    w.write_record(outcome.columns.iter().map(|c| c.name)).map_err(csv_err)?;
    for row in &outcome.rows {
        w.write_record(row.iter().map(cell_text)).map_err(csv_err)?;
    }
    w.into_inner()
        .map_err(|e| CliError::io("csv buffer", std::io::Error::other(e.to_string())))
}

pub fn render_report(outcome: &Outcome, k: &Constants) -> String {
    let cfg = &outcome.config;
    let mut s = String::new();
    // Writing to a String cannot fail.
    let _ = writeln!(s, "scenario: {}", cfg.name);
    let _ = writeln!(s, "kind: {}", cfg.kind);
    let _ = writeln!(s, "convention: {}", cfg.convention);
    if let Some(d) = &cfg.description {
        let _ = writeln!(s, "description: {d}");
    }

    s.push_str("\n[inputs]\n");
    for (name, value, unit) in &outcome.inputs {
        let _ = writeln!(s, "{name} = {value}  [SI unit: {unit}]");
    }
    if let Some(sweep) = &cfg.sweep {
        let first = sweep.values.first().copied().unwrap_or(f64::NAN);
        let last = sweep.values.last().copied().unwrap_or(f64::NAN);
        let _ = writeln!(
            s,
            "sweep: {} from {} to {} ({} points, {} spacing)",
            sweep.param,
            fmt_num(first),
            fmt_num(last),
            sweep.values.len(),
            match sweep.spacing {
                Spacing::Linear => "linear",
                Spacing::Log => "log",
            }
        );
    }

    s.push_str("\n[convention ledger]\n");
    for name in ConventionName::ALL {
        let conv = gem_constants(k, name);
        let mark = if name == cfg.convention { " (selected)" } else { "" };
        let _ = writeln!(
            s,
            "{name}: eps_G = {} kg s^2/m^3, mu_G = {} m/kg, eps_G*mu_G*c^2 = {}{mark}",
            fmt_num(conv.eps_g_si()),
            fmt_num(conv.mu_g_si()),
            fmt_num(conv.wave_speed_identity(k))
        );
    }

    s.push_str("\n[results at base point]\n");
    for (name, value) in &outcome.metrics {
        let _ = writeln!(s, "{name} = {}", fmt_num(*value));
    }

    s.push_str("\n[claims]\n");
    if outcome.claims.is_empty() {
        s.push_str("none configured\n");
    }
    for (spec, check) in cfg.claims.iter().zip(&outcome.claims) {
        let _ = writeln!(s, "claim {}: \"{}\"", check.id, check.quote);
        let _ = writeln!(
            s,
            "  computed {} = {}; expected {}; decade gap {:+.4}; {}",
            spec.metric,
            fmt_num(check.computed),
            check.rule.describe(),
            check.decade_gap,
            check.verdict()
        );
    }

    if !outcome.notes.is_empty() {
        s.push_str("\n[notes]\n");
        for n in &outcome.notes {
            let _ = writeln!(s, "- {n}");
        }
    }

    s.push_str("\n[columns]\n");
    for c in &outcome.columns {
        let unit = if c.unit.is_empty() { "-" } else { c.unit };
        let _ = writeln!(s, "{} [{unit}]: {}", c.name, c.source);
    }
    let _ = writeln!(s, "\nrows: {}", outcome.rows.len());
    s
}

#[derive(Serialize)]
struct Metadata<'a> {
    scenario: &'a str,
    kind: &'a str,
    generated_unix_seconds: u64,
    tool_version: &'a str,
    parallel: bool,
    files: [&'a str; 2],
}

/// Paths of the files written for one scenario.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Artifacts {
    pub csv: PathBuf,
    pub report: PathBuf,
    pub metadata: PathBuf,
}

pub fn write_outputs(outcome: &Outcome, k: &Constants, dir: &Path) -> Result<Artifacts> {
    let io = |p: &Path| {
        let p = p.display().to_string();
        move |e| CliError::io(p, e)
    };
    fs::create_dir_all(dir).map_err(io(dir))?;
    let name = &outcome.config.name;
    let csv_name = format!("{name}.csv");
    let report_name = format!("{name}.report.txt");
    let art = Artifacts {
        csv: dir.join(&csv_name),
        report: dir.join(&report_name),
        metadata: dir.join(format!("{name}.meta.json")),
    };
    fs::write(&art.csv, render_csv(outcome)?).map_err(io(&art.csv))?;
    fs::write(&art.report, render_report(outcome, k)).map_err(io(&art.report))?;
    let meta = Metadata {
        scenario: name,
        kind: outcome.config.kind.as_str(),
        generated_unix_seconds: SystemTime::now()
            .duration_since(UNIX_EPOCH)
            .map(|d| d.as_secs())
            .unwrap_or(0),
        tool_version: env!("CARGO_PKG_VERSION"),
        parallel: gemwit_core::exec::is_parallel(),
        files: [&csv_name, &report_name],
    };
    let json = serde_json::to_string_pretty(&meta).expect("metadata serializes");
    fs::write(&art.metadata, json + "\n").map_err(io(&art.metadata))?;
    Ok(art)
}
