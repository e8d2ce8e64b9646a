//! Per-kind evaluation: resolves parameters, runs the sweep through the core
//! library and collects rows, base-point metrics and claim checks.

use std::collections::BTreeMap;
use std::f64::consts::PI;

use gemwit_core::claims::ClaimCheck;
use gemwit_core::gem_fields::{electric_like_field, electric_like_field_newtonian, two_mass_scenario};
use gemwit_core::quantities::{gem_constants, planck_length, Constants, ConventionName, Dimension, Quantity};
use gemwit_core::sagnac::{branch_overlap, joint_state, rotor_particle_entanglement, sagnac_phase, SagnacScenario};
use gemwit_core::uncertainty::{
    christoffel_product_bound, christoffel_product_bound_constants, christoffel_uncertainty, em_product_bound,
    gem_product_bound, metric_uncertainty, unity_scale,
};
use gemwit_core::witness::{
    branch_evolution, classical_baseline, fock_oracle, negativity_period, newtonian_phase_model, reduced_state,
    witness_point, ClassicalDrive, FieldMode, FockOptions, NewtonianSetup, BRANCHES, EQUAL_WEIGHTS,
};
use gemwit_core::{exec, Error};
use num_complex::Complex64;

use crate::config::{ParamKind, ParamSpec, ScenarioConfig, ScenarioKind};
use crate::error::{CliError, Result};

const LENGTH: Dimension = Dimension::LENGTH;
const ONE: Dimension = Dimension::DIMENSIONLESS;

pub const FIELD_PARAMS: &[ParamSpec] = &[
    ParamSpec::quantity("mass", Dimension::MASS, "kg", "1e-12 kg"),
    ParamSpec::quantity("separation", LENGTH, "m", "1e-6 m"),
    ParamSpec::quantity("speed", Dimension::VELOCITY, "m/s", "1e6 m/s"),
];

/// `separation` follows `confinement` unless set explicitly.
pub const UNCERTAINTY_PARAMS: &[ParamSpec] = &[
    ParamSpec::quantity("confinement", LENGTH, "m", "1e-6 m"),
    ParamSpec::quantity("separation", LENGTH, "m", "1e-6 m"),
];

pub const WITNESS_MODELS: &[&str] = &["mode", "newtonian"];

pub const WITNESS_PARAMS: &[ParamSpec] = &[
    ParamSpec::choice("model", WITNESS_MODELS, "mode"),
    ParamSpec::quantity("omega", Dimension::FREQUENCY, "1/s", "1 1/s"),
    ParamSpec::quantity("f1", Dimension::FREQUENCY, "1/s", "0.1 1/s"),
    ParamSpec::quantity("f2", Dimension::FREQUENCY, "1/s", "0.1 1/s"),
    ParamSpec::quantity("omega_t", ONE, "rad", "2 pi"),
    ParamSpec::quantity("cutoff", ONE, "1", "30"),
    ParamSpec::flag("oracle", "true"),
    ParamSpec::quantity("m1", Dimension::MASS, "kg", "1e-14 kg"),
    ParamSpec::quantity("m2", Dimension::MASS, "kg", "1e-14 kg"),
    ParamSpec::quantity("duration", Dimension::TIME, "s", "2.5 s"),
    ParamSpec::quantity("d_pp", LENGTH, "m", "4.5e-4 m"),
    ParamSpec::quantity("d_pm", LENGTH, "m", "2.5e-4 m"),
    ParamSpec::quantity("d_mp", LENGTH, "m", "6.5e-4 m"),
    ParamSpec::quantity("d_mm", LENGTH, "m", "4.5e-4 m"),
];

pub const SAGNAC_PARAMS: &[ParamSpec] = &[
    ParamSpec::quantity("omega1", Dimension::FREQUENCY, "rad/s", "0 rad/s"),
    ParamSpec::quantity("omega2", Dimension::FREQUENCY, "rad/s", "1e-4 rad/s"),
    ParamSpec::quantity("p1", ONE, "1", "0.5"),
    ParamSpec::quantity("relative_phase", ONE, "rad", "0"),
    ParamSpec::quantity("area", Dimension::AREA, "m^2", "1e-4 m^2"),
    ParamSpec::quantity("mass", Dimension::MASS, "kg", "1e-26 kg"),
];

pub fn param_specs(kind: ScenarioKind) -> &'static [ParamSpec] {
    match kind {
        ScenarioKind::Field => FIELD_PARAMS,
        ScenarioKind::Uncertainty => UNCERTAINTY_PARAMS,
        ScenarioKind::Witness => WITNESS_PARAMS,
        ScenarioKind::Sagnac => SAGNAC_PARAMS,
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Cell {
    Num(f64),
    Text(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Column {
    pub name: &'static str,
    pub unit: &'static str,
    /// Library operation that produced the value.
    pub source: &'static str,
}

const fn col(name: &'static str, unit: &'static str, source: &'static str) -> Column {
    Column { name, unit, source }
}

/// Everything a run produces before it is written out.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub config: ScenarioConfig,
    /// (parameter, configured value, SI unit) for the parameters that were used.
    pub inputs: Vec<(String, String, String)>,
    pub columns: Vec<Column>,
    pub rows: Vec<Vec<Cell>>,
    /// Base-point values and sweep aggregates, addressable by claims.
    pub metrics: BTreeMap<String, f64>,
    pub claims: Vec<ClaimCheck>,
    pub notes: Vec<String>,
}

impl Outcome {
    /// Numeric values of one column, in row order.
    pub fn column(&self, name: &str) -> Option<Vec<f64>> {
        let idx = self.columns.iter().position(|c| c.name == name)?;
        self.rows
            .iter()
            .map(|r| match &r[idx] {
                Cell::Num(x) => Some(*x),
                Cell::Text(_) => None,
            })
            .collect()
    }
}

type Params = BTreeMap<&'static str, f64>;

fn resolve(cfg: &ScenarioConfig, specs: &[ParamSpec]) -> Result<Params> {
    let mut out = Params::new();
    for spec in specs {
        if let ParamKind::Quantity(_) = spec.kind {
            out.insert(spec.name, cfg.quantity(spec)?);
        }
    }
    Ok(out)
}

fn sweep_points(cfg: &ScenarioConfig, base: &Params) -> Vec<Params> {
    match &cfg.sweep {
        None => vec![base.clone()],
        Some(sweep) => sweep
            .values
            .iter()
            .map(|&v| {
                let mut p = base.clone();
                let key = *p.keys().find(|k| **k == sweep.param).expect("sweep param validated");
                p.insert(key, v);
                p
            })
            .collect(),
    }
}

/// Maps a core error to the config field responsible for it. `names` pairs
/// the name the core library uses with the parameter name.
fn physics(err: Error, names: &[(&str, &str)]) -> CliError {
    let key = match &err {
        Error::NonPositive { name, .. } | Error::NonFinite { name, .. } => Some(*name),
        Error::Superluminal { .. } => Some("speed"),
        Error::CutoffTooSmall { .. } => Some("cutoff"),
        Error::Unnormalized { what, .. } => Some(*what),
        _ => None,
    };
    let field = key
        .and_then(|k| names.iter().find(|(core, _)| *core == k))
        .map(|(_, p)| format!("params.{p}"))
        .unwrap_or_else(|| "params".to_string());
    CliError::physics(field, err)
}

fn used_inputs(cfg: &ScenarioConfig, names: &[&str]) -> Vec<(String, String, String)> {
    let specs = param_specs(cfg.kind);
    names
        .iter()
        .filter_map(|n| specs.iter().find(|s| s.name == *n))
        .map(|s| (s.name.to_string(), cfg.display_param(s), s.unit.to_string()))
        .collect()
}

fn insert_row_metrics(metrics: &mut BTreeMap<String, f64>, columns: &[Column], row: &[Cell]) {
    for (c, cell) in columns.iter().zip(row) {
        if let Cell::Num(x) = cell {
            metrics.insert(c.name.to_string(), *x);
        }
    }
}

fn finish(
    cfg: &ScenarioConfig,
    inputs: Vec<(String, String, String)>,
    columns: Vec<Column>,
    rows: Vec<Vec<Cell>>,
    metrics: BTreeMap<String, f64>,
    notes: Vec<String>,
) -> Result<Outcome> {
    let mut claims = Vec::with_capacity(cfg.claims.len());
    for (i, spec) in cfg.claims.iter().enumerate() {
        let computed = *metrics.get(&spec.metric).ok_or_else(|| {
            CliError::config(
                format!("claims[{i}].metric"),
                format!(
                    "unknown metric `{}`; available: {}",
                    spec.metric,
                    metrics.keys().cloned().collect::<Vec<_>>().join(", ")
                ),
            )
        })?;
        claims.push(ClaimCheck::evaluate(&spec.id, &spec.quote, computed, spec.rule));
    }
    Ok(Outcome {
        config: cfg.clone(),
        inputs,
        columns,
        rows,
        metrics,
        claims,
        notes,
    })
}

/// Runs a validated config through the matching library module.
pub fn evaluate(cfg: &ScenarioConfig, k: &Constants) -> Result<Outcome> {
    match cfg.kind {
        ScenarioKind::Field => run_field(cfg, k),
        ScenarioKind::Uncertainty => run_uncertainty(cfg, k),
        ScenarioKind::Witness => match cfg.choice(&WITNESS_PARAMS[0])? {
            "newtonian" => run_newtonian(cfg, k),
            _ => run_mode(cfg),
        },
        ScenarioKind::Sagnac => run_sagnac(cfg, k),
    }
}

// ---------------------------------------------------------------- field

const FIELD_COLUMNS: &[Column] = &[
    col("mass", "kg", "input"),
    col("separation", "m", "input"),
    col("speed", "m/s", "input"),
    col("e_field_paper_literal", "m/s^2", "gem_fields::electric_like_field"),
    col("e_field_newtonian", "m/s^2", "gem_fields::electric_like_field_newtonian"),
    col("f_electric_paper_literal", "N", "gem_fields::two_mass_scenario"),
    col("f_electric_newtonian", "N", "gem_fields::two_mass_scenario"),
    col("force_ratio", "1", "gem_fields::force_ratio"),
    col("f_magnetic_paper_literal", "N", "gem_fields::two_mass_scenario"),
    col("f_magnetic_newtonian", "N", "gem_fields::two_mass_scenario"),
    col("convention", "", "selected GEM convention"),
    col("provenance", "", "operations and convention behind the row"),
];

const FIELD_NAMES: &[(&str, &str)] = &[("mass", "mass"), ("r", "separation"), ("speed", "speed"), ("velocity", "speed")];

fn field_row(p: &Params, cfg: &ScenarioConfig, k: &Constants) -> Result<(Vec<Cell>, bool), Error> {
    let conv = gem_constants(k, cfg.convention);
    let mass = Quantity::scalar(p["mass"], Dimension::MASS);
    let r = Quantity::scalar(p["separation"], LENGTH);
    let v = Quantity::vector([p["speed"], 0.0, 0.0], Dimension::VELOCITY);
    let e_lit = electric_like_field(&mass, &r, &conv)?.as_scalar()?;
    let e_newt = electric_like_field_newtonian(&mass, &r, &conv)?.as_scalar()?;
    let rep = two_mass_scenario(&mass, &r, &v, &conv, k)?;
    let row = vec![
        Cell::Num(rep.mass),
        Cell::Num(rep.separation),
        Cell::Num(rep.speed),
        Cell::Num(e_lit),
        Cell::Num(e_newt),
        Cell::Num(rep.f_electric_paper_literal),
        Cell::Num(rep.f_electric_newtonian),
        Cell::Num(rep.force_ratio),
        Cell::Num(rep.f_magnetic_paper_literal),
        Cell::Num(rep.f_magnetic_newtonian),
        Cell::Text(cfg.convention.as_str().to_string()),
        Cell::Text(format!("gem_fields::two_mass_scenario[{}]", cfg.convention)),
    ];
    Ok((row, rep.relativistic_warning))
}

fn run_field(cfg: &ScenarioConfig, k: &Constants) -> Result<Outcome> {
    let base = resolve(cfg, FIELD_PARAMS)?;
    let points = sweep_points(cfg, &base);
    let evaluated = exec::try_map(&points, |p| field_row(p, cfg, k)).map_err(|e| physics(e, FIELD_NAMES))?;
    let warned = evaluated.iter().any(|(_, w)| *w);
    let rows: Vec<Vec<Cell>> = evaluated.into_iter().map(|(r, _)| r).collect();

    let (base_row, _) = field_row(&base, cfg, k).map_err(|e| physics(e, FIELD_NAMES))?;
    let mut metrics = BTreeMap::new();
    insert_row_metrics(&mut metrics, FIELD_COLUMNS, &base_row);
    let v = Quantity::scalar(base["speed"], Dimension::VELOCITY);
    for name in ConventionName::ALL {
        let conv = gem_constants(k, name);
        let ratio = gemwit_core::gem_fields::force_ratio(&v, &conv, k).map_err(|e| physics(e, FIELD_NAMES))?;
        let key = name.as_str().replace('-', "_");
        metrics.insert(format!("force_ratio_{key}"), ratio);
        metrics.insert(format!("wave_identity_{key}"), conv.wave_speed_identity(k));
    }

    let mut notes = Vec::new();
    if warned {
        notes.push(format!(
            "speed above {}c in at least one row; weak-field formulas lose accuracy",
            gemwit_core::gem_fields::RELATIVISTIC_WARN_BETA
        ));
    }
    notes.push("f_magnetic_* = f_electric_* x force_ratio (parallel mass currents)".to_string());
    let inputs = used_inputs(cfg, &["mass", "separation", "speed"]);
    finish(cfg, inputs, FIELD_COLUMNS.to_vec(), rows, metrics, notes)
}

// ---------------------------------------------------------------- uncertainty

const UNCERTAINTY_COLUMNS: &[Column] = &[
    col("confinement", "m", "input L"),
    col("separation", "m", "input r"),
    col("em_product", "J/m^3", "uncertainty::em_product_bound"),
    col("metric", "1", "uncertainty::metric_uncertainty"),
    col("christoffel", "1/m", "uncertainty::christoffel_uncertainty"),
    col("christoffel_product", "1/m^2", "uncertainty::christoffel_product_bound"),
    col("christoffel_product_constants", "1/m^2", "uncertainty::christoffel_product_bound_constants"),
    col("gem_product", "1/m^2", "uncertainty::gem_product_bound"),
    col("gem_over_christoffel", "1", "gem_product / christoffel_product"),
    col("provenance", "", "operations behind the row"),
];

const UNCERTAINTY_NAMES: &[(&str, &str)] = &[("L", "confinement"), ("r", "separation")];

fn uncertainty_row(p: &Params, tracks: bool, k: &Constants) -> Result<Vec<Cell>, Error> {
    let l = p["confinement"];
    let r = if tracks { l } else { p["separation"] };
    let lq = Quantity::scalar(l, LENGTH);
    let rq = Quantity::scalar(r, LENGTH);
    let chr_prod = christoffel_product_bound(&lq, k)?.si_numeric();
    let gem = gem_product_bound(&rq, &lq, k)?.si_numeric();
    Ok(vec![
        Cell::Num(l),
        Cell::Num(r),
        Cell::Num(em_product_bound(&lq, k)?.si_numeric()),
        Cell::Num(metric_uncertainty(&lq, k)?.si_numeric()),
        Cell::Num(christoffel_uncertainty(&lq, k)?.si_numeric()),
        Cell::Num(chr_prod),
        Cell::Num(christoffel_product_bound_constants(&lq, k)?),
        Cell::Num(gem),
        Cell::Num(gem / chr_prod),
        Cell::Text("uncertainty::{em_product_bound;metric_uncertainty;christoffel_uncertainty;christoffel_product_bound;gem_product_bound}".to_string()),
    ])
}

fn run_uncertainty(cfg: &ScenarioConfig, k: &Constants) -> Result<Outcome> {
    let tracks = !cfg.params.contains_key("separation");
    let base = resolve(cfg, UNCERTAINTY_PARAMS)?;
    let points = sweep_points(cfg, &base);
    let rows = exec::try_map(&points, |p| uncertainty_row(p, tracks, k)).map_err(|e| physics(e, UNCERTAINTY_NAMES))?;
    let base_row = uncertainty_row(&base, tracks, k).map_err(|e| physics(e, UNCERTAINTY_NAMES))?;

    let mut metrics = BTreeMap::new();
    insert_row_metrics(&mut metrics, UNCERTAINTY_COLUMNS, &base_row);
    let l_star = unity_scale(k);
    metrics.insert("unity_scale".into(), l_star.as_scalar().expect("scalar"));
    metrics.insert("planck_length".into(), planck_length(k).as_scalar().expect("scalar"));
    let at_unity = christoffel_product_bound(&l_star, k).map_err(|e| physics(e, UNCERTAINTY_NAMES))?;
    metrics.insert("christoffel_product_at_unity_scale".into(), at_unity.si_numeric());

    let mut notes = vec!["bounds are compared with unity as SI numeric values".to_string()];
    let mut inputs = used_inputs(cfg, &["confinement"]);
    if tracks {
        notes.push("separation not set: r = L in every row".to_string());
    } else {
        inputs.extend(used_inputs(cfg, &["separation"]));
    }
    finish(cfg, inputs, UNCERTAINTY_COLUMNS.to_vec(), rows, metrics, notes)
}

// ---------------------------------------------------------------- witness (field mode)

const MODE_COLUMNS: &[Column] = &[
    col("omega_t", "rad", "input"),
    col("entangling_phase_rad", "rad", "witness::entangling_phase"),
    col("negativity", "1", "witness::reduced_state + negativity"),
    col("purity", "1", "witness::reduced_state + purity"),
    col("omega", "1/s", "input"),
    col("f1", "1/s", "input"),
    col("f2", "1/s", "input"),
    col("provenance", "", "operations behind the row"),
];

const MODE_NAMES: &[(&str, &str)] = &[
    ("omega", "omega"),
    ("f1", "f1"),
    ("f2", "f2"),
    ("t", "omega_t"),
    ("cutoff", "cutoff"),
];

fn mode_of(p: &Params) -> Result<FieldMode, Error> {
    FieldMode::new(p["omega"], p["f1"], p["f2"])
}

fn mode_row(p: &Params) -> Result<Vec<Cell>, Error> {
    let mode = mode_of(p)?;
    let pt = witness_point(&mode, mode.time_at(p["omega_t"]), &EQUAL_WEIGHTS)?;
    Ok(vec![
        Cell::Num(p["omega_t"]),
        Cell::Num(pt.entangling_phase),
        Cell::Num(pt.negativity),
        Cell::Num(pt.purity),
        Cell::Num(mode.omega()),
        Cell::Num(mode.f1()),
        Cell::Num(mode.f2()),
        Cell::Text("witness::witness_point[closed form]".to_string()),
    ])
}

fn cutoff(cfg: &ScenarioConfig) -> Result<usize> {
    let raw = cfg.quantity(&WITNESS_PARAMS[5])?;
    if raw < 1.0 || raw.fract() != 0.0 || raw > 10_000.0 {
        return Err(CliError::config("params.cutoff", format!("expected an integer in 1..=10000, got {raw}")));
    }
    Ok(raw as usize)
}

fn run_mode(cfg: &ScenarioConfig) -> Result<Outcome> {
    let base = resolve(cfg, WITNESS_PARAMS)?;
    let cutoff = cutoff(cfg)?;
    let points = sweep_points(cfg, &base);
    let rows = exec::try_map(&points, mode_row).map_err(|e| physics(e, MODE_NAMES))?;
    let base_row = mode_row(&base).map_err(|e| physics(e, MODE_NAMES))?;

    let mut metrics = BTreeMap::new();
    insert_row_metrics(&mut metrics, MODE_COLUMNS, &base_row);
    let mode = mode_of(&base).map_err(|e| physics(e, MODE_NAMES))?;
    let t = mode.time_at(base["omega_t"]);
    let mut alpha_max: f64 = 0.0;
    for (s1, s2) in BRANCHES {
        let rec = branch_evolution(&mode, s1, s2, t).map_err(|e| physics(e, MODE_NAMES))?;
        alpha_max = alpha_max.max(rec.alpha.norm());
    }
    metrics.insert("alpha_max_abs".into(), alpha_max);
    let classical = classical_baseline(&mode, &ClassicalDrive::default(), t, &EQUAL_WEIGHTS)
        .map_err(|e| physics(e, MODE_NAMES))?;
    metrics.insert("classical_negativity".into(), classical.negativity());

    let mut notes = vec![
        "equal-weight superposition of both masses; field starts in vacuum".to_string(),
        "classical_negativity: same couplings with a c-number drive q = cos(wt)".to_string(),
    ];
    let oracle = cfg.flag(&WITNESS_PARAMS[6])?;
    if oracle {
        let exact = reduced_state(&mode, t, &EQUAL_WEIGHTS).map_err(|e| physics(e, MODE_NAMES))?;
        let fock = fock_oracle(&mode, t, &EQUAL_WEIGHTS, FockOptions::new(cutoff)).map_err(|e| physics(e, MODE_NAMES))?;
        metrics.insert("oracle_max_entry_distance".into(), fock.density.max_entry_distance(&exact));
        metrics.insert("oracle_negativity".into(), fock.density.negativity());
        metrics.insert("oracle_leakage".into(), fock.leakage);
        notes.push(format!(
            "oracle: truncated Fock integration, cutoff {cutoff}, {} RK4 steps, at the base point only",
            fock.steps
        ));
    }

    let wt = rows.iter().map(|r| num(&r[0])).collect::<Vec<_>>();
    let neg = rows.iter().map(|r| num(&r[2])).collect::<Vec<_>>();
    if let Some((i, _)) = argmax(&neg, |_| true) {
        metrics.insert("negativity_max".into(), neg[i]);
        metrics.insert("omega_t_at_negativity_max".into(), wt[i]);
    }
    // Negativity dips after each revival, so the window around 2π isolates the first peak.
    if let Some((i, _)) = argmax(&neg, |j| wt[j] >= 1.5 * PI && wt[j] <= 2.5 * PI) {
        metrics.insert("negativity_first_revival_peak".into(), neg[i]);
        metrics.insert("omega_t_at_first_revival_peak".into(), wt[i]);
    }

    let mut names = vec!["omega", "f1", "f2", "omega_t"];
    if oracle {
        names.push("cutoff");
    }
    finish(cfg, used_inputs(cfg, &names), MODE_COLUMNS.to_vec(), rows, metrics, notes)
}

fn num(c: &Cell) -> f64 {
    match c {
        Cell::Num(x) => *x,
        Cell::Text(_) => f64::NAN,
    }
}

/// First index of the largest value among indices accepted by `keep`.
fn argmax(values: &[f64], keep: impl Fn(usize) -> bool) -> Option<(usize, f64)> {
    values
        .iter()
        .enumerate()
        .filter(|(i, _)| keep(*i))
        .fold(None, |best: Option<(usize, f64)>, (i, &v)| match best {
            Some((_, b)) if b >= v => best,
            _ => Some((i, v)),
        })
}

// ---------------------------------------------------------------- witness (newtonian)

const NEWTONIAN_COLUMNS: &[Column] = &[
    col("duration", "s", "input"),
    col("phase_pp", "rad", "witness::newtonian_phase_model"),
    col("phase_pm", "rad", "witness::newtonian_phase_model"),
    col("phase_mp", "rad", "witness::newtonian_phase_model"),
    col("phase_mm", "rad", "witness::newtonian_phase_model"),
    col("delta_phi", "rad", "witness::newtonian_phase_model"),
    col("negativity", "1", "witness::newtonian_phase_model"),
    col("provenance", "", "operations behind the row"),
];

const NEWTONIAN_NAMES: &[(&str, &str)] = &[("m1", "m1"), ("m2", "m2"), ("T", "duration"), ("separation", "d_pp")];

fn newtonian_setup(p: &Params) -> Result<NewtonianSetup, Error> {
    NewtonianSetup::new(p["m1"], p["m2"], p["duration"], [p["d_pp"], p["d_pm"], p["d_mp"], p["d_mm"]])
}

fn newtonian_row(p: &Params, k: &Constants) -> Result<Vec<Cell>, Error> {
    let out = newtonian_phase_model(&newtonian_setup(p)?, k)?;
    let mut row = vec![Cell::Num(p["duration"])];
    row.extend(out.phases.iter().map(|&x| Cell::Num(x)));
    row.push(Cell::Num(out.delta_phi));
    row.push(Cell::Num(out.negativity));
    row.push(Cell::Text("witness::newtonian_phase_model".to_string()));
    Ok(row)
}

fn run_newtonian(cfg: &ScenarioConfig, k: &Constants) -> Result<Outcome> {
    let base = resolve(cfg, WITNESS_PARAMS)?;
    for d in ["d_pp", "d_pm", "d_mp", "d_mm"] {
        if base[d] <= 0.0 {
            return Err(physics(
                Error::NonPositive { name: "separation", value: base[d] },
                &[("separation", d)],
            ));
        }
    }
    let points = sweep_points(cfg, &base);
    let rows = exec::try_map(&points, |p| newtonian_row(p, k)).map_err(|e| physics(e, NEWTONIAN_NAMES))?;
    let base_row = newtonian_row(&base, k).map_err(|e| physics(e, NEWTONIAN_NAMES))?;
    let mut metrics = BTreeMap::new();
    insert_row_metrics(&mut metrics, NEWTONIAN_COLUMNS, &base_row);
    let period = negativity_period(&newtonian_setup(&base).map_err(|e| physics(e, NEWTONIAN_NAMES))?, k)
        .map_err(|e| physics(e, NEWTONIAN_NAMES))?;
    metrics.insert("negativity_period".into(), period);
    let notes = vec!["static limit: branch phases G m1 m2 T / (hbar d), equal-weight superposition".to_string()];
    let inputs = used_inputs(cfg, &["model", "m1", "m2", "duration", "d_pp", "d_pm", "d_mp", "d_mm"]);
    finish(cfg, inputs, NEWTONIAN_COLUMNS.to_vec(), rows, metrics, notes)
}

// ---------------------------------------------------------------- sagnac

const SAGNAC_COLUMNS: &[Column] = &[
    col("omega1", "rad/s", "input"),
    col("omega2", "rad/s", "input"),
    col("p1", "1", "input |c1|^2"),
    col("phase1", "rad", "sagnac::sagnac_phase"),
    col("phase2", "rad", "sagnac::sagnac_phase"),
    col("overlap", "1", "sagnac::branch_overlap"),
    col("entropy_bits", "bit", "sagnac::joint_state + rotor_particle_entanglement"),
    col("provenance", "", "operations behind the row"),
];

const SAGNAC_NAMES: &[(&str, &str)] = &[
    ("omega1", "omega1"),
    ("omega2", "omega2"),
    ("area", "area"),
    ("mass", "mass"),
    ("rotor amplitudes", "p1"),
    ("p1", "p1"),
];

fn sagnac_row(p: &Params, k: &Constants) -> Result<Vec<Cell>, Error> {
    let p1 = p["p1"];
    if !(0.0..=1.0).contains(&p1) {
        return Err(Error::NonFinite { name: "p1", value: p1 });
    }
    let c1 = Complex64::new(p1.sqrt(), 0.0);
    let c2 = Complex64::from_polar((1.0 - p1).sqrt(), p["relative_phase"]);
    let s = SagnacScenario::new(p["omega1"], p["omega2"], c1, c2, p["area"], p["mass"])?;
    let phase1 = sagnac_phase(s.omega1, s.area, s.mass, k)?;
    let phase2 = sagnac_phase(s.omega2, s.area, s.mass, k)?;
    let entropy = rotor_particle_entanglement(&joint_state(&s, k)?)?;
    Ok(vec![
        Cell::Num(s.omega1),
        Cell::Num(s.omega2),
        Cell::Num(p1),
        Cell::Num(phase1),
        Cell::Num(phase2),
        Cell::Num(branch_overlap(phase1, phase2)),
        Cell::Num(entropy),
        Cell::Text("sagnac::{sagnac_phase;joint_state;rotor_particle_entanglement}".to_string()),
    ])
}

fn run_sagnac(cfg: &ScenarioConfig, k: &Constants) -> Result<Outcome> {
    let base = resolve(cfg, SAGNAC_PARAMS)?;
    let points = sweep_points(cfg, &base);
    let rows = exec::try_map(&points, |p| sagnac_row(p, k)).map_err(|e| physics(e, SAGNAC_NAMES))?;
    let base_row = sagnac_row(&base, k).map_err(|e| physics(e, SAGNAC_NAMES))?;
    let mut metrics = BTreeMap::new();
    insert_row_metrics(&mut metrics, SAGNAC_COLUMNS, &base_row);
    metrics.insert("phase_difference".into(), num(&base_row[4]) - num(&base_row[3]));
    let notes = vec![
        "toy model: matter-wave phase 4 m A omega / hbar, rotor states idealized as orthogonal".to_string(),
        "c1 = sqrt(p1), c2 = sqrt(1 - p1) exp(i relative_phase)".to_string(),
    ];
    let inputs = used_inputs(cfg, &["omega1", "omega2", "p1", "relative_phase", "area", "mass"]);
    finish(cfg, inputs, SAGNAC_COLUMNS.to_vec(), rows, metrics, notes)
}
