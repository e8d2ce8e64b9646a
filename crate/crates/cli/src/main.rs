use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use gemwit_cli::{bundled, execute, load_config, load_config_str, CliError, Override, ScenarioKind};

#[derive(Parser)]
#[command(name = "gemwit", version, about = "GEM fields, uncertainty bounds and entanglement witnesses")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct RunArgs {
    /// Scenario config (TOML); defaults apply when omitted.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Output directory for the CSV, report and metadata files.
    #[arg(long, default_value = "out")]
    out: PathBuf,
    /// Override a config value, e.g. `--set mass="2e-12 kg"` or `--set sweep.count=16`.
    #[arg(long = "set", value_name = "KEY=VALUE")]
    set: Vec<String>,
    /// GEM convention: paper-literal or maxwell-consistent.
    #[arg(long)]
    convention: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Electric-like and magnetic-like fields and forces.
    Field(RunArgs),
    /// Confinement-scale uncertainty bounds.
    Uncertainty(RunArgs),
    /// Entanglement witness for two masses coupled to a field mode.
    Witness(RunArgs),
    /// Rotor-particle entanglement in the Sagnac toy model.
    Sagnac(RunArgs),
    /// List, show, export or run the bundled example scenarios.
    Examples {
        /// Print one example's config.
        #[arg(long)]
        show: Option<String>,
        /// Run every example (or only `--show`'s) into `--out`.
        #[arg(long)]
        run: bool,
        /// Write the example configs into this directory.
        #[arg(long)]
        export: Option<PathBuf>,
        #[arg(long, default_value = "out")]
        out: PathBuf,
    },
}

fn run_kind(kind: ScenarioKind, args: RunArgs) -> Result<(), CliError> {
    let overrides = args
        .set
        .iter()
        .map(|s| s.parse::<Override>())
        .collect::<Result<Vec<_>, _>>()?;
    let cfg = load_config(args.config.as_deref(), Some(kind), &overrides, args.convention.as_deref())?;
    let (outcome, art) = execute(&cfg, &args.out)?;
    println!("{}: {} rows", cfg.name, outcome.rows.len());
    for c in &outcome.claims {
        println!("  claim {}: {} (decade gap {:+.4})", c.id, c.verdict(), c.decade_gap);
    }
    println!("wrote {}", art.csv.display());
    println!("wrote {}", art.report.display());
    println!("wrote {}", art.metadata.display());
    Ok(())
}

fn examples(show: Option<String>, run: bool, export: Option<PathBuf>, out: PathBuf) -> Result<(), CliError> {
    let selected: Vec<&bundled::Example> = match &show {
        Some(name) => vec![bundled::find(name)?],
        None => bundled::EXAMPLES.iter().collect(),
    };
    if let Some(dir) = export {
        std::fs::create_dir_all(&dir).map_err(|e| CliError::io(dir.display().to_string(), e))?;
        for ex in &selected {
            let path = dir.join(format!("{}.toml", ex.name));
            std::fs::write(&path, ex.toml).map_err(|e| CliError::io(path.display().to_string(), e))?;
            println!("wrote {}", path.display());
        }
    } else if run {
        for ex in &selected {
            let cfg = load_config_str(ex.toml, None, &[], None)?;
            let (outcome, art) = execute(&cfg, &out)?;
            let agree = outcome.claims.iter().filter(|c| c.agrees).count();
            println!("{}: {}/{} claims agree, {}", ex.name, agree, outcome.claims.len(), art.report.display());
        }
    } else if show.is_some() {
        print!("{}", selected[0].toml);
    } else {
        for ex in &selected {
            println!("{:<18} {}", ex.name, ex.summary);
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Field(a) => run_kind(ScenarioKind::Field, a),
        Command::Uncertainty(a) => run_kind(ScenarioKind::Uncertainty, a),
        Command::Witness(a) => run_kind(ScenarioKind::Witness, a),
        Command::Sagnac(a) => run_kind(ScenarioKind::Sagnac, a),
        Command::Examples { show, run, export, out } => examples(show, run, export, out),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
