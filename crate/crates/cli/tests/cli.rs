//! End-to-end runs of the `gemwit` binary.

use std::path::Path;
use std::process::{Command, Output};

fn gemwit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gemwit"))
        .args(args)
        .env("RUST_LOG", "off")
        .output()
        .expect("binary runs")
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn read(p: &Path) -> String {
    std::fs::read_to_string(p).unwrap()
}

#[test]
fn witness_sweep_csv_peaks_near_revival() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().to_str().unwrap();
    let o = gemwit(&[
        "witness", "--out", out, "--set", "oracle=false", "--set", "sweep.param=omega_t", "--set", "sweep.min=0",
        "--set", "sweep.max=4 pi", "--set", "sweep.count=64",
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    let csv = read(&dir.path().join("witness.csv"));
    assert!(!csv.contains('\r'));
    let mut lines = csv.lines();
    let header: Vec<&str> = lines.next().unwrap().split(',').collect();
    assert_eq!(&header[..4], ["omega_t", "entangling_phase_rad", "negativity", "purity"]);
    let rows: Vec<Vec<f64>> = lines
        .map(|l| l.split(',').take(4).map(|x| x.parse().unwrap()).collect())
        .collect();
    assert_eq!(rows.len(), 64);
    // Largest negativity among points within the first revival window.
    let tau = std::f64::consts::TAU;
    let best = rows
        .iter()
        .filter(|r| (r[0] - tau).abs() < 0.5 * std::f64::consts::PI)
        .max_by(|a, b| a[2].total_cmp(&b[2]))
        .unwrap();
    assert!((best[0] - tau).abs() < 0.2, "peak at {}", best[0]);
    assert!((best[2] - 0.12434).abs() < 2e-3, "peak {}", best[2]);
}

#[test]
fn field_report_shows_both_conventions_and_claims() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("f.toml");
    std::fs::write(
        &cfg,
        r#"name = "f"
kind = "field"
[params]
mass = "1e-12 kg"
separation = "1e-6 m"
speed = "1e6 m/s"
[[claims]]
id = "yocto"
quote = "of the order of a yoctoNewton"
metric = "f_electric_newtonian"
rule = "order_of"
target = 1e-24
max_decades = 3.0
[[claims]]
id = "three-orders"
quote = "three orders of magnitude smaller"
metric = "force_ratio"
rule = "upper_bound"
bound = 1e-3
"#,
    )
    .unwrap();
    let o = gemwit(&["field", "--config", cfg.to_str().unwrap(), "--out", dir.path().to_str().unwrap()]);
    assert!(o.status.success(), "{}", stderr(&o));
    let report = read(&dir.path().join("f.report.txt"));
    assert!(report.contains("f_electric_paper_literal = 8.387172739141742e-22"));
    assert!(report.contains("f_electric_newtonian = 6.6742"));
    assert!(report.contains("paper-literal: eps_G"));
    assert!(report.contains("maxwell-consistent: eps_G"));
    assert!(report.contains("claim yocto:"));
    assert!(report.contains("claim three-orders:"));
    assert_eq!(report.matches("; agree").count(), 2);
}

#[test]
fn malformed_unit_exits_2_naming_field() {
    let dir = tempfile::tempdir().unwrap();
    let o = gemwit(&["field", "--out", dir.path().to_str().unwrap(), "--set", "mass=1e-12 kgg"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("params.mass"), "{}", stderr(&o));
}

#[test]
fn superluminal_speed_exits_3_naming_field() {
    let dir = tempfile::tempdir().unwrap();
    let o = gemwit(&["field", "--out", dir.path().to_str().unwrap(), "--set", "speed=4e8 m/s"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("params.speed"), "{}", stderr(&o));
}

#[test]
fn config_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().to_str().unwrap();
    let o = gemwit(&["field", "--out", out, "--convention", "newtonian"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("convention"));

    let cfg = dir.path().join("w.toml");
    std::fs::write(&cfg, "kind = \"witness\"\n").unwrap();
    let o = gemwit(&["field", "--config", cfg.to_str().unwrap(), "--out", out]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("kind"));

    let o = gemwit(&["sagnac", "--out", out, "--set", "sweep.param=p1", "--set", "sweep.min=0", "--set", "sweep.max=1", "--set", "sweep.count=1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("sweep.count"));

    let o = gemwit(&["examples", "--show", "nope"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn convention_flag_overrides_config() {
    let dir = tempfile::tempdir().unwrap();
    let o = gemwit(&["field", "--out", dir.path().to_str().unwrap(), "--convention", "paper-literal"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let csv = read(&dir.path().join("field.csv"));
    assert!(csv.lines().nth(1).unwrap().contains(",paper-literal,"));
}

#[test]
fn examples_list_show_export_run() {
    let o = gemwit(&["examples"]);
    assert!(o.status.success());
    let listing = String::from_utf8(o.stdout).unwrap();
    for name in ["micron-EM-unity", "nanogram-forces", "unity-scale", "witness-revival", "sagnac-maximal"] {
        assert!(listing.contains(name), "{name}");
    }
    assert_eq!(listing.lines().count(), 5);

    let o = gemwit(&["examples", "--show", "unity-scale"]);
    assert!(String::from_utf8(o.stdout).unwrap().contains("kind = \"uncertainty\""));

    let dir = tempfile::tempdir().unwrap();
    let export = dir.path().join("cfg");
    let o = gemwit(&["examples", "--export", export.to_str().unwrap()]);
    assert!(o.status.success());
    let out = dir.path().join("out");
    let o = gemwit(&["sagnac", "--config", export.join("sagnac-maximal.toml").to_str().unwrap(), "--out", out.to_str().unwrap()]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert!(out.join("sagnac-maximal.meta.json").exists());

    let o = gemwit(&["examples", "--run", "--out", out.to_str().unwrap()]);
    assert!(o.status.success(), "{}", stderr(&o));
}

#[test]
fn repeated_runs_are_byte_identical() {
    let a = tempfile::tempdir().unwrap();
    let b = tempfile::tempdir().unwrap();
    for d in [&a, &b] {
        let o = gemwit(&["uncertainty", "--out", d.path().to_str().unwrap(), "--set", "sweep.param=confinement",
            "--set", "sweep.min=1e-9 m", "--set", "sweep.max=1e-3 m", "--set", "sweep.count=50", "--set", "sweep.spacing=log"]);
        assert!(o.status.success(), "{}", stderr(&o));
    }
    for f in ["uncertainty.csv", "uncertainty.report.txt"] {
        assert_eq!(std::fs::read(a.path().join(f)).unwrap(), std::fs::read(b.path().join(f)).unwrap(), "{f}");
    }
}

#[test]
fn csv_rows_rederive_from_library() {
    use gemwit_core::quantities::{Constants, Dimension, Quantity};
    use gemwit_core::uncertainty::{em_product_bound, gem_product_bound};

    let dir = tempfile::tempdir().unwrap();
    let o = gemwit(&["examples", "--run", "--show", "micron-EM-unity", "--out", dir.path().to_str().unwrap()]);
    assert!(o.status.success(), "{}", stderr(&o));
    let csv = read(&dir.path().join("micron-EM-unity.csv"));
    let mut lines = csv.lines();
    let header: Vec<&str> = lines.next().unwrap().split(',').collect();
    let idx = |n: &str| header.iter().position(|h| *h == n).unwrap();
    let k = Constants::codata2018();
    for line in lines {
        let f: Vec<&str> = line.split(',').collect();
        let l = Quantity::scalar(f[idx("confinement")].parse().unwrap(), Dimension::LENGTH);
        let r = Quantity::scalar(f[idx("separation")].parse().unwrap(), Dimension::LENGTH);
        let em: f64 = f[idx("em_product")].parse().unwrap();
        let gem: f64 = f[idx("gem_product")].parse().unwrap();
        assert_eq!(em, em_product_bound(&l, &k).unwrap().si_numeric());
        assert_eq!(gem, gem_product_bound(&r, &l, &k).unwrap().si_numeric());
    }
}
