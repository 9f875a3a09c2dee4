use std::path::Path;
use std::process::{Command, Output};

use serde_json::json;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_levy-hedge"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn field(text: &str, key: &str) -> f64 {
    text.lines()
        .find_map(|l| l.strip_prefix(&format!("{key}: ")))
        .unwrap_or_else(|| panic!("no `{key}` in output:\n{text}"))
        .parse()
        .unwrap()
}

fn read_dir_sorted(dir: &Path) -> Vec<(String, Vec<u8>)> {
    let mut files: Vec<_> = std::fs::read_dir(dir)
        .unwrap()
        .map(|e| {
            let e = e.unwrap();
            (
                e.file_name().to_string_lossy().into_owned(),
                std::fs::read(e.path()).unwrap(),
            )
        })
        .collect();
    files.sort();
    files
}

fn write_config(dir: &Path, value: serde_json::Value) -> String {
    let path = dir.join("config.json");
    std::fs::write(&path, serde_json::to_vec_pretty(&value).unwrap()).unwrap();
    path.to_string_lossy().into_owned()
}

fn geometric(sigma: f64, beta: f64) -> serde_json::Value {
    json!({"initial_price": 100.0, "brownian_vol": sigma, "jump_exponent": beta})
}

fn scenario(mode: serde_json::Value, assets: Vec<serde_json::Value>) -> serde_json::Value {
    json!({
        "name": "custom",
        "measure": {"atoms": [
            {"location": 1.0, "intensity": 7.5},
            {"location": -1.0, "intensity": 7.5}
        ]},
        "contract": geometric(0.15, 0.25),
        "hedging_assets": assets,
        "grid": {"horizon": 1.0, "steps": 100},
        "n_paths": 10,
        "seed": 1,
        "hedge_mode": mode
    })
}

#[test]
fn single_asset_ratio_printed() {
    let o = run(&["hedge", "fig2a"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!((field(&text, "phi1") - 0.824_482_256_467_480_5).abs() < 1e-12);
    assert!((field(&text, "rho") - 0.999_203_904_554_806_8).abs() < 1e-12);
    assert!((field(&text, "theta0") - 82.448_225_646_748_05).abs() < 1e-9);
}

#[test]
fn contract_as_hedge_asset_is_perfect() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(
        dir.path(),
        json!({"schema_version": 1, "scenario": scenario(json!({"single": 0}), vec![geometric(0.15, 0.25)])}),
    );
    let o = run(&["hedge", "--config", &cfg]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let text = stdout(&o);
    assert!((field(&text, "phi1") - 1.0).abs() < 1e-12);
    assert!(field(&text, "delta_analytic").abs() < 1e-12);
}

#[test]
fn duplicated_assets_exit_degenerate() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(
        dir.path(),
        json!({"schema_version": 1, "scenario": scenario(json!("multi"), vec![geometric(0.2, 0.3), geometric(0.2, 0.3)])}),
    );
    let o = run(&["hedge", "--config", &cfg]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).contains("degenerate: true"));
}

#[test]
fn config_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(
        dir.path(),
        json!({"schema_version": 1, "builtin": "fig1", "extra": 1}),
    );
    assert_eq!(run(&["hedge", "--config", &cfg]).status.code(), Some(2));
    let cfg = write_config(dir.path(), json!({"schema_version": 2, "builtin": "fig1"}));
    assert_eq!(run(&["hedge", "--config", &cfg]).status.code(), Some(2));
    assert_eq!(run(&["hedge", "fig9"]).status.code(), Some(2));
    assert_eq!(
        run(&["simulate", "fig1", "--paths", "0"]).status.code(),
        Some(2)
    );
}

#[test]
fn unwritable_output_exits_five() {
    let dir = tempfile::tempdir().unwrap();
    let blocker = dir.path().join("file");
    std::fs::write(&blocker, b"x").unwrap();
    let o = run(&["figures", "fig1", "--out", blocker.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(5));
}

#[test]
fn figure_csv_schemas() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().to_str().unwrap();
    assert!(run(&["figures", "fig1", "fig3", "--out", out])
        .status
        .success());
    let fig1 = std::fs::read_to_string(dir.path().join("fig1.csv")).unwrap();
    assert!(fig1.starts_with("t,N_t,X_t,C,S1,S2\n"));
    assert_eq!(fig1.lines().count(), 1002);
    let fig3 = std::fs::read_to_string(dir.path().join("fig3.csv")).unwrap();
    let mut lines = fig3.lines();
    assert_eq!(lines.next(), Some("t,C,S1,S2,phi1,phi2,theta,V,dV"));
    assert!(lines.next().unwrap().ends_with(','));
    assert!(lines.all(|l| !l.ends_with(',') && l.split(',').count() == 9));
}

#[test]
fn reruns_are_byte_identical_across_thread_counts() {
    let a = tempfile::tempdir().unwrap();
    let b = tempfile::tempdir().unwrap();
    for (dir, threads) in [(&a, "1"), (&b, "4")] {
        let out = dir.path().to_str().unwrap();
        let o = bin()
            .args([
                "simulate", "fig3", "--paths", "64", "--steps", "250", "--out", out,
            ])
            .env("RAYON_NUM_THREADS", threads)
            .output()
            .unwrap();
        assert!(o.status.success());
        let o = bin()
            .args(["figures", "--out", out, "--paths", "8"])
            .env("RAYON_NUM_THREADS", threads)
            .output()
            .unwrap();
        assert!(o.status.success());
    }
    let (fa, fb) = (read_dir_sorted(a.path()), read_dir_sorted(b.path()));
    assert_eq!(fa.len(), 9);
    for ((na, ca), (nb, cb)) in fa.iter().zip(&fb) {
        assert_eq!(na, nb);
        if na == "effective_config.json" {
            continue;
        }
        assert!(ca == cb, "{na} differs");
    }
}

#[test]
fn effective_config_reproduces_run() {
    let first = tempfile::tempdir().unwrap();
    let second = tempfile::tempdir().unwrap();
    let o = run(&[
        "simulate",
        "fig2b",
        "--paths",
        "16",
        "--seed",
        "77",
        "--out",
        first.path().to_str().unwrap(),
    ]);
    assert!(o.status.success());
    let cfg = first.path().join("effective_config.json");
    let o = run(&[
        "simulate",
        "--config",
        cfg.to_str().unwrap(),
        "--out",
        second.path().to_str().unwrap(),
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    for name in ["hedge.csv", "market.csv", "paths.csv"] {
        let a = std::fs::read(first.path().join(name)).unwrap();
        let b = std::fs::read(second.path().join(name)).unwrap();
        assert!(a == b, "{name} differs");
    }
}

#[test]
fn verify_reports_per_property() {
    let o = run(&["verify", "completeness"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("PASS pure poisson single-asset hedge"));
    assert!(text.contains("PASS pure bernoulli two-asset hedge"));

    let o = run(&["verify", "ordering"]);
    assert!(o.status.success(), "{}", stdout(&o));
    assert!(stdout(&o).contains("PASS analytic ordering"));

    assert_eq!(run(&["verify", "nonsense"]).status.code(), Some(2));
}
