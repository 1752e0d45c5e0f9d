use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_sendov-lab"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn write(dir: &TempDir, name: &str, body: &str) -> String {
    let path = dir.path().join(name);
    fs::write(&path, body).unwrap();
    path.to_str().unwrap().to_string()
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn check_roots_file() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "p.json", r#"{"roots": [[1, 0], [-1, 0]]}"#);
    let out = run(&["check", &f]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    let report = &v["verdict"]["report"];
    assert_eq!(report["separation_r"], 1.0);
    assert_eq!(report["theorem_applies"], false);
    assert_eq!(
        report["verdict_per_root"],
        serde_json::json!(["marginal", "marginal"])
    );
    assert_eq!(v["structural"]["gauss_lucas"]["passed"], true);
}

#[test]
fn check_coeffs_file() {
    let dir = TempDir::new().unwrap();
    // z^3 - z
    let f = write(
        &dir,
        "p.json",
        r#"{"coeffs": [[0, 0], [-1, 0], [0, 0], [1, 0]], "monic": true}"#,
    );
    let out = run(&["check", &f]);
    assert_eq!(out.status.code(), Some(0));
    let report = &stdout_json(&out)["verdict"]["report"];
    assert_eq!(report["theorem_applies"], true);
    let r = report["separation_r"].as_f64().unwrap();
    assert!((r - 1.0 / 3.0).abs() < 1e-9);
}

#[test]
fn bad_inputs_exit_2() {
    let dir = TempDir::new().unwrap();
    let outside = write(&dir, "out.json", r#"{"roots": [[1.5, 0], [0, 0]]}"#);
    let garbage = write(&dir, "bad.json", "{ not json");
    let repeated = write(&dir, "rep.json", r#"{"roots": [[0.5, 0], [0.5, 0]]}"#);
    for f in [&outside, &garbage, &repeated] {
        let out = run(&["check", f]);
        assert_eq!(out.status.code(), Some(2), "{f}");
        assert!(String::from_utf8_lossy(&out.stderr).contains("error"));
    }
    assert_eq!(run(&["check", "/no/such/file.json"]).status.code(), Some(2));
    assert_eq!(run(&["thresholds", "--n", "1"]).status.code(), Some(2));
    assert_eq!(
        run(&["thresholds", "--n", "3", "--r", "0.9"]).status.code(),
        Some(2)
    );
    assert_eq!(run(&["no-such-command"]).status.code(), Some(2));
}

#[test]
fn thresholds_table() {
    let out = run(&["thresholds", "--n", "3", "--r", "0.5773502691896258"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    let a_n = v["at_r"]["A_n"].as_f64().unwrap();
    assert!((a_n - 0.012_891_711_531_604_294).abs() < 1e-15);
    assert!((v["table"]["a_n"].as_f64().unwrap() - 0.732_050_807_568_877_3).abs() < 1e-15);

    let plain = stdout_json(&run(&["thresholds", "--n", "6"]));
    assert!(plain["at_r"].is_null());
}

#[test]
fn audit_root_with_zero_constant_term() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "p.json", r#"{"roots": [[-1, 0], [0, 0], [1, 0]]}"#);
    // canonical order is -1, 0, 1; root 3 is z = 1
    let out = run(&["audit", &f, "--root", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["audit"]["overall"], "hypothesis_empty");
    assert_eq!(v["zero_constant"]["overall"], "hypothesis_empty");
    let steps = v["audit"]["steps"].as_array().unwrap();
    assert!(steps
        .iter()
        .all(|s| s["name"].is_string() && s["inputs"].is_object()));

    // root 1 is z = -1, rotated onto +1
    let out = run(&["audit", &f, "--root", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let phase = stdout_json(&out)["phase"].as_f64().unwrap();
    assert!((phase - std::f64::consts::PI).abs() < 1e-15);

    assert_eq!(run(&["audit", &f, "--root", "0"]).status.code(), Some(2));
    assert_eq!(run(&["audit", &f, "--root", "4"]).status.code(), Some(2));
    // the zero root cannot be rotated
    assert_eq!(run(&["audit", &f, "--root", "2"]).status.code(), Some(2));
}

fn search(dir: &Path, name: &str, extra: &[&str], threads: &str) -> (Option<i32>, Vec<u8>) {
    let path = dir.join(name);
    let out = bin()
        .args([
            "search",
            "--n-min",
            "2",
            "--n-max",
            "5",
            "--samples",
            "12",
            "--seed",
            "7",
        ])
        .args(extra)
        .arg("--out")
        .arg(&path)
        .env("SENDOV_LAB_THREADS", threads)
        .output()
        .unwrap();
    (out.status.code(), fs::read(path).unwrap())
}

#[test]
fn search_reports_are_reproducible() {
    let dir = TempDir::new().unwrap();
    let (c1, json1) = search(dir.path(), "a.json", &[], "1");
    let (c2, json2) = search(dir.path(), "b.json", &[], "4");
    let (c3, json3) = search(dir.path(), "c.json", &[], "0");
    assert_eq!((c1, c2, c3), (Some(0), Some(0), Some(0)));
    assert_eq!(json1, json2);
    assert_eq!(json1, json3);

    let v: Value = serde_json::from_slice(&json1).unwrap();
    assert_eq!(v["records"].as_array().unwrap().len(), 4 * 12);
    assert_eq!(v["summary"]["fails"], 0);
    assert_eq!(v["summary"]["roots"], 12 * (2 + 3 + 4 + 5));
    assert_eq!(v["config"]["seed"], 7);

    let (c4, csv1) = search(dir.path(), "a.csv", &["--format", "csv"], "2");
    let (_, csv2) = search(dir.path(), "b.csv", &["--format", "csv"], "3");
    assert_eq!(c4, Some(0));
    assert_eq!(csv1, csv2);
    let text = String::from_utf8(csv1).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "degree,seed,root_re,root_im,nearest_critical_distance,r,p0_abs,A_n,applies,verdict"
    );
    assert_eq!(lines.count(), 12 * (2 + 3 + 4 + 5));
}

#[test]
fn search_to_stdout_and_bad_config() {
    let out = run(&["search", "--n-min", "3", "--n-max", "3", "--samples", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_json(&out)["records"].as_array().unwrap().len(), 2);

    assert_eq!(
        run(&["search", "--n-min", "5", "--n-max", "4"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["search", "--n-min", "1", "--n-max", "4"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(run(&["search", "--samples", "0"]).status.code(), Some(2));
    assert_eq!(run(&["search", "--min-sep", "0"]).status.code(), Some(2));
    let dir = TempDir::new().unwrap();
    let unwritable = dir.path().join("missing").join("r.json");
    let out = run(&[
        "search",
        "--n-max",
        "3",
        "--samples",
        "1",
        "--out",
        unwritable.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn lemma_grid_is_clean() {
    let out = run(&["lemma-grid", "--n-min", "3", "--n-max", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["violations"], 0);
    assert!(!v["checks"].as_array().unwrap().is_empty());
    assert_eq!(
        run(&["lemma-grid", "--n-min", "6", "--n-max", "5"])
            .status
            .code(),
        Some(2)
    );
}
