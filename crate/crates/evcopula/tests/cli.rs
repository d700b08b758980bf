//! End-to-end tests of the `evcopula` binary: exit-code contract, file
//! round trips, and byte-level determinism.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_evcopula"))
}

fn write(dir: &Path, name: &str, contents: &str) -> std::path::PathBuf {
    let path = dir.join(name);
    fs::write(&path, contents).unwrap();
    path
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

const COMONOTONE_2D: &str =
    r#"{"d": 2, "symmetric": true, "atoms": [{"q": [0.5, 0.5], "p": 1.0}]}"#;

const BC2_THIRDS_Q: &str =
    r#"{"atoms": [{"q": 0.3333333333333333, "p": 0.5}, {"q": 0.6666666666666666, "p": 0.5}]}"#;

const CA_HALF_CONDIID: &str = r#"{"b": 0.0, "lambda": [{"w": 1.0, "F": {"atoms": [{"x": 0.0, "p": 0.5}, {"x": 2.0, "p": 0.5}]}}]}"#;

const FIGURE_MEASURE: &str = r#"{"d": 3, "symmetric": true, "atoms": [
  {"q": [0.16666666666666666, 0.3333333333333333, 0.5], "p": 0.16666666666666666},
  {"q": [0.16666666666666666, 0.5, 0.3333333333333333], "p": 0.16666666666666666},
  {"q": [0.3333333333333333, 0.16666666666666666, 0.5], "p": 0.16666666666666666},
  {"q": [0.3333333333333333, 0.5, 0.16666666666666666], "p": 0.16666666666666666},
  {"q": [0.5, 0.16666666666666666, 0.3333333333333333], "p": 0.16666666666666666},
  {"q": [0.5, 0.3333333333333333, 0.16666666666666666], "p": 0.16666666666666666}]}"#;

#[test]
fn eval_copula_of_comonotone_measure() {
    let dir = tempfile::tempdir().unwrap();
    let model = write(dir.path(), "m.json", COMONOTONE_2D);
    let out = bin()
        .arg("eval")
        .arg(&model)
        .args(["--u", "0.5,0.8"])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "C = 0.500000000000000");
}

#[test]
fn eval_dependence_function_from_q_file() {
    let dir = tempfile::tempdir().unwrap();
    let model = write(dir.path(), "q.json", BC2_THIRDS_Q);
    let out = bin()
        .arg("eval")
        .arg(&model)
        .args(["--x", "0.5"])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "A = 0.666666666666667");
}

#[test]
fn eval_stdf_of_condiid_model() {
    let dir = tempfile::tempdir().unwrap();
    let model = write(dir.path(), "spec.json", CA_HALF_CONDIID);
    let out = bin()
        .arg("eval")
        .arg(&model)
        .args(["--x", "1,1"])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "ell = 1.500000000000000");
}

#[test]
fn check_fails_on_boundary_family_with_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    // Q of the symmetric two-atom dependence function at q = 1/4
    let model = write(
        dir.path(),
        "q.json",
        r#"{"atoms": [{"q": 0.25, "p": 0.5}, {"q": 0.75, "p": 0.5}]}"#,
    );
    let out = bin().arg("check").arg(&model).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    let verdict: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(verdict["pass"], serde_json::Value::Bool(false));
    assert!((verdict["witness_q"].as_f64().unwrap() - 0.25).abs() < 1e-12);
}

#[test]
fn check_passes_on_unit_mean_distribution() {
    let dir = tempfile::tempdir().unwrap();
    let model = write(
        dir.path(),
        "f.json",
        r#"{"atoms": [{"x": 0.0, "p": 0.5}, {"x": 2.0, "p": 0.5}]}"#,
    );
    let out = bin().arg("check").arg(&model).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let verdict: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(verdict["pass"], serde_json::Value::Bool(true));
}

#[test]
fn check_rejects_asymmetric_dependence_function_with_exit_three() {
    let dir = tempfile::tempdir().unwrap();
    // kinks of the asymmetric two-atom function A_{0, 2/3}
    let model = write(
        dir.path(),
        "a.json",
        r#"{"kinks": [0.0, 0.3333333333333333, 1.0], "values": [1.0, 0.75, 1.0]}"#,
    );
    let out = bin().arg("check").arg(&model).output().unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn malformed_json_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let model = write(dir.path(), "bad.json", "{not json");
    let out = bin()
        .arg("eval")
        .arg(&model)
        .args(["--x", "0.5"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let model = write(dir.path(), "unknown.json", r#"{"zebra": 1}"#);
    let out = bin()
        .arg("eval")
        .arg(&model)
        .args(["--x", "0.5"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn invariant_violation_exits_three() {
    let dir = tempfile::tempdir().unwrap();
    // barycenter off: single atom away from the center
    let model = write(
        dir.path(),
        "bad_measure.json",
        r#"{"d": 2, "symmetric": false, "atoms": [{"q": [0.7, 0.3], "p": 1.0}]}"#,
    );
    let out = bin()
        .arg("eval")
        .arg(&model)
        .args(["--x", "1,1"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn missing_file_exits_five() {
    let out = bin()
        .arg("eval")
        .arg("/nonexistent/model.json")
        .args(["--x", "0.5"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(5));
}

#[test]
fn simulate_comonotone_writes_identical_coordinate_rows() {
    let dir = tempfile::tempdir().unwrap();
    let model = write(dir.path(), "m.json", COMONOTONE_2D);
    let csv = dir.path().join("rows.csv");
    let out = bin()
        .arg("simulate")
        .arg(&model)
        .args(["--n", "3", "--seed", "7", "--out"])
        .arg(&csv)
        .output()
        .unwrap();
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let text = fs::read_to_string(&csv).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 4);
    assert_eq!(lines[0], "u1,u2");
    for line in &lines[1..] {
        let fields: Vec<&str> = line.split(',').collect();
        assert_eq!(fields[0], fields[1]);
    }
    // sidecar metadata
    let meta: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(dir.path().join("rows.meta.json")).unwrap())
            .unwrap();
    assert_eq!(meta["seed"], 7);
    assert_eq!(meta["n"], 3);
    assert_eq!(meta["d"], 2);
    assert_eq!(meta["generator"], "chacha12");

    // determinism: the same invocation reproduces the same bytes
    let csv2 = dir.path().join("rows2.csv");
    bin()
        .arg("simulate")
        .arg(&model)
        .args(["--n", "3", "--seed", "7", "--out"])
        .arg(&csv2)
        .output()
        .unwrap();
    assert_eq!(text, fs::read_to_string(&csv2).unwrap());
}

#[test]
fn simulate_condiid_model_writes_csv() {
    let dir = tempfile::tempdir().unwrap();
    let model = write(dir.path(), "spec.json", CA_HALF_CONDIID);
    let csv = dir.path().join("ca.csv");
    let out = bin()
        .arg("simulate")
        .arg(&model)
        .args(["--n", "10", "--dim", "2", "--out"])
        .arg(&csv)
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(fs::read_to_string(&csv).unwrap().lines().count(), 11);
}

#[test]
fn margin_of_figure_measure_has_six_atoms() {
    let dir = tempfile::tempdir().unwrap();
    let model = write(dir.path(), "m3.json", FIGURE_MEASURE);
    let out = bin()
        .arg("margin")
        .arg(&model)
        .args(["--dim", "2"])
        .output()
        .unwrap();
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["d"], 2);
    assert_eq!(doc["atoms"].as_array().unwrap().len(), 6);
}

#[test]
fn decompose_comonotone_dependence_function() {
    let dir = tempfile::tempdir().unwrap();
    let model = write(
        dir.path(),
        "a.json",
        r#"{"kinks": [0.0, 0.5, 1.0], "values": [1.0, 0.5, 1.0]}"#,
    );
    let out = bin().arg("decompose").arg(&model).output().unwrap();
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let atoms = doc["atoms"].as_array().unwrap();
    assert_eq!(atoms.len(), 1);
    assert!((atoms[0]["q"].as_f64().unwrap() - 0.5).abs() < 1e-12);
    assert!((atoms[0]["mass"].as_f64().unwrap() - 1.0).abs() < 1e-12);
}

#[test]
fn estimate_reads_simulated_batch() {
    let dir = tempfile::tempdir().unwrap();
    let model = write(dir.path(), "m.json", COMONOTONE_2D);
    let csv = dir.path().join("batch.csv");
    bin()
        .arg("simulate")
        .arg(&model)
        .args(["--n", "5000", "--out"])
        .arg(&csv)
        .output()
        .unwrap();
    let out = bin()
        .arg("estimate")
        .arg(&csv)
        .args(["--grid", "3"])
        .output()
        .unwrap();
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "x,A_hat_raw,A_hat_clipped");
    assert_eq!(lines.len(), 4);
    // comonotone batch: clipped estimate near max(x, 1-x)
    let mid: Vec<&str> = lines[2].split(',').collect();
    let clipped: f64 = mid[2].parse().unwrap();
    assert!((clipped - 0.5).abs() < 0.02);
}

#[test]
fn figure_is_byte_identical_across_runs() {
    let dir = tempfile::tempdir().unwrap();
    let run = |prefix: &Path| {
        let out = bin()
            .arg("figure")
            .args(["--n", "400", "--format", "svg", "--out"])
            .arg(prefix)
            .output()
            .unwrap();
        assert!(
            out.status.success(),
            "{}",
            String::from_utf8_lossy(&out.stderr)
        );
    };
    run(&dir.path().join("a"));
    run(&dir.path().join("b"));
    for suffix in ["_trivariate.csv", "_bivariate.csv", "_paths.json", ".svg"] {
        let a = fs::read(dir.path().join(format!("a{suffix}"))).unwrap();
        let b = fs::read(dir.path().join(format!("b{suffix}"))).unwrap();
        assert_eq!(a, b, "mismatch in {suffix}");
    }
    // a different seed moves the points but keeps the six ratios
    let out = bin()
        .arg("figure")
        .args(["--n", "400", "--seed", "99", "--out"])
        .arg(dir.path().join("c"))
        .output()
        .unwrap();
    assert!(out.status.success());
    let a: Vec<serde_json::Value> =
        serde_json::from_str(&fs::read_to_string(dir.path().join("a_paths.json")).unwrap())
            .unwrap();
    let c: Vec<serde_json::Value> =
        serde_json::from_str(&fs::read_to_string(dir.path().join("c_paths.json")).unwrap())
            .unwrap();
    assert_eq!(a.len(), 6);
    assert_eq!(c.len(), 6);
    for (x, y) in a.iter().zip(&c) {
        let rx = x["ratio"].as_f64().unwrap();
        let ry = y["ratio"].as_f64().unwrap();
        assert!((rx - ry).abs() < 1e-9);
    }
    assert_ne!(
        fs::read(dir.path().join("a_bivariate.csv")).unwrap(),
        fs::read(dir.path().join("c_bivariate.csv")).unwrap()
    );
}

#[test]
fn figure_single_point_has_no_clusters() {
    let dir = tempfile::tempdir().unwrap();
    let out = bin()
        .arg("figure")
        .args(["--n", "1", "--out"])
        .arg(dir.path().join("one"))
        .output()
        .unwrap();
    assert!(out.status.success());
    let paths: Vec<serde_json::Value> =
        serde_json::from_str(&fs::read_to_string(dir.path().join("one_paths.json")).unwrap())
            .unwrap();
    assert!(paths.is_empty());
}
