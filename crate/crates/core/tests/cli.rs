use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use aous::format::{parse_matrix, to_json};
use aous::HermitianMatrix;
use serde_json::Value;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_aous"));
    c.env_remove("AOUS_TOL");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn write(dir: &Path, name: &str, h: &HermitianMatrix) -> PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, to_json(h)).unwrap();
    path
}

fn structured(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("structured output is JSON")
}

fn rows(r: &[&[f64]]) -> HermitianMatrix {
    HermitianMatrix::from_real_rows(r).unwrap()
}

#[test]
fn spectral_decompose_meets_epsilon() {
    let dir = tempfile::tempdir().unwrap();
    let v = write(dir.path(), "v.json", &HermitianMatrix::diag(&[2.0, -1.0, 0.5]));
    let out = run(&[
        "--format",
        "structured",
        "spectral-decompose",
        "--epsilon",
        "0.5",
        v.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc = structured(&out);
    let err = doc["result"]["error"].as_f64().unwrap();
    assert!(err < 0.5, "error {err}");
    assert_eq!(doc["verdict"], Value::Bool(true));
}

#[test]
fn check_compat_on_noncommuting_pair_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(dir.path(), "p.json", &rows(&[&[0.5, 0.5], &[0.5, 0.5]]));
    let q = write(dir.path(), "q.json", &HermitianMatrix::diag(&[1.0, 0.0]));
    let out = run(&[
        "--format",
        "structured",
        "check-compat",
        p.to_str().unwrap(),
        q.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
    let r = structured(&out)["residuals"]["residual"].as_f64().unwrap();
    assert!((r - (2f64.sqrt() - 1.0)).abs() < 1e-9, "residual {r}");
}

#[test]
fn compatible_pair_exits_zero() {
    let dir = tempfile::tempdir().unwrap();
    let a = write(dir.path(), "a.json", &HermitianMatrix::diag(&[1.0, 0.3]));
    let b = write(dir.path(), "b.json", &HermitianMatrix::diag(&[0.4, 0.0]));
    let out = run(&["check-compat", a.to_str().unwrap(), b.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn envelope_has_the_documented_keys() {
    let out = run(&["--format", "structured", "abs", "--recipe", "random-hermitian:3:7"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = structured(&out);
    for key in ["command", "inputs_digest", "verdict", "residuals", "timings", "result"] {
        assert!(doc.get(key).is_some(), "missing {key}");
    }
    assert_eq!(doc["command"], "abs");
    assert_eq!(doc["inputs_digest"].as_str().unwrap().len(), 64);
}

#[test]
fn matrix_output_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("abs.json");
    let out = run(&[
        "abs",
        "--recipe",
        "random-hermitian:4:11",
        "-o",
        out_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&out_path).unwrap();
    let m = parse_matrix(&text).unwrap();
    assert_eq!(to_json(&m), text.trim_end());

    // the written matrix is a valid input and |(|a|)| = |a|
    let again = run(&["abs", out_path.to_str().unwrap()]);
    assert_eq!(again.status.code(), Some(0));
    let m2 = parse_matrix(std::str::from_utf8(&again.stdout).unwrap()).unwrap();
    assert!((&m2 - &m).frobenius_norm() < 1e-10);
}

#[test]
fn malformed_input_exits_two_with_location() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(&path, "{\"dim\": 2,\n \"re\": [[1, 0], [0, 1]\n").unwrap();
    let out = run(&["abs", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line"), "stderr: {err}");
}

#[test]
fn non_hermitian_input_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("nh.json");
    std::fs::write(&path, r#"{"dim":2,"re":[[1,2],[0,1]],"im":[[0,0],[0,0]]}"#).unwrap();
    let out = run(&["abs", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["no-such-command"]).status.code(), Some(2));
    assert_eq!(
        run(&["spectral-decompose", "--recipe", "random-hermitian:2:1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(run(&["search-cx", "nonsense"]).status.code(), Some(2));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn tolerance_env_var_sets_atol() {
    let out = bin()
        .env("AOUS_TOL", "0.25")
        .args([
            "--format",
            "structured",
            "check-orth",
            "--recipe",
            "random-psd:2:1",
            "--recipe",
            "random-psd:2:2",
        ])
        .output()
        .unwrap();
    let thr = structured(&out)["residuals"]["threshold"].as_f64().unwrap();
    assert!(thr >= 0.25, "threshold {thr}");

    let bad = bin()
        .env("AOUS_TOL", "abc")
        .args(["abs", "--recipe", "random-hermitian:2:1"])
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn flag_overrides_env() {
    let out = bin()
        .env("AOUS_TOL", "0.25")
        .args([
            "--atol",
            "1e-6",
            "--format",
            "structured",
            "check-orth",
            "--recipe",
            "random-psd:2:1",
            "--recipe",
            "random-psd:2:2",
        ])
        .output()
        .unwrap();
    let thr = structured(&out)["residuals"]["threshold"].as_f64().unwrap();
    assert!(thr < 0.25, "threshold {thr}");
}

#[test]
fn search_cx_reports_found_and_exhausted() {
    let found = run(&[
        "--format",
        "structured",
        "search-cx",
        "triangle-inequality",
        "--trials",
        "200",
    ]);
    assert_eq!(found.status.code(), Some(0));
    let doc = structured(&found);
    assert_eq!(doc["result"]["status"], "found");

    let none = run(&[
        "--format",
        "structured",
        "search-cx",
        "triangle-inequality",
        "--trials",
        "200",
        "--context",
        "diagonal-lattice:4",
    ]);
    let doc = structured(&none);
    assert_eq!(doc["result"]["status"], "exhausted");
    assert_eq!(doc["result"]["witnesses"].as_array().unwrap().len(), 0);
}

#[test]
fn verify_single_case() {
    let out = run(&[
        "verify",
        "prop-13",
        "--trials",
        "50",
        "--seed",
        "7",
        "--context",
        "matrix-infty:3",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    assert_eq!(run(&["verify", "no-such-case"]).status.code(), Some(2));
}

#[test]
fn verify_all_seed_zero_passes() {
    let out = run(&["verify", "all", "--seed", "0"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
}

#[test]
fn verify_is_deterministic() {
    let args = [
        "--format",
        "structured",
        "verify",
        "thm-001",
        "--trials",
        "40",
        "--seed",
        "3",
    ];
    let strip = |out: Output| {
        let mut v = structured(&out);
        v["timings"] = Value::Null;
        fn zero(v: &mut Value) {
            match v {
                Value::Object(m) => {
                    for (k, x) in m.iter_mut() {
                        if k.contains("wall") {
                            *x = Value::Null;
                        } else {
                            zero(x);
                        }
                    }
                }
                Value::Array(a) => a.iter_mut().for_each(zero),
                _ => {}
            }
        }
        zero(&mut v);
        v
    };
    assert_eq!(strip(run(&args)), strip(run(&args)));
}
