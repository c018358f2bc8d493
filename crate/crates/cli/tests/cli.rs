use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn manifest(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../manifests")
        .join(name)
        .display()
        .to_string()
}

fn levikit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_levikit")).args(args).output().unwrap()
}

fn json_of(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

fn keys_sorted(v: &Value) -> bool {
    match v {
        Value::Object(map) => {
            let keys: Vec<&String> = map.keys().collect();
            keys.windows(2).all(|w| w[0] < w[1]) && map.values().all(keys_sorted)
        }
        Value::Array(items) => items.iter().all(keys_sorted),
        _ => true,
    }
}

#[test]
fn sphere_report() {
    let out = levikit(&["analyze", &manifest("sphere.json"), "--json"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = String::from_utf8(out.stdout.clone()).unwrap();
    let v = json_of(&out);
    assert!(keys_sorted(&v));
    assert!(text.find("\"command\"").unwrap() < text.find("\"result\"").unwrap());
    assert!(v["input_digest"].as_str().unwrap().starts_with("sha256:"));
    assert_eq!(v["result"]["signature"], serde_json::json!([1, 0, 0]));
}

#[test]
fn text_output_is_default() {
    let out = levikit(&["analyze", &manifest("sphere.json")]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("command: analyze"));
    assert!(serde_json::from_str::<Value>(&text).is_err());
}

#[test]
fn point_flag_overrides_manifest() {
    let out = levikit(&["analyze", &manifest("sphere.json"), "--point", "3/5,4/5*i", "--json"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert_eq!(json_of(&out)["result"]["point"], serde_json::json!(["3/5", "4/5*i"]));

    let off = levikit(&["analyze", &manifest("sphere.json"), "--point", "1,1"]);
    assert_eq!(off.status.code(), Some(2));
    assert!(stderr(&off).contains("PointNotOnManifold"));
}

#[test]
fn validation_errors_exit_one() {
    let out = levikit(&["analyze", &manifest("notreal.json")]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).starts_with("error: ValidationError"));

    let missing = levikit(&["analyze", "/nonexistent/manifest.json"]);
    assert_ne!(missing.status.code(), Some(0));
    assert!(stderr(&missing).contains("error:"));

    let usage = levikit(&["analyze"]);
    assert_eq!(usage.status.code(), Some(1));
}

#[test]
fn su24_specialization_to_zero() {
    let out = levikit(&[
        "homogeneous",
        &manifest("su24.json"),
        "--specialize",
        "w1=0",
        "--specialize",
        "w2=0",
        "--specialize",
        "t2=0",
        "--json",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let v = json_of(&out);
    assert!(keys_sorted(&v));
    assert_eq!(v["result"]["cr_type"], serde_json::json!([3, 8]));
    let spec = &v["result"]["specializations"][0];
    assert_eq!(spec["signature"], serde_json::json!([0, 3, 0]));
    for row in spec["levi_matrix"].as_array().unwrap() {
        assert!(row.as_array().unwrap().iter().all(|c| c == "0"));
    }
}

#[test]
fn unknown_parameter_is_a_validation_error() {
    let out = levikit(&["homogeneous", &manifest("su24.json"), "--specialize", "t=0"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("ValidationError"));
}

#[test]
fn so16_signature() {
    let out = levikit(&["homogeneous", &manifest("so16.json"), "--specialize", "w=1", "--specialize", "t=0", "--json"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let v = json_of(&out);
    assert_eq!(v["result"]["cr_type"], serde_json::json!([4, 3]));
    assert_eq!(v["result"]["specializations"][0]["signature"], serde_json::json!([1, 2, 1]));
}

#[test]
fn not_a_subalgebra_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("sl2.json");
    std::fs::write(
        &path,
        r#"{"kind":"homogeneous","matrix_size":2,
            "q_basis":[[["0","1"],["0","0"]],[["0","0"],["1","0"]]],
            "conjugation":{"flavor":"entrywise"}}"#,
    )
    .unwrap();
    let out = levikit(&["homogeneous", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("NotSubalgebra"));
}

#[test]
fn pointwise_check_warns() {
    let out = levikit(&["nijenhuis", &manifest("heisenberg_pointwise.json"), "--json"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let warnings = json_of(&out)["warnings"].clone();
    assert!(warnings.as_array().unwrap().iter().any(|w| w == levikit_cli::commands::POINTWISE_WARNING));

    let full = levikit(&["nijenhuis", &manifest("heisenberg.json"), "--json"]);
    assert_eq!(json_of(&full)["warnings"], serde_json::json!([]));
}

#[test]
fn nijenhuis_verdicts() {
    let perturbed = json_of(&levikit(&["nijenhuis", &manifest("heisenberg_perturbed.json"), "--json"]));
    assert_eq!(perturbed["result"]["cr2"], true);
    assert_eq!(perturbed["result"]["cr3"], false);
    let nonclosed = json_of(&levikit(&["nijenhuis", &manifest("nonclosed.json"), "--json"]));
    assert_eq!(nonclosed["result"]["integrable"], false);
    let standard = json_of(&levikit(&["nijenhuis", &manifest("standard.json"), "--json"]));
    assert_eq!(standard["result"]["integrable"], true);
}

#[test]
fn wrong_kind_for_command() {
    let out = levikit(&["nijenhuis", &manifest("sphere.json")]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn selftest_passes() {
    let out = levikit(&["selftest", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["result"]["failed"], 0);
    assert_eq!(v["result"]["total"], 10);
}
