use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::{json, Value};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_singlab")).args(args).output().expect("binary runs")
}

fn ok_json(args: &[&str]) -> Value {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("json on stdout")
}

fn suite(name: &str) -> String {
    let root = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../suites").join(name);
    root.to_string_lossy().into_owned()
}

#[test]
fn milnor_of_fermat_cubic() {
    let v = ok_json(&["milnor", "--f", "x^3+y^3"]);
    assert_eq!(v["mu"], 4);
    assert_eq!(v["f"], "x^3 + y^3");
}

#[test]
fn groebner_basis_has_three_elements() {
    let v = ok_json(&["gb", "--ideal", "x^2+y^2, x*y", "--order", "grevlex"]);
    assert_eq!(v["basis"].as_array().unwrap().len(), 3);
    assert_eq!(v["colength"], 4);
}

#[test]
fn dm_check_cusp() {
    let v = ok_json(&["dm-check", "--f", "x^2+y^3", "--weights", "1/2,1/3"]);
    assert_eq!(
        v,
        json!({"f":"y^3 + x^2","n":1,"mu":2,"pairing":2,"milnor_orlik":2,"verdict":true,"warnings":[]})
    );
}

#[test]
fn pairing_of_node_and_free_class() {
    let v = ok_json(&["pairing", "--f", "x^2"]);
    assert_eq!((v["pairing"].as_i64(), v["even"].as_i64(), v["odd"].as_i64()), (Some(1), Some(1), Some(0)));
    let v = ok_json(&["pairing", "--f", "x^3", "--class", "free"]);
    assert_eq!(v["pairing"], 0);
    let v = ok_json(&["pairing", "--f", "x^2", "--class", "graph:-x"]);
    assert!(v["pairing"].is_i64());
}

#[test]
fn matrix_factorization_of_smooth_pair() {
    let v = ok_json(&["mf-stabilize", "--w", "x^2 - y^2", "--ideal", "x - y"]);
    assert_eq!(v["potential"], "x^2 - y^2");
    assert_eq!(v["A"].as_array().unwrap().len(), 1);
}

#[test]
fn resolution_of_residue_field() {
    let v = ok_json(&["resolve", "--ideal", "x, y, z"]);
    assert_eq!(v["ranks"], json!([1, 3, 3, 1]));
    assert_eq!(v["finite"], true);
}

#[test]
fn suites_from_files() {
    let v = ok_json(&["dm-check", "--suite", &suite("ade.json")]);
    assert_eq!(v["all_verdicts"], true);
    assert_eq!(v["rows"].as_array().unwrap().len(), 15);

    let v = ok_json(&["dm-check", "--suite", &suite("plane.toml")]);
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows[2]["report"]["verdict"], false);
    assert!(rows[2]["report"]["warnings"][0].as_str().unwrap().starts_with("LOCAL_GLOBAL_MISMATCH"));
}

#[test]
fn output_is_deterministic() {
    let args = ["dm-check", "--suite", "builtin:ade"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

#[test]
fn text_output_is_a_table() {
    let out = run(&["--format", "text", "milnor", "--f", "x^2+y^3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().any(|l| l.starts_with("mu") && l.trim_end().ends_with('2')));
}

#[test]
fn prime_field_is_reported() {
    let v = ok_json(&["--field", "fp:3", "dm-check", "--f", "x^4 + x^3 + y^2"]);
    assert!(v["warnings"].as_array().unwrap().iter().any(|w| w.as_str().unwrap().starts_with("CHAR_DEGENERATE")));
}

#[test]
fn characteristic_can_destroy_isolation() {
    // the cusp-like x^3 + y^2 has Jacobian (0, 2y) in characteristic 3
    let out = run(&["--field", "fp:3", "pairing", "--f", "x^3 + y^2"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn exit_codes() {
    let syntax = run(&["milnor", "--f", "x^^2"]);
    assert_eq!(syntax.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&syntax.stderr).contains("column 3"));

    assert_eq!(run(&["milnor"]).status.code(), Some(2));
    assert_eq!(run(&["--field", "fp:4", "milnor", "--f", "x"]).status.code(), Some(2));

    let non_isolated = run(&["pairing", "--f", "x^2*y^2"]);
    assert_eq!(non_isolated.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&non_isolated.stderr).contains("SUPPORT_NOT_FINITE"));

    let odd = run(&["pairing", "--f", "x^3", "--class", "graph:-x"]);
    assert_eq!(odd.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&odd.stderr).contains("ENDOMORPHISM_NOT_S_LINEAR"));
}

#[test]
fn reports_replay_from_their_canonical_input() {
    let first = ok_json(&["dm-check", "--f", "(x + y)^3 - 2*x*y^2 + y^5"]);
    let again = ok_json(&["dm-check", "--f", first["f"].as_str().unwrap()]);
    assert_eq!(first, again);
}
