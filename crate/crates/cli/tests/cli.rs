mod common;

use common::{run_bin, schema_errors, validator};
use realforms_cli::render::parse_text;
use realforms_cli::run;
use serde_json::Value;

fn json(args: &[&str]) -> (i32, Value) {
    let mut full = vec!["realforms"];
    full.extend_from_slice(args);
    let out = run(full);
    (out.code, serde_json::from_str(&out.stdout).expect("JSON output"))
}

fn groups(v: &Value) -> Vec<Value> {
    v["classes"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["group"].clone())
        .collect()
}

#[test]
fn classify_examples() {
    let (code, v) = json(&["classify", "--family", "su", "--n", "5", "--p", "1"]);
    assert_eq!(code, 0);
    assert_eq!(v["count"], 3);
    let su51 = serde_json::json!({"variant": "SU", "n": 5, "p": 1});
    assert!(groups(&v).iter().all(|g| *g == su51));

    let (_, v) = json(&["classify", "--family", "sp", "--n", "3"]);
    assert_eq!(v["count"], 1);

    let (_, v) = json(&["classify", "--family", "g2", "--form", "split"]);
    assert_eq!(v["count"], 2);
    let forms: Vec<Value> = groups(&v).iter().map(|g| g["form"].clone()).collect();
    assert_eq!(forms, ["split", "compact"]);
}

#[test]
fn orthogonal_family_dispatches_on_parity() {
    let (_, odd) = json(&["classify", "--family", "so", "--n", "7", "--p", "2"]);
    assert_eq!(odd["input"]["variant"], "SOodd");
    assert_eq!(odd["count"], 4);
    let (_, even) = json(&["classify", "--family", "so", "--n", "6", "--p", "1"]);
    assert_eq!(even["input"]["variant"], "SOeven");
    assert_eq!(even["count"], 3);
}

#[test]
fn verify_examples_pass() {
    for args in [
        &["verify", "--suite", "twist-identities", "--max-n", "6"][..],
        &["verify", "--suite", "det-positivity", "--seed", "7", "--samples", "50"],
        &["verify", "--suite", "counts", "--max-n", "10"],
    ] {
        let (code, v) = json(args);
        assert_eq!(code, 0, "{args:?}");
        assert_eq!(v["all_passed"], true);
        assert!(v["suites"].as_array().unwrap().iter().all(|s| s["failed"] == 0));
    }
}

#[test]
fn suites_are_reported_in_canonical_order() {
    let (_, v) = json(&[
        "verify", "--suite", "pfister", "--suite", "counts", "--suite", "pfister", "--max-n", "3",
    ]);
    let names: Vec<&str> = v["suites"]
        .as_array()
        .unwrap()
        .iter()
        .map(|s| s["suite"].as_str().unwrap())
        .collect();
    assert_eq!(names, ["counts", "pfister"]);
}

#[test]
fn matrix_results_carry_a_recheck() {
    for args in [
        &["cocycle", "rep", "--family", "so", "--n", "4", "--p", "1", "--q", "3"][..],
        &["cocycle", "scalar", "--n", "2", "--zeta", "-1"],
        &["forms", "structured", "--kind", "an", "--n", "6"],
        &["sample", "cayley", "--kind", "quat-antihermitian", "--n", "2"],
        &["sample", "fixed", "--n", "6", "--seed", "4"],
        &["sample", "coboundary", "--action", "plain", "--n", "3"],
    ] {
        let (code, v) = json(args);
        assert_eq!(code, 0, "{args:?}");
        assert_eq!(v["verified"], true, "{args:?}");
    }
}

#[test]
fn scalar_cocycles_report_negative_class() {
    let (_, v) = json(&["cocycle", "scalar", "--n", "4", "--zeta", "4:0,1"]);
    assert_eq!(v["sl_class"], -1);
    let (_, v) = json(&["cocycle", "scalar", "--n", "2", "--zeta", "1"]);
    assert_eq!(v["sl_class"], 1);
}

#[test]
fn text_mode_round_trips() {
    let schema = validator();
    for args in [
        &["classify", "--family", "e8", "--form", "1"][..],
        &["forms", "pfister", "--a", "2", "--b", "3", "--c", "5"],
        &["sample", "cayley", "--kind", "quadratic", "--n", "3", "--p", "1"],
        &["classify", "--family", "nope"],
    ] {
        let mut full = vec!["realforms"];
        full.extend_from_slice(args);
        let j = run(full.clone());
        full.extend(["--output", "text"]);
        let t = run(full);
        assert_eq!(j.code, t.code);
        assert!(schema_errors(&schema, &j.stdout).is_empty(), "{args:?}");
        let value: Value = serde_json::from_str(&j.stdout).unwrap();
        assert_eq!(parse_text(&t.stdout), Some(value), "{args:?}");
    }
}

#[test]
fn help_and_version_exit_zero() {
    let help = run(["realforms", "--help"]);
    assert_eq!(help.code, 0);
    assert!(help.stdout.contains("classify"));
    assert_eq!(run(["realforms", "--version"]).code, 0);
    assert_eq!(run(["realforms", "classify", "--help"]).code, 0);
}

#[test]
fn usage_errors_are_json_objects() {
    let (code, v) = json(&["classify", "--family", "su", "--n", "4"]);
    assert_eq!(code, 2);
    assert_eq!(v["error"]["kind"], "usage");
    assert!(v["error"]["message"].as_str().unwrap().contains("--p"));
}

#[test]
fn binary_matches_library_entry_point() {
    let args = ["classify", "--family", "su-quat-herm", "--n", "3", "--p", "1"];
    let bin = run_bin(&args, None);
    let mut full = vec!["realforms"];
    full.extend_from_slice(&args);
    let lib = run(full);
    assert_eq!((bin.code, bin.stdout), (lib.code, lib.stdout));
}

#[test]
fn seed_comes_from_environment() {
    let env = run_bin(
        &["sample", "coboundary", "--action", "quaternion", "--n", "2"],
        Some("42"),
    );
    let flag = run_bin(
        &[
            "sample",
            "coboundary",
            "--action",
            "quaternion",
            "--n",
            "2",
            "--seed",
            "42",
        ],
        None,
    );
    assert_eq!(env.stdout, flag.stdout);
    let v: Value = serde_json::from_str(&env.stdout).unwrap();
    assert_eq!(v["seed"], 42);
}
