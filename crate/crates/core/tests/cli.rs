use std::process::{Command, Output};

use harmonic_zeta::report::SCHEMA;
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_harmonic-zeta")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn assert_valid(doc: &Value) {
    let schema: Value = serde_json::from_str(SCHEMA).unwrap();
    let compiled = jsonschema::JSONSchema::compile(&schema).expect("schema compiles");
    let msgs: Vec<String> = match compiled.validate(doc) {
        Ok(()) => Vec::new(),
        Err(errors) => errors.map(|e| format!("{} at {}", e, e.instance_path)).collect(),
    };
    assert!(msgs.is_empty(), "schema violations: {msgs:#?}");
}

fn without_timing(out: &Output) -> Value {
    let mut v = json(out);
    v.as_object_mut().unwrap().remove("timing");
    v
}

#[test]
fn verify_all_suites_at_default_precision() {
    let out = run(&["verify"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    let doc = json(&out);
    assert_valid(&doc);
    assert_eq!(doc["digits"], 50);
    assert_eq!(doc["suites"].as_array().unwrap().len(), 9);
}

#[test]
fn verify_at_minimum_precision() {
    let out = run(&["verify", "--precision", "15"]);
    assert_eq!(out.status.code(), Some(0));
    assert_valid(&json(&out));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&["verify", "--suites", "bernoulli,unknown"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--precision", "14"]).status.code(), Some(2));
    assert_eq!(run(&["oracle", "--kmax", "9"]).status.code(), Some(2));
    assert_eq!(run(&["chain", "--kmax", "0"]).status.code(), Some(2));
    assert_eq!(run(&["chain", "--convention", "C"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn chain_json_has_two_by_eight_rows() {
    let out = run(&["chain", "--kmax", "8", "--convention", "all", "--precision", "30"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json(&out);
    assert_valid(&doc);
    let rows = doc["chain"]["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 16);
    assert_eq!(rows[0]["chain"]["a"], "1/12");
    assert_eq!(rows[0]["numeric"]["digits"], 30);
}

#[test]
fn chain_kmax_one() {
    let out = run(&["chain", "--kmax", "1", "--convention", "A"]);
    let doc = json(&out);
    let ks: Vec<u64> = doc["chain"]["sums"].as_array().unwrap().iter().map(|r| r["k"].as_u64().unwrap()).collect();
    assert_eq!(ks, vec![0, 1]);
    assert_eq!(doc["chain"]["rows"].as_array().unwrap().len(), 1);
}

#[test]
fn chain_csv_format() {
    let out = run(&["chain", "--kmax", "3", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "k,convention,a,b,c,numeric,oracle,delta");
    assert_eq!(lines.count(), 6);
    assert!(!text.contains('\r'));
}

#[test]
fn reports_are_byte_stable() {
    for args in [
        &["chain", "--kmax", "4", "--precision", "25"][..],
        &["oracle", "--kmax", "2", "--precision", "25"][..],
        &["verify", "--suites", "zeta,chain-exactness,lemma4", "--precision", "25"][..],
    ] {
        let a = run(args);
        let b = run(args);
        assert_eq!(without_timing(&a), without_timing(&b));
        let mut csv_args = args.to_vec();
        csv_args.extend(["--format", "csv"]);
        assert_eq!(run(&csv_args).stdout, run(&csv_args).stdout);
    }
}

#[test]
fn oracle_single_row_with_scheme() {
    let out = run(&["oracle", "--kmax", "0"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json(&out);
    assert_valid(&doc);
    let rows = doc["oracle"]["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 1);
    assert!(rows[0]["scheme"]["n"].as_u64().unwrap() >= 2);
    assert!(rows[0]["scheme"]["j"].as_u64().unwrap() >= 1);
    assert_eq!(doc["oracle"]["integral_lower_limit"], 1);
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("hz-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let out = run(&["chain", "--kmax", "2", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let doc: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_valid(&doc);
    std::fs::remove_dir_all(dir).unwrap();
}
