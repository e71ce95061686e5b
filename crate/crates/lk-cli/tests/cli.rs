use std::path::{Path, PathBuf};
use std::process::Command;

use lk_cli::golden::{fixture_path, mismatches};
use lk_cli::{run, Outcome};
use serde_json::{json, Value};

fn lk(args: &[&str]) -> Outcome {
    run(std::iter::once("lk").chain(args.iter().copied()))
}

fn report(args: &[&str]) -> Value {
    let out = lk(args);
    assert_eq!(out.code, 0, "{args:?}: {}", out.stderr);
    serde_json::from_str(&out.stdout).unwrap()
}

fn fixtures() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

fn error_line(out: &Outcome) -> Value {
    let lines: Vec<&str> = out.stderr.lines().collect();
    assert_eq!(lines.len(), 1, "stderr: {}", out.stderr);
    serde_json::from_str(lines[0]).unwrap()
}

#[test]
fn locus_n4_lists_five_factors() {
    let v = report(&["locus", "--n", "4"]);
    let mults: Vec<u64> = v["factors"].as_array().unwrap().iter().map(|f| f["multiplicity"].as_u64().unwrap()).collect();
    let mut sorted = mults.clone();
    sorted.sort_unstable();
    assert_eq!(sorted, vec![1, 2, 3, 3, 3]);
    assert_eq!(v["residual_l_degree"], json!(0));
}

#[test]
fn kernel_n3_at_inverse_r_cubed() {
    let v = report(&["kernel", "--n", "3", "--l", "1/r^3"]);
    assert_eq!(v["dim"], json!(1));
    assert_eq!(v["roots"], json!(["w12", "w23", "w13"]));
    assert_eq!(v["basis"], json!([["(1)/(1)", "(r^2)/(1)", "(r)/(1)"]]));
}

#[test]
fn verify_n5_passes_every_relation() {
    let v = report(&["verify", "--n", "5"]);
    assert_eq!(v["all_pass"], json!(true));
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["passed"] == json!(true)));
}

#[test]
fn stored_fixtures_match() {
    let cases: &[(&str, usize, &[&str])] = &[
        ("locus", 3, &[]),
        ("locus", 4, &[]),
        ("locus", 5, &[]),
        ("locus", 6, &[]),
        ("kernel", 3, &["--l", "1/r^3"]),
        ("sum-matrix", 3, &[]),
        ("verify", 5, &[]),
        ("specht", 7, &["--gap-check"]),
    ];
    for (command, n, extra) in cases {
        let path = fixture_path(&fixtures(), command, *n);
        let n_arg = n.to_string();
        let mut args = vec![*command, "--n", n_arg.as_str(), "--golden", path.to_str().unwrap()];
        args.extend_from_slice(extra);
        let out = lk(&args);
        assert_eq!(out.code, 0, "{command} n = {n}: {}", out.stderr);
    }
}

#[test]
fn golden_mismatch_exits_with_2() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("locus.json");
    std::fs::write(&path, r#"{"factors": [{"root": "(r^3)/(1)", "multiplicity": 1}]}"#).unwrap();
    let out = lk(&["locus", "--n", "3", "--golden", path.to_str().unwrap()]);
    assert_eq!(out.code, 2);
    assert!(!out.stdout.is_empty(), "the report is still printed");
    assert_eq!(error_line(&out)["error"]["kind"], json!("golden-mismatch"));
}

#[test]
fn unreadable_golden_file_is_an_input_error() {
    let out = lk(&["locus", "--n", "3", "--golden", "/nonexistent/locus.json"]);
    assert_eq!(out.code, 3);
}

#[test]
fn mismatch_paths_follow_the_fixture() {
    let expected = json!({"a": [1, {"b": "x"}], "c": true});
    assert!(mismatches(&expected, &json!({"a": [1, {"b": "x", "extra": 0}], "c": true, "d": 1})).is_empty());
    assert_eq!(mismatches(&expected, &json!({"a": [1, {"b": "y"}], "c": true})), vec![r#"/a/1/b: expected "x", found "y""#]);
    assert_eq!(mismatches(&expected, &json!({"a": [1], "c": true})), vec!["/a: expected 2 elements, found 1"]);
    assert_eq!(mismatches(&expected, &json!({"a": [1, {"b": "x"}]})), vec!["/c: missing from output"]);
}

#[test]
fn error_kinds_have_distinct_exit_codes() {
    let parse = lk(&["kernel", "--n", "3", "--l", "r^^2"]);
    let guard = lk(&["det", "--n", "7"]);
    let pole = lk(&["kernel", "--n", "3", "--l", "0"]);
    assert_eq!((parse.code, guard.code, pole.code), (3, 4, 5));
    assert_eq!(error_line(&parse)["error"]["kind"], json!("parse"));
    assert_eq!(error_line(&guard)["error"]["kind"], json!("size-guard"));
    assert_eq!(error_line(&pole)["error"]["kind"], json!("pole"));
}

#[test]
fn input_errors_exit_with_3() {
    for args in [
        &["locus", "--n", "2"][..],
        &["kernel", "--n", "3", "--l", "1/r", "--modulus", "cyclo:4"],
        &["kernel", "--n", "3", "--l", "1/r", "--modulus", "cyclotomic:0"],
        &["kernel", "--n", "3", "--modulus", "cyclotomic:12"],
        &["kernel", "--n", "3", "--l", "l*r"],
        &["kernel", "--n", "3"],
        &["check-vectors", "--n", "4", "--case", "no-such-family"],
        &["rank-witness", "--n", "3", "--l", "r", "--size", "4"],
        &["rank-witness", "--n", "3", "--l", "r", "--size", "1", "--rows", "0"],
        &["specht", "--n", "40"],
        &["frobnicate"],
        &["locus"],
    ] {
        let out = lk(args);
        assert_eq!(out.code, 3, "{args:?}: {}", out.stderr);
        error_line(&out);
    }
}

#[test]
fn modulus_one_makes_m_vanish() {
    let out = lk(&["kernel", "--n", "3", "--l", "-r^3", "--modulus", "cyclotomic:1"]);
    assert_eq!(out.code, 5, "{}", out.stderr);
}

#[test]
fn cyclotomic_kernel_at_n3() {
    let v = report(&["kernel", "--n", "3", "--l", "-r^3", "--modulus", "cyclotomic:12"]);
    assert_eq!(v["dim"], json!(2));
    assert_eq!(v["spec"], json!("l -> (-r^3)/(1) mod (1 - r^2 + r^4)"));
}

#[test]
fn check_vectors_reports_membership() {
    let v = report(&["check-vectors", "--n", "5", "--case", "hecke-minus"]);
    assert_eq!(v["all_members"], json!(true));
    assert_eq!(v["vectors"].as_array().unwrap().len(), 4);
    let listed = report(&["check-vectors", "--n", "3", "--case", "list"]);
    assert!(listed["cases"].as_array().unwrap().contains(&json!("l-equals-r")));
}

#[test]
fn rank_witness_finds_a_nonzero_minor() {
    let v = report(&["rank-witness", "--n", "5", "--l", "r", "--size", "5", "--rows", "1,2,3,4,7", "--cols", "1,2,3,4,7"]);
    assert_eq!(v["witness"]["rows"], json!([1, 2, 3, 4, 7]));
    assert_eq!(v["witness"]["det"], json!("(1 + 2*r^2 + r^4)/(r^2)"));
    let none = report(&["rank-witness", "--n", "3", "--l", "1/r^3", "--size", "3"]);
    assert_eq!(none["witness"], Value::Null);
}

#[test]
fn sum_matrix_methods_agree() {
    let direct = report(&["sum-matrix", "--n", "4", "--l", "2*r"]);
    let conj = report(&["sum-matrix", "--n", "4", "--l", "2*r", "--method", "conjugation"]);
    assert_eq!(direct["matrix"], conj["matrix"]);
}

#[test]
fn matrix_builders_agree() {
    let direct = report(&["matrices", "--n", "4", "--which", "g"]);
    let recursive = report(&["matrices", "--n", "4", "--which", "g", "--builder", "recursive"]);
    assert_eq!(direct["G"], recursive["G"]);
    assert_eq!(direct["G"].as_array().unwrap().len(), 3);
    assert!(direct.get("E").is_none());
    assert_eq!(direct["G"][0][0][0], json!("(1)/(l)"));
}

#[test]
fn specht_gap_check_pinpoints_fourteen_at_eight() {
    let v = report(&["specht", "--n", "8", "--gap-check"]);
    assert_eq!(v["gap_check"]["passed"], json!(false));
    let dims: Vec<u64> = v["gap_check"]["gaps"].as_array().unwrap().iter().map(|g| g["dim"].as_u64().unwrap()).collect();
    assert!(dims.iter().all(|&d| d == 14));
    assert!(v["gap_check"]["gaps"].as_array().unwrap().iter().any(|g| g["partition"] == json!("(4,4)")));
}

#[test]
fn text_output_lists_keys() {
    let out = lk(&["verify", "--n", "3", "--output", "text"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.lines().any(|l| l == "all_pass: true"));
    assert!(out.stdout.lines().any(|l| l == "spec: generic"));
}

#[test]
fn help_exits_cleanly() {
    let out = lk(&["--help"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("rank-witness"));
}

fn binary(args: &[&str], envs: &[(&str, &str)]) -> std::process::Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_lk"));
    cmd.args(args).env_remove("LK_SIZE_GUARD");
    for (k, v) in envs {
        cmd.env(k, v);
    }
    cmd.output().unwrap()
}

#[test]
fn binary_output_is_byte_for_byte_deterministic() {
    let args = ["locus", "--n", "5"];
    let a = binary(&args, &[]);
    let b = binary(&args, &[]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let text = String::from_utf8(a.stdout).unwrap();
    let keys: Vec<&str> = text.lines().filter(|l| l.starts_with("  \"")).map(|l| l.trim().split('"').nth(1).unwrap()).collect();
    let mut sorted = keys.clone();
    sorted.sort_unstable();
    assert_eq!(keys, sorted, "top-level keys are sorted");
}

#[test]
fn binary_exit_codes_and_size_guard_override() {
    assert_eq!(binary(&["det", "--n", "6"], &[("LK_SIZE_GUARD", "5")]).status.code(), Some(4));
    assert_eq!(binary(&["det", "--n", "5"], &[("LK_SIZE_GUARD", "5")]).status.code(), Some(0));
    assert_eq!(binary(&["det", "--n", "6", "--force"], &[("LK_SIZE_GUARD", "5")]).status.code(), Some(0));
    let bad = binary(&["kernel", "--n", "3", "--l", "(r"], &[]);
    assert_eq!(bad.status.code(), Some(3));
    assert_eq!(String::from_utf8(bad.stderr).unwrap().lines().count(), 1);
}
