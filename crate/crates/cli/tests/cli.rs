use std::process::{Command, Output};

use serde_json::Value;

const LEC: &str = "[4,5]+[2,4]+[3,3]+[1,2]";

fn msl(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_msl")).args(args).env_remove("MSL_SEED").output().unwrap()
}

fn json(out: &Output) -> Value {
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn csv_rows(bytes: &[u8]) -> Vec<csv::StringRecord> {
    csv::Reader::from_reader(bytes).records().map(|r| r.unwrap()).collect()
}

#[test]
fn compute_leclerc_checked() {
    let v = json(&msl(&["compute", "--m", LEC, "--n", LEC, "--check"]));
    assert_eq!(v["lambda_Z"], 2);
    assert_eq!(v["frak_d"], 0);
    assert_eq!(v["method"], "oracle");
    assert!(v["crosschecks"].as_array().unwrap().iter().all(|c| c["passed"] == true));
}

#[test]
fn compute_base_case() {
    let v = json(&msl(&["compute", "--m", "[0,0]", "--n", "[0,0]"]));
    assert_eq!((v["lambda_Z"].as_i64(), v["alpha"].as_i64(), v["frak_d"].as_i64()), (Some(1), Some(-2), Some(0)));
}

#[test]
fn compute_with_empty_argument() {
    let v = json(&msl(&["compute", "--m", "[0,1]", "--n", ""]));
    for key in ["lambda_Z", "lambda_L", "lambda_nr", "alpha", "alpha_plus", "frak_d"] {
        assert_eq!(v[key], 0, "{key}");
    }
}

#[test]
fn exit_codes() {
    let bad = msl(&["compute", "--m", "[1,2", "--n", ""]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(bad.stdout.is_empty());
    assert_eq!(msl(&["compute", "--m", "[3,1]", "--n", ""]).status.code(), Some(2));
    let pre = msl(&["compute", "--m", LEC, "--n", LEC, "--method", "matching"]);
    assert_eq!(pre.status.code(), Some(3));
    assert!(pre.stdout.is_empty());
    assert_eq!(msl(&["compute", "--m", "[0,0]", "--n", "[0,0]", "--prime", "7"]).status.code(), Some(2));
}

#[test]
fn forced_methods_agree() {
    let s = "[2,3]+[1,2]";
    for method in ["speh", "matching", "oracle"] {
        let v = json(&msl(&["compute", "--m", s, "--n", s, "--method", method]));
        assert_eq!(v["lambda_L"], 2, "{method}");
        assert_eq!(v["lambda_nr"], 0, "{method}");
        assert_eq!(v["method"], method);
    }
}

#[test]
fn az_command() {
    let run = |m: &str| String::from_utf8(msl(&["az", "--m", m]).stdout).unwrap();
    assert_eq!(run("[0,2]"), "[2,2]+[1,1]+[0,0]\n");
    assert_eq!(run("[2,3]+[1,2]"), "[2,3]+[1,2]\n");
    assert_eq!(run(""), "\n");
    assert_eq!(msl(&["az", "--m", "[x]"]).status.code(), Some(2));
}

#[test]
fn check_suites_pass() {
    let out = msl(&["check", "--suite", "leclerc"]);
    assert!(out.status.success());
    let out = msl(&["check", "--suite", "matching", "--max-segments", "6", "--count", "60", "--hi", "8"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stdout));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("ladder_vs_oracle"));
    let summary: Value = serde_json::from_str(text.lines().last().unwrap()).unwrap();
    for b in summary["batteries"].as_array().unwrap() {
        assert_eq!(b["passed"], b["total"]);
    }
}

#[test]
fn check_all_with_seed() {
    let out = msl(&["check", "--suite", "all", "--seed", "42", "--count", "30"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stdout));
}

#[test]
fn sweep_rows_and_columns() {
    let out = msl(&["sweep", "--count", "100", "--max-segments", "4", "--lo", "0", "--hi", "6", "--seed", "4"]);
    assert!(out.status.success());
    let mut reader = csv::Reader::from_reader(out.stdout.as_slice());
    let header: Vec<String> = reader.headers().unwrap().iter().map(String::from).collect();
    assert_eq!(
        header,
        [
            "m", "n", "is_ladder_m", "is_ladder_n", "is_speh_m", "is_speh_n", "is_regular_m", "is_regular_n",
            "balanced_m", "balanced_n", "lambda_Z_mn", "lambda_Z_nm", "lambda_nr", "alpha", "alpha_plus", "frak_d",
            "method", "checks_passed"
        ]
    );
    let rows = csv_rows(&out.stdout);
    assert_eq!(rows.len(), 100);
    assert!(rows.iter().all(|r| &r[17] == "true"));
}

#[test]
fn ladder_filter_never_uses_the_oracle() {
    let out = msl(&["sweep", "--count", "40", "--filter", "ladder", "--seed", "2"]);
    let rows = csv_rows(&out.stdout);
    assert!(rows.iter().all(|r| &r[16] == "matching" || &r[16] == "speh"));
}

#[test]
fn sweep_is_byte_deterministic() {
    let a = msl(&["sweep", "--count", "1", "--seed", "77"]).stdout;
    let b = msl(&["sweep", "--count", "1", "--seed", "77"]).stdout;
    assert_eq!(a, b);
    let c = msl(&["sweep", "--count", "12", "--seed", "5"]).stdout;
    let d = msl(&["sweep", "--count", "12", "--seed", "5", "--sequential"]).stdout;
    assert_eq!(c, d);
    let e = Command::new(env!("CARGO_BIN_EXE_msl")).args(["sweep", "--count", "12"]).env("MSL_SEED", "5").output().unwrap();
    assert_eq!(c, e.stdout);
}

#[test]
fn sweep_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("rows.csv");
    let out = msl(&["sweep", "--count", "5", "--filter", "speh,balanced", "--output", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let rows = csv_rows(&std::fs::read(&path).unwrap());
    assert_eq!(rows.len(), 5);
    assert!(rows.iter().all(|r| &r[4] == "true" && &r[8] == "true"));
}
