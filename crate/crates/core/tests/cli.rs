use std::process::{Command, Output};

use serde_json::Value;

fn hyponorm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hyponorm")).args(args).output().expect("binary runs")
}

fn code(args: &[&str]) -> i32 {
    hyponorm(args).status.code().unwrap()
}

fn json(args: &[&str]) -> Value {
    serde_json::from_slice(&hyponorm(args).stdout).unwrap()
}

#[test]
fn hypo_check_exit_codes() {
    let sym = ["hypo", "check", "--n", "1", "--m", "1", "--s", "1", "--t", "1"];
    fn with<'a>(sym: &[&'a str], a: &'a str) -> Vec<&'a str> {
        [sym, &["--a", a]].concat()
    }
    assert_eq!(code(&with(&sym, "2")), 1);
    assert_eq!(code(&with(&sym, "0")), 0);
    assert_eq!(code(&with(&sym, "1/2")), 0);
    // |a| = 1 is the boundary: the form has a kernel and no strict witness exists
    assert_eq!(code(&with(&sym, "1")), 2);
    let out = json(&with(&sym, "2"));
    assert_eq!(out["results"]["witness"]["kind"], "basis");
    assert_eq!(out["results"]["status"], "CertifiedNotHyponormal");
    assert_eq!(out["mode"], "exact");
}

#[test]
fn hypo_window_reports_violation() {
    let out = hyponorm(&["hypo", "window", "--n", "1", "--s", "1", "--m", "1", "--c", "2.0"]);
    assert_eq!(out.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    let found = &v["results"]["violation"];
    assert!(found["k1"].as_u64().is_some() && found["k2"].as_u64().is_some());
    assert_eq!(v["mode"], "float");
    // c too small for the window argument
    assert_eq!(code(&["hypo", "window", "--n", "1", "--s", "1", "--m", "1", "--c", "1"]), 3);
}

#[test]
fn usage_errors_exit_three() {
    assert_eq!(code(&["comm", "norm", "--m", "3", "--n", "3"]), 3);
    assert_eq!(code(&["comm", "norm", "--m", "3"]), 3);
    assert_eq!(code(&["seq", "--n", "1", "--m", "1", "--s", "x", "--t", "1", "--kmax", "2"]), 3);
    assert_eq!(code(&["bounds", "--kl", "--m", "3", "--q", "3"]), 3);
    assert_eq!(code(&["frobnicate"]), 3);
    assert_eq!(code(&["--help"]), 0);
}

#[test]
fn comm_commands() {
    let v = json(&["comm", "classify", "--m", "2", "--n", "1"]);
    assert_eq!(v["results"]["classification"], "MonotoneDecreasing");
    assert_eq!(v["results"]["d"], "-104");
    let v = json(&["comm", "halfbound", "--m", "5", "--n", "4"]);
    assert_eq!(v["results"]["all_positive"], true);
    let v = json(&["comm", "norm", "--m", "5", "--n", "4"]);
    assert_eq!(v["results"]["argmax_k"], 1);
}

#[test]
fn seq_csv_and_json_agree() {
    let args = ["seq", "--n", "1", "--m", "1", "--s", "1", "--t", "1", "--kmax", "4"];
    let csv = String::from_utf8(hyponorm(&[&args[..], &["--format", "csv"]].concat()).stdout).unwrap();
    let rows: Vec<&str> = csv.lines().skip(1).collect();
    assert_eq!(rows.len(), 5);
    assert!(rows.iter().all(|r| r.split(',').nth(3) == Some("0")));
    assert!(rows[0].starts_with("0,2/9,"));
    let v = json(&args);
    let first = &v["results"]["rows"][0]["sigma"];
    assert_eq!((first["num"].as_str(), first["den"].as_str()), (Some("2"), Some("9")));
}

#[test]
fn region_outputs() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("cells.csv");
    let pbm = dir.path().join("cells.pbm");
    let args = ["region", "--mmax", "3", "--csv", csv.to_str().unwrap(), "--bitmap", pbm.to_str().unwrap()];
    assert_eq!(code(&args), 0);
    assert_eq!(std::fs::read_to_string(&csv).unwrap(), "m,n,d_sign\n2,1,-1\n3,1,-1\n3,2,-1\n");

    let args = ["region", "--mmax", "100", "--bitmap", pbm.to_str().unwrap()];
    assert_eq!(code(&args), 0);
    let text = std::fs::read_to_string(&pbm).unwrap();
    let rows: Vec<&str> = text.lines().filter(|l| !l.starts_with('#')).skip(2).collect();
    let bits: Vec<u8> = rows.concat().into_bytes();
    let at = |m: usize, n: usize| bits[(n - 1) * 100 + (m - 1)];
    assert_eq!(at(8, 7), b'1');
    assert_eq!(at(2, 1), b'0');
    assert!(text.lines().all(|l| l.len() <= 70));
}

#[test]
fn bounds_examples() {
    let v = json(&["bounds", "--n", "1", "--m", "1", "--s", "1", "--t", "0"]);
    assert_eq!(v["results"]["bound_a_squared"]["num"], "4");
    assert_eq!(v["results"]["bound_a_squared"]["den"], "9");
    let v = json(&["bounds", "--kl", "--m", "3", "--q", "1"]);
    assert_eq!(v["results"]["first_is_min"], true);
    let v = json(&["bounds", "--n", "1", "--m", "1", "--s", "0", "--t", "0"]);
    assert_eq!(v["results"]["bound_a_squared"]["num"], "1");
}

#[test]
fn output_is_independent_of_thread_count() {
    let runs = [
        ["region", "--mmax", "300", "--format", "csv"].as_slice(),
        &["hypo", "sweep", "--n", "1", "--m", "2", "--s", "1/2", "--t", "3", "--tol", "1/100"],
        &["bounds", "--n", "2", "--m", "3", "--s", "1/2", "--t", "0"],
        &["comm", "norm", "--m", "40", "--n", "27"],
    ];
    for args in runs {
        let one = hyponorm(&[args, &["--threads", "1"]].concat());
        let four = hyponorm(&[args, &["--threads", "4"]].concat());
        assert_eq!(one.status.code(), four.status.code(), "{args:?}");
        assert_eq!(one.stdout, four.stdout, "{args:?}");
    }
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("norm.json");
    assert_eq!(code(&["comm", "norm", "--m", "8", "--n", "7", "--out", path.to_str().unwrap()]), 0);
    let v: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    assert_eq!(v["command"], "comm norm");
    assert!(v.get("timing_ms").is_none());
}
