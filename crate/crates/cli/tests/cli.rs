//! End-to-end tests of the `coxlab` binary: envelopes, exit codes and payload fidelity.

use coxlab::config::Limits;
use coxlab::groups::build_group;
use coxlab::lattice::{enumerate_flats, verify_coxeter_identity, NormChoice};
use coxlab::symfunc::CharacterTable;
use serde_json::Value;
use std::process::Command;

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

impl Run {
    fn json(&self) -> Value {
        serde_json::from_str(&self.stdout).unwrap_or_else(|e| panic!("stdout is not JSON ({e}): {}", self.stdout))
    }

    fn payload(&self) -> Value {
        self.json()["payload"].clone()
    }
}

fn coxlab(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_coxlab"))
        .args(args)
        .env_remove("COXLAB_BUDGET_MB")
        .env_remove("COXLAB_GROUP_CAP")
        .output()
        .expect("binary runs");
    Run {
        code: out.status.code().expect("exit code"),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

#[test]
fn group_card() {
    let r = coxlab(&["group", "--group", "A3"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let v = r.json();
    assert_eq!(v["status"], "ok");
    assert!(v["elapsed_ms"].is_u64());
    let g = build_group("A3", &Limits::default()).unwrap();
    assert_eq!(v["payload"], g.card());
}

#[test]
fn zonotope_e6() {
    let r = coxlab(&["zonotope", "--type", "E6"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let p = r.payload();
    assert_eq!(p["shephard_sum"], 895536);
    assert_eq!(p["connection_index"], 3);
    assert_eq!(p["volume"], "sqrt(3)*895536");
}

#[test]
fn d6_tower_spectrum() {
    let r = coxlab(&["tower-spectrum", "--group", "D6", "--tower", "1,3,6,2,5,4"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let mut spec: Vec<String> = r.payload()["spectrum"]
        .as_array()
        .unwrap()
        .iter()
        .map(|s| s.as_str().unwrap().replace(' ', ""))
        .collect();
    spec.sort();
    let mut expected: Vec<String> = [
        "2*w1+w2+w4+6*w6",
        "3*w2+w4+6*w6",
        "2*w3+w5+7*w6",
        "4*w4+6*w6",
        "3*w5+7*w6",
        "10*w6",
    ]
    .iter()
    .map(|s| s.to_string())
    .collect();
    expected.sort();
    assert_eq!(spec, expected);
}

#[test]
fn characters_and_lr() {
    let r = coxlab(&["mn", "--lambda", "2,1", "--mu", "3"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert_eq!(r.payload()["value"], -1);
    let r = coxlab(&["lr", "--lambda", "3,1", "--alpha", "2", "--beta", "2"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert_eq!(r.payload()["value"], 1);
    let r = coxlab(&["chartable", "--n", "4", "--format", "csv"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert_eq!(r.stdout, CharacterTable::new(4).to_csv());
    let r = coxlab(&["chartable", "--n", "5"]);
    assert_eq!(r.payload(), serde_json::to_value(CharacterTable::new(5)).unwrap());
}

#[test]
fn mainthm_all_standard_towers() {
    let r = coxlab(&[
        "verify",
        "mainthm",
        "--group",
        "B3",
        "--all-standard-towers",
        "--length",
        "7",
    ]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let v = r.json();
    assert_eq!(v["status"], "ok");
    assert_eq!(v["payload"]["passed"], true);
    assert_eq!(v["payload"]["details"]["towers"].as_array().unwrap().len(), 6);
}

#[test]
fn coxeter_identity_payload_matches_library() {
    let r = coxlab(&["verify", "coxeter-identity", "--group", "H3"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let g = build_group("H3", &Limits::default()).unwrap();
    let lib = verify_coxeter_identity(&g, NormChoice::Eh).unwrap();
    assert_eq!(r.payload(), lib.to_json());
}

#[test]
fn lattice_emit_writes_library_json() {
    let path = std::env::temp_dir().join(format!("coxlab-flats-{}.json", std::process::id()));
    let r = coxlab(&["lattice", "--group", "B3", "--emit", path.to_str().unwrap()]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert_eq!(r.payload()["counts"], serde_json::json!([1, 9, 13, 1]));
    let written: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    std::fs::remove_file(&path).ok();
    let g = build_group("B3", &Limits::default()).unwrap();
    assert_eq!(written, enumerate_flats(&g).unwrap().to_json());
}

#[test]
fn discrepancy_exits_one() {
    let r = coxlab(&["verify", "quasihook-restriction", "--n", "6", "--k", "2", "--a", "3"]);
    assert_eq!(r.code, 1, "{}", r.stdout);
    let v = r.json();
    assert_eq!(v["status"], "discrepancy");
    assert!(v["payload"]["first_discrepancy"].is_string());
}

#[test]
fn hook_restriction_holds() {
    let r = coxlab(&["verify", "hook-restriction", "--n", "6", "--k", "2", "--a", "3"]);
    assert_eq!(r.code, 0, "{}", r.stdout);
}

#[test]
fn invalid_inputs_exit_two() {
    for args in [
        &["group", "--group", "X9"][..],
        &["tower-spectrum", "--group", "A3", "--tower", "1,1,2"][..],
        &["tower-spectrum", "--group", "A3", "--tower", "[[0],[0,1"][..],
        &["mn", "--lambda", "2,1", "--mu", "2"][..],
        &["verify", "dihedral", "--group", "I2(5)", "--weights", "1,2"][..],
    ] {
        let r = coxlab(args);
        assert_eq!(r.code, 2, "{args:?}: {}", r.stdout);
        assert!(r.stderr.starts_with("error:"), "{args:?}");
        assert_eq!(r.json()["status"], "error");
    }
}

#[test]
fn budgets_are_enforced() {
    let r = coxlab(&["--group-cap", "100", "group", "--group", "B4"]);
    assert_eq!(r.code, 2);
    let r = coxlab(&["--budget-mb", "1", "factor-series", "--group", "D5", "--length", "12"]);
    assert_eq!(r.code, 2);
    assert!(r.json()["error"].as_str().unwrap().contains("budget"), "{}", r.stdout);
    let r = coxlab(&["--subset-cap", "10", "zonotope", "--type", "D5"]);
    assert_eq!(r.code, 2);
    let out = Command::new(env!("CARGO_BIN_EXE_coxlab"))
        .args(["group", "--group", "B4"])
        .env("COXLAB_GROUP_CAP", "100")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}
