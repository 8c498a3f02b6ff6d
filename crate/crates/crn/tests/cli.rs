//! End-to-end tests of the `crn` binary: the golden analyze run, JSON
//! output, and the exit code contract.

use std::process::{Command, Output};

fn crn(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_crn"))
        .args(args)
        .env_remove("CRN_COLOR")
        .output()
        .expect("run crn binary")
}

fn data(name: &str) -> String {
    format!("{}/tests/data/{name}", env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn analyze_two_cycle_golden_text() {
    let out = crn(&["analyze", &data("m1m5.crn")]);
    assert!(out.status.success());
    let stdout = String::from_utf8(out.stdout).unwrap();
    let expected = "\
NETWORK: m=5 n=5 r=6 l=1 sl=1 t=1 s=4 deficiency=0
The network is weakly reversible.
SUBNETWORK 1:
R1: M1 -> M2
R2: M2 -> M3
R3: M3 -> M1
  n=3 l=1 s=2 deficiency=0 type=III
SUBNETWORK 2:
R4: M2 -> M4
R5: M4 -> M5
R6: M5 -> M2
  n=3 l=1 s=2 deficiency=0 type=III
Summary of the values of s (2ND COL) and n-l (3RD COL) of SUBNETWORK i:
  1  2  2
  2  2  2
The SUM of the RANKS of the SUBNETWORKS is: 4
The SUM of the values of (n-l) of the SUBNETWORKS is: 4
The rank of the WHOLE NETWORK is: 4
The value of (n-l) for the WHOLE NETWORK is: 4
NOTE: The subnetworks given above correspond to the fundamental classes under the F-decomposition.
CONCLUSION 1: The F-decomposition is INDEPENDENT.
CONCLUSION 2: The F-decomposition is INCIDENCE-INDEPENDENT.
CONCLUSION 3: The F-decomposition is BI-INDEPENDENT.
TYPES: w_I=0 w_II=0 w_III=2 overall=TypeZero
CHECK (independent => delta <= w_II): PASS
CHECK (incidence-independent => delta >= w_II): PASS
CHECK (bi-independent => delta = w_II): PASS
";
    assert_eq!(stdout, expected);
}

#[test]
fn analyze_json_matches_text_facts() {
    let out = crn(&["analyze", &data("m1m5.crn"), "--format", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["command"], "analyze");
    assert_eq!(v["network"]["deficiency"], 0);
    assert_eq!(v["network"]["s"], 4);
    let d = &v["decomposition"];
    assert_eq!(d["kind"], "F");
    assert_eq!(d["parts"].as_array().unwrap().len(), 2);
    assert_eq!(d["independent"], true);
    assert_eq!(d["incidence_independent"], true);
    assert_eq!(d["bi_independent"], true);
    assert_eq!(d["type_summary"]["w_iii"], 2);
}

#[test]
fn decompose_kinds_run() {
    for kind in ["o", "p", "ptilde", "f"] {
        let out = crn(&["decompose", &data("m1m5.crn"), "--kind", kind]);
        assert!(out.status.success(), "kind {kind}");
        let stdout = String::from_utf8(out.stdout).unwrap();
        assert!(stdout.contains("CONCLUSION 1"), "kind {kind}");
    }
}

#[test]
fn abc_conclusions_are_negative() {
    let out = crn(&["decompose", &data("abc.crn"), "--kind", "f"]);
    assert!(out.status.success());
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("CONCLUSION 1: The F-decomposition is NOT INDEPENDENT."));
    assert!(stdout.contains("CONCLUSION 2: The F-decomposition is NOT INCIDENCE-INDEPENDENT."));
    assert!(stdout.contains("CONCLUSION 3: The F-decomposition is NOT BI-INDEPENDENT."));
}

#[test]
fn transform_writes_reparsable_output() {
    let dir = std::env::temp_dir().join(format!("crn-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let out_path = dir.join("abc-transformed.crn");
    let out = crn(&[
        "transform",
        &data("abc.crn"),
        "--variant",
        "cf-rm-plus",
        "--out",
        out_path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&out_path).unwrap();
    assert!(text.contains("2A -> A"));
    assert!(text.contains("2B -> B"));
    let reparsed = crn(&["analyze", out_path.to_str().unwrap()]);
    assert!(reparsed.status.success());
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn verdict_text_cites_theorems() {
    let out = crn(&["verdict", &data("m1m5.crn"), "--kinetics", "mass-action"]);
    assert!(out.status.success());
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("VERDICT (mass-action kinetics): no capacity for multistationarity"));
    assert!(stdout.contains("Deficiency Zero Theorem"));
    assert!(stdout.contains("Feinberg Decomposition Theorem"));
}

#[test]
fn parse_error_exits_2() {
    let dir = std::env::temp_dir().join(format!("crn-cli-bad-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.crn");
    std::fs::write(&bad, "R1: A ->\n").unwrap();
    let out = crn(&["analyze", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn missing_file_exits_2() {
    let out = crn(&["analyze", "/definitely/not/a/file.crn"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn transform_without_kinetics_exits_3() {
    let out = crn(&["transform", &data("m1m5.crn")]);
    assert_eq!(out.status.code(), Some(3));
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(stderr.contains("kinetics"));
}

#[test]
fn color_env_var_adds_ansi_codes() {
    let out = Command::new(env!("CARGO_BIN_EXE_crn"))
        .args(["analyze", &data("m1m5.crn")])
        .env("CRN_COLOR", "1")
        .output()
        .unwrap();
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("\x1b[32m"));
    // Plain run stays free of escapes.
    let plain = String::from_utf8(crn(&["analyze", &data("m1m5.crn")]).stdout).unwrap();
    assert!(!plain.contains('\x1b'));
}
