use std::process::{Command, Output};

use burniat::plane::REFERENCE_FIXTURES;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_burniat")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> serde_json::Value {
    let out = run(args);
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

fn write_temp(name: &str, text: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("burniat-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

#[test]
fn verify_theorem_lists_rows() {
    let out = run(&["--json", "verify-theorem"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["schema"], "burniat-report/1");
    assert_eq!(v["passed"], true);
    let rows = v["result"]["rows"].as_array().unwrap();
    let ks: Vec<i64> = rows.iter().map(|r| r["k_squared"].as_i64().unwrap()).collect();
    for k in 2..=6 {
        assert!(ks.contains(&k));
    }
    assert!(rows.iter().all(|r| r["matches_expected"] == true));
}

#[test]
fn pi1_k2_two() {
    let v = json(&["pi1", "--k", "2", "--json"]);
    assert_eq!(v["result"]["pi1"], "(Z/2)^3");
    assert_eq!(v["result"]["h1"], "(Z/2)^3");
}

#[test]
fn h1_k2_five() {
    let v = json(&["--json", "h1", "--k", "5"]);
    assert_eq!(v["result"]["h1"], "(Z/2)^5");
}

#[test]
fn pi1_from_arrangement_file() {
    let f = REFERENCE_FIXTURES.iter().find(|f| f.k_squared == 3).unwrap();
    let p = write_temp("k3.json", f.json);
    let v = json(&["--json", "pi1", "--k", "3", "--arrangement", p.to_str().unwrap()]);
    assert_eq!(v["result"]["pi1"], "H + Z/2");
    assert_eq!(v["result"]["relations"]["source"], "arrangement");
}

#[test]
fn pi1_class_mismatch_fails() {
    let f = REFERENCE_FIXTURES.iter().find(|f| f.k_squared == 3).unwrap();
    let p = write_temp("k3b.json", f.json);
    let out = run(&["pi1", "--k", "2", "--arrangement", p.to_str().unwrap()]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("K² = 2"));
}

#[test]
fn classify_good_config() {
    let f = REFERENCE_FIXTURES.iter().find(|f| f.nodal).unwrap();
    let p = write_temp("nodal.json", f.json);
    let v = json(&["--json", "classify-config", "--arrangement", p.to_str().unwrap()]);
    assert_eq!(v["passed"], true);
    assert_eq!(v["result"]["class"]["k_squared"], 4);
    assert_eq!(v["result"]["class"]["nodal"], true);
}

#[test]
fn classify_malformed_config() {
    let p = write_temp("bad.json", "{\"version\": 1}");
    let out = run(&["classify-config", "--arrangement", p.to_str().unwrap()]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("base_points"));
}

#[test]
fn classify_degenerate_config_reports_violations() {
    let f = REFERENCE_FIXTURES[0];
    // Move P3 onto the line through P1 and P2.
    let text = f.json.replacen("[[0, 1], [0, 1], [1, 1]]", "[[1, 1], [1, 1], [0, 1]]", 1);
    assert_ne!(text, f.json);
    let p = write_temp("degenerate.json", &text);
    let out = run(&["--json", "classify-config", "--arrangement", p.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(!v["result"]["validation"]["violations"].as_array().unwrap().is_empty());
}

#[test]
fn unknown_subcommand() {
    assert!(!run(&["frobnicate"]).status.success());
}

#[test]
fn other_reports_pass() {
    for cmd in ["fixed-points", "verify-section1", "moduli-report"] {
        let out = run(&[cmd]);
        assert!(out.status.success(), "{cmd}");
    }
    assert_eq!(json(&["--json", "moduli-report"])["result"]["dimension"], 4);
}

#[test]
fn json_is_byte_stable() {
    let a = run(&["--json", "verify-theorem"]).stdout;
    let b = run(&["--json", "verify-theorem"]).stdout;
    assert_eq!(a, b);
}
