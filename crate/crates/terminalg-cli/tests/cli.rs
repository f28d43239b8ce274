//! End-to-end tests of the command-line interface and its file formats.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_terminalg"))
}

fn write_temp(name: &str, contents: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("terminalg_cli_{}_{}", std::process::id(), name));
    std::fs::write(&path, contents).unwrap();
    path
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).to_string()
}

#[test]
fn check_terminal_on_catalog_name() {
    let out = bin()
        .args(["check", "T3*_03", "terminal"])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "true");
}

#[test]
fn check_leibniz_failure_reports_witness() {
    let out = bin()
        .args(["check", "T3_01(1)", "leibniz"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.starts_with("false"));
    assert!(text.contains("e1,e1,e1"));
}

#[test]
fn check_reads_algebra_files() {
    let path = write_temp(
        "algebra.json",
        r#"{"dim": 2, "label": "N2", "entries": []}"#,
    );
    let out = bin()
        .args(["check", path.to_str().unwrap(), "jordan"])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "true");
}

#[test]
fn cohomology_dims_for_t3s05() {
    let out = bin().args(["cohomology", "T3*_05"]).output().unwrap();
    assert!(out.status.success());
    assert!(stdout(&out).contains("Z2T 5  B2 2  H2T 3  H2L 1"));
}

#[test]
fn cohomology_dims_for_zero_algebra() {
    let out = bin().args(["cohomology", "N3", "--json"]).output().unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["dim_z2t"], 9);
    assert_eq!(v["dim_b2"], 0);
    assert_eq!(v["dim_h2t"], 9);
    assert_eq!(v["dim_h2l"], 9);
}

#[test]
fn extend_builds_named_family() {
    let path = write_temp(
        "spec.json",
        r#"{"base": "T3*_01", "cocycles": ["n2+a*n6+n7"], "params": {"a": "2"}}"#,
    );
    let out = bin()
        .args(["extend", path.to_str().unwrap(), "--json"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["terminal"], true);
    assert_eq!(v["split"], false);
    assert_eq!(v["in_t_s"], true);
    assert_eq!(v["leibniz_class"], false);
    // The built algebra is T4_07(2): e2e3 = 2e4 is entry [1,2,3,"2"].
    let entries = v["extension"]["entries"].as_array().unwrap();
    assert!(entries.iter().any(|e| e.as_array().unwrap()
        == &vec![1.into(), 2.into(), 3.into(), "2".into()] as &Vec<serde_json::Value>));
}

#[test]
fn degenerate_pass_and_fail() {
    let good = write_temp(
        "witness_good.json",
        r#"{
            "source": "T3_01",
            "target": "T3*_01",
            "basis": [["t","0","0"],["0","t^2","0"],["0","0","1"]],
            "index": {"lambda": "2"}
        }"#,
    );
    let out = bin()
        .args(["degenerate", good.to_str().unwrap()])
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", stdout(&out));

    let bad = write_temp(
        "witness_bad.json",
        r#"{
            "source": "T3*_05",
            "target": "N3",
            "basis": [["t^-1","0","0"],["0","1","0"],["0","0","1"]]
        }"#,
    );
    let out = bin()
        .args(["degenerate", bad.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("diverges"));
}

#[test]
fn catalog_dump_is_json_with_all_families() {
    let out = bin().args(["catalog", "dump"]).output().unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let names: Vec<&str> = v
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["name"].as_str().unwrap())
        .collect();
    assert!(names.contains(&"T4_44"));
    assert!(names.contains(&"D4_40"));
    assert!(names.contains(&"N3a"));
}

#[test]
fn verify_catalog_group_runs_clean() {
    let out = bin()
        .args(["verify-catalog", "--only", "theta"])
        .env("TERMINALG_SEED", "7")
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", stdout(&out));
    assert!(stdout(&out).contains("seed 7"));
    assert!(stdout(&out).contains("0 fail"));
}

#[test]
fn invariants_json() {
    let out = bin()
        .args(["invariants", "D4_01(1,1,1)", "--json"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["dim_derivations"], 2);
    assert_eq!(v["dim_square"], 2);
}

#[test]
fn reports_are_byte_identical_across_runs() {
    let run = || {
        bin()
            .args(["verify-catalog", "--only", "h2", "--json", "--seed", "11"])
            .output()
            .unwrap()
    };
    let first = run();
    let second = run();
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);
}
