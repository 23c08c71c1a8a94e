//! Drives the built binary.

use std::process::{Command, Output};

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nu-partitions"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = bin(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["enumerate", "--class", "S", "--n", "12"][..],
        &["enumerate", "--class", "O", "--n", "12", "--format", "json"],
        &["count", "--class", "pnu", "--max-n", "20"],
        &["verify", "--max-n", "6"],
    ] {
        assert_eq!(bin(args).stdout, bin(args).stdout, "{args:?}");
    }
}

#[test]
fn phi_then_inverse_reproduces_text() {
    for n in ["0", "3", "9"] {
        for line in stdout(&["enumerate", "--class", "S", "--n", n]).lines() {
            let shape = stdout(&["map", "phi-inverse", "--input", line]);
            let back = stdout(&["map", "phi", "--check", "--input", shape.trim_end()]);
            assert_eq!(back.trim_end(), line);
        }
    }
}

#[test]
fn exit_codes() {
    assert_eq!(
        bin(&["map", "phi", "--input", "3,3,2"]).status.code(),
        Some(0)
    );
    let bad_class = bin(&["map", "phi-inverse", "--input", "4,4,2,2"]);
    assert_eq!(bad_class.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&bad_class.stderr).contains("MalformedSClass"));
    assert_eq!(
        bin(&["map", "phi", "--input", "3,x"]).status.code(),
        Some(2)
    );
    assert_eq!(bin(&["render", "--shape", "2,3"]).status.code(), Some(2));
    assert_eq!(bin(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        bin(&["verify", "--checks", "nonsense"]).status.code(),
        Some(2)
    );
}

#[test]
fn enumerate_json_schema() {
    let json: serde_json::Value = serde_json::from_str(&stdout(&[
        "enumerate",
        "--class",
        "S",
        "--n",
        "5",
        "--format",
        "json",
    ]))
    .unwrap();
    assert_eq!(json["class"], "S");
    assert_eq!(json["n"], 5);
    assert_eq!(json["count"], 3);
    assert_eq!(json["members"][2], serde_json::json!([5, 5, 5, 3, 3]));
}

#[test]
fn verify_counts_to_forty() {
    let out = stdout(&["verify", "--max-n", "40", "--checks", "counts"]);
    let rows: Vec<&str> = out.lines().filter(|l| l.starts_with("counts\t")).collect();
    assert_eq!(rows.len(), 41);
    assert!(rows.iter().all(|r| r.split('\t').nth(2) == Some("PASS")));
    assert_eq!(out.lines().last(), Some("PASS"));
}

#[test]
fn verify_defaults_pass() {
    let out = stdout(&["verify"]);
    assert!(out.lines().any(|l| l.starts_with("roundtrips\t25\tPASS")));
    assert!(out.lines().any(|l| l.starts_with("series\t40\tPASS")));
    assert_eq!(out.lines().last(), Some("PASS"));
}
