use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn chevpres(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_chevpres"))
        .args(args)
        .env_remove("CHEV_MAX_COSETS")
        .output()
        .expect("binary runs")
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn report(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("report is JSON")
}

#[test]
fn sl3_q4_pipeline() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("sl3.json");
    let out = chevpres(&["present", "--family", "sl3-sylow", "--q", "4", "--out", path(&file)]);
    assert!(out.status.success());
    let out = chevpres(&[
        "verify", "--input", path(&file), "--todd-coxeter", "--closure", "--frattini",
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let r = report(&out);
    assert_eq!(r["order_closure"], 64);
    assert_eq!(r["order_tc"], 64);
    assert_eq!(r["d_frattini"], 4);
    assert_eq!(r["relators_checked"], 12);
    assert_eq!(r["failures"].as_array().unwrap().len(), 0);
}

#[test]
fn sp4_q3_text_pipeline() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("sp4.txt");
    let out = chevpres(&[
        "present", "--family", "sp4-sylow", "--p", "3", "--a", "1", "--format", "text", "--out",
        path(&file),
    ]);
    assert!(out.status.success());
    let out = chevpres(&[
        "verify", "--input", path(&file), "--todd-coxeter", "--closure", "--frattini",
    ]);
    assert!(out.status.success());
    let r = report(&out);
    assert_eq!(r["order_closure"], 81);
    assert_eq!(r["order_tc"], 81);
    assert_eq!(r["d_frattini"], 2);
    assert_eq!(r["relators_checked"], 10);
}

#[test]
fn corrupted_file_fails() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("sl3.txt");
    let out = chevpres(&[
        "present", "--family", "sl3-sylow", "--q", "5", "--format", "text", "--out", path(&file),
    ]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&file).unwrap();
    // the first relator line is x1_1^5; make it x1_1^4
    let bad = text.replacen("x1_1^5", "x1_1^4", 1);
    assert_ne!(bad, text);
    std::fs::write(&file, bad).unwrap();
    let out = chevpres(&["verify", "--input", path(&file)]);
    assert!(!out.status.success());
    let r = report(&out);
    assert_eq!(r["failures"], serde_json::json!([0]));
}

#[test]
fn affine_a3_counts() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("a3.json");
    let out = chevpres(&[
        "present", "--family", "affine-uplus", "--type", "A", "--rank", "3", "--p", "2", "--a",
        "4", "--out", path(&file),
    ]);
    assert!(out.status.success());
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("d_count = 16"), "{stderr}");
    assert!(stderr.contains("r_count = 152"), "{stderr}");
    let out = chevpres(&["verify", "--input", path(&file)]);
    assert!(out.status.success());
    assert_eq!(report(&out)["relators_checked"], 152);
}

#[test]
fn preconditions_rejected() {
    assert!(!chevpres(&["present", "--family", "sp4-sylow", "--p", "2", "--a", "1"]).status.success());
    assert!(!chevpres(&["present", "--family", "sl3-sylow", "--q", "12"]).status.success());
    assert!(!chevpres(&["present", "--family", "sl3-sylow", "--q", "9", "--p", "3", "--a", "1"]).status.success());
    assert!(!chevpres(&["table1", "--type", "A", "--rank", "2", "--a", "1", "--parity", "odd"]).status.success());
    assert!(!chevpres(&["cover", "--type", "F", "--rank", "4"]).status.success());
}

#[test]
fn table1_single_row() {
    let out = chevpres(&["table1", "--type", "C", "--rank", "6", "--a", "2", "--parity", "odd"]);
    assert!(out.status.success());
    let rows = report(&out);
    assert_eq!(rows[0]["upper"], 147);
    assert_eq!(rows[0]["formula_agrees"], true);
}

#[test]
fn covers() {
    for (t, l) in [("E", "7"), ("D", "9")] {
        let out = chevpres(&["cover", "--type", t, "--rank", l]);
        assert!(out.status.success());
        let r = report(&out);
        for k in ["P1", "P2", "P3"] {
            assert_eq!(r["check"][k], true, "{t}{l} {k}");
        }
    }
}

#[test]
fn output_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let run = |name: &str, fmt: &str| {
        let file = dir.path().join(name);
        let out = chevpres(&[
            "present", "--family", "affine-uplus", "--type", "B", "--rank", "3", "--q", "27",
            "--format", fmt, "--out", path(&file),
        ]);
        assert!(out.status.success());
        std::fs::read(file).unwrap()
    };
    assert_eq!(run("a.json", "json"), run("b.json", "json"));
    assert_eq!(run("a.txt", "text"), run("b.txt", "text"));
}
