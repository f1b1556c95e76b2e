use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn bnmono(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bnmono"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn write(dir: &Path, name: &str, contents: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path.display().to_string()
}

fn path(dir: &TempDir, name: &str) -> String {
    dir.path().join(name).display().to_string()
}

const IDENTITY2: &str = r#"{"n": 2, "tables": ["0101", "0011"]}"#;
const ZERO2: &str = r#"{"n": 2, "tables": ["0000", "0000"]}"#;
const NEGATION: &str = r#"{"n": 1, "tables": ["10"]}"#;

#[test]
fn eval_prints_image_or_trajectory() {
    let dir = TempDir::new().unwrap();
    let id = write(dir.path(), "id.json", IDENTITY2);
    let out = bnmono(&["eval", &id, "01"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "01\n");

    let zero = write(dir.path(), "zero.json", ZERO2);
    let out = bnmono(&["eval", &zero, "11", "--schedule", "1,2"]);
    assert_eq!(stdout(&out), "11\n01\n00\n");

    let gray = path(&dir, "gray.json");
    assert!(bnmono(&["graycode", "2", &gray]).status.success());
    assert_eq!(stdout(&bnmono(&["eval", &gray, "00"])), "01\n");
}

#[test]
fn gray_distance_and_embedding() {
    let dir = TempDir::new().unwrap();
    let gray = path(&dir, "gray3.json");
    assert!(bnmono(&["graycode", "3", &gray]).status.success());
    // last Gray word for n = 3 is 100
    assert_eq!(stdout(&bnmono(&["distance", &gray, "000", "100"])), "7\n");
    assert_eq!(
        stdout(&bnmono(&["distance", &gray, "100", "000"])),
        "unreachable\n"
    );
    assert_eq!(stdout(&bnmono(&["fixedpoints", &gray])), "100\n");
    assert_eq!(stdout(&bnmono(&["diameter", &gray])), "7\n");

    let host = path(&dir, "host.json");
    assert!(bnmono(&["embed", &gray, &host]).status.success());
    let text = std::fs::read_to_string(&host).unwrap();
    let file: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(file["n"], 6);
    assert_eq!(file["tables"].as_array().unwrap().len(), 6);
    assert_eq!(
        stdout(&bnmono(&["distance", &host, "000111", "100011"])),
        "14\n"
    );
}

#[test]
fn fixed_points_of_identity() {
    let dir = TempDir::new().unwrap();
    let id = write(dir.path(), "id.json", IDENTITY2);
    assert_eq!(stdout(&bnmono(&["fixedpoints", &id])), "00\n10\n01\n11\n");
}

#[test]
fn format_errors_exit_with_two() {
    let dir = TempDir::new().unwrap();
    let id = write(dir.path(), "id.json", IDENTITY2);
    let bad = write(dir.path(), "bad.json", r#"{"n": 2, "tables": ["01"]}"#);
    assert_eq!(bnmono(&["eval", &bad, "01"]).status.code(), Some(2));
    assert_eq!(bnmono(&["eval", &id, "012"]).status.code(), Some(2));
    assert_eq!(bnmono(&["eval", &id, "011"]).status.code(), Some(2));
    assert_eq!(
        bnmono(&["eval", &id, "01", "--schedule", "3"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        bnmono(&["eval", "/nonexistent.json", "01"]).status.code(),
        Some(2)
    );
    assert_eq!(bnmono(&["frobnicate"]).status.code(), Some(2));
    let report = path(&dir, "r.json");
    assert_eq!(
        bnmono(&["verify", "no-such-suite", &id, "--report", &report])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn embed_refuses_negative_loops_unless_forced() {
    let dir = TempDir::new().unwrap();
    let neg = write(dir.path(), "neg.json", NEGATION);
    let out = path(&dir, "out.json");
    assert_eq!(bnmono(&["embed", &neg, &out]).status.code(), Some(2));
    assert!(!PathBuf::from(&out).exists());
    assert!(bnmono(&["embed", &neg, &out, "--force"]).status.success());
}

#[test]
fn dot_exports() {
    let dir = TempDir::new().unwrap();
    let neg = write(dir.path(), "neg.json", NEGATION);
    let dot = path(&dir, "g.dot");
    assert!(bnmono(&["igraph", &neg, &dot]).status.success());
    assert_eq!(
        std::fs::read_to_string(&dot).unwrap(),
        "digraph interaction {\n  1;\n  1 -> 1 [label=\"-\", arrowhead=tee];\n}\n"
    );
    assert!(bnmono(&["asyncgraph", &neg, &dot]).status.success());
    assert_eq!(
        std::fs::read_to_string(&dot).unwrap(),
        "digraph async {\n  \"0\";\n  \"1\";\n  \"0\" -> \"1\" [label=\"1\"];\n  \"1\" -> \"0\" [label=\"1\"];\n}\n"
    );
}

#[test]
fn verify_exit_codes_and_reports() {
    let dir = TempDir::new().unwrap();
    let gray = path(&dir, "gray3.json");
    assert!(bnmono(&["graycode", "3", &gray]).status.success());
    let report = path(&dir, "report.json");
    let out = bnmono(&["verify", "embedding", &gray, "--report", &report]);
    assert_eq!(out.status.code(), Some(0));
    let json: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    let checks = json[0]["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 6);
    assert!(checks.iter().all(|c| c["pass"] == true));
    assert!(json[0]["millis"].is_u64());

    let id = write(dir.path(), "id.json", IDENTITY2);
    let out = bnmono(&["verify", "robert", &id, "--report", &report]);
    assert_eq!(out.status.code(), Some(0));
    let json: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(json[0]["skipped"], true);

    let neg = write(dir.path(), "neg.json", NEGATION);
    let out = bnmono(&["verify", "embedding", &neg, "--report", &report]);
    assert_eq!(out.status.code(), Some(0));

    let out = bnmono(&[
        "verify", "all", "--count", "2", "--n", "2", "--seed", "7", "--report", &report,
    ]);
    assert_eq!(out.status.code(), Some(0));
    let json: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(json.as_array().unwrap().len(), 8);
    assert_eq!(json[0]["instance"]["seed"], 7);

    // corpus mode without --n is a usage error
    let out = bnmono(&["verify", "robert", "--report", &report]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_prints_summary() {
    let dir = TempDir::new().unwrap();
    let report = path(&dir, "report.json");
    let out = bnmono(&[
        "verify",
        "monotone-reach",
        "--count",
        "5",
        "--n",
        "3",
        "--report",
        &report,
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "5 reports: 5 passed, 0 skipped, 0 failed\n");
}
