use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lie-abelian"))
        .args(args)
        .env_remove("LIE_ABELIAN_BUDGET")
        .output()
        .expect("binary runs")
}

fn machine(args: &[&str]) -> (i32, Value) {
    let mut full = vec!["--format", "machine"];
    full.extend_from_slice(args);
    let out = run(&full);
    let v = serde_json::from_slice(&out.stdout).expect("machine output is json");
    (out.status.code().expect("exit code"), v)
}

fn temp_file(name: &str, text: &str) -> std::path::PathBuf {
    let path = std::env::temp_dir().join(format!("lie-abelian-{}-{name}", std::process::id()));
    std::fs::write(&path, text).unwrap();
    path
}

#[test]
fn invariants_of_g52() {
    let (code, v) = machine(&["invariants", "g5,2"]);
    assert_eq!(code, 0);
    assert_eq!(v["alpha"]["value"], 4);
    assert_eq!(v["beta"]["value"], 4);
    assert_eq!(v["structure"]["nilpotent"], true);
    assert!(v["log"].as_array().unwrap().iter().any(|e| e["decision"] == "yes"));
}

#[test]
fn simple_alpha_e7() {
    let out = run(&["simple-alpha", "--type", "E", "--rank", "7"]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).contains("= 27"));
    assert_eq!(run(&["simple-alpha", "--type", "G", "--rank", "3"]).status.code(), Some(1));
}

#[test]
fn jacobi_violation_names_triple() {
    let path =
        temp_file("bad.lie", "format: 1\nname: bad\ndim: 3\nfield: Q\n[1,2] = 1*e3\n[1,3] = 1*e1\n[2,3] = 1*e1\n");
    let out = run(&["check", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("(1,2,3)"));
    let _ = std::fs::remove_file(path);
}

#[test]
fn check_accepts_shipped_files() {
    let (code, v) = machine(&["check", "cnla7"]);
    assert_eq!(code, 0);
    assert_eq!(v["dim"], 7);
}

#[test]
fn construct_with_explicit_subalgebra() {
    let sub = temp_file("sub.txt", "0 1 0 0 0\n0 0 0 1 0\n0 0 0 0 1\n");
    let (code, v) = machine(&["construct-ideal", "g5,6", "--subalgebra", sub.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(v["ideal"].as_array().unwrap().len(), 3);
    assert_eq!(v["trace"]["codim"], 2);
    assert!(v["trace"]["checks"].as_array().unwrap().iter().all(|c| c["passed"] == true));
    let _ = std::fs::remove_file(sub);
}

#[test]
fn construct_discovers_subalgebra() {
    let (code, v) = machine(&["construct-ideal", "f5"]);
    assert_eq!(code, 0);
    assert_eq!(v["trace"]["codim"], 1);
    assert_eq!(v["ideal"].as_array().unwrap().len(), 4);
}

#[test]
fn precondition_errors_exit_2() {
    assert_eq!(run(&["construct-ideal", "sl2"]).status.code(), Some(2));
    let sub = temp_file("notab.txt", "1 0 0 0 0\n0 1 0 0 0\n0 0 1 0 0\n");
    assert_eq!(run(&["construct-ideal", "g5,6", "--subalgebra", sub.to_str().unwrap()]).status.code(), Some(2));
    let _ = std::fs::remove_file(sub);
}

#[test]
fn budget_exhaustion_exits_3() {
    let out = Command::new(env!("CARGO_BIN_EXE_lie-abelian"))
        .args(["invariants", "sl:3"])
        .env("LIE_ABELIAN_BUDGET", "1")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(run(&["--budget", "1", "invariants", "sl:3"]).status.code(), Some(3));
}

#[test]
fn ground_mode_reports_range() {
    let (code, v) = machine(&["--mode", "ground", "invariants", "example26"]);
    assert_eq!(code, 0);
    assert_eq!(v["beta"]["lower"], 1);
    assert_eq!(v["beta"]["upper"], 2);
    assert_eq!(v["beta"]["value"], Value::Null);
}

#[test]
fn borel_counts() {
    assert_eq!(machine(&["borel-count", "--rank", "1"]).1["count"], 2);
    assert_eq!(machine(&["borel-count", "--rank", "2"]).1["count"], 4);
}

#[test]
fn corpus_list_and_emit() {
    let (code, v) = machine(&["corpus", "list"]);
    assert_eq!(code, 0);
    assert!(v["files"].as_array().unwrap().iter().any(|f| f["name"] == "cnla7"));
    let out = run(&["corpus", "emit", "g4:1/2"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("format: 1\n"));
    let path = temp_file("g4.lie", &text);
    assert_eq!(run(&["check", path.to_str().unwrap()]).status.code(), Some(0));
    let _ = std::fs::remove_file(path);
}

#[test]
fn machine_output_is_deterministic() {
    let a = run(&["--format", "machine", "invariants", "cnla7"]).stdout;
    let b = run(&["--format", "machine", "invariants", "cnla7"]).stdout;
    assert_eq!(a, b);
}

#[test]
fn selftest_single_criterion() {
    let (code, v) = machine(&["selftest", "--criterion", "5"]);
    assert_eq!(code, 0);
    assert_eq!(v["criteria"][0]["passed"], true);
    assert_eq!(run(&["selftest", "--criterion", "11"]).status.code(), Some(1));
}

#[test]
fn unknown_family_is_validation_error() {
    assert_eq!(run(&["invariants", "nosuch"]).status.code(), Some(1));
}
