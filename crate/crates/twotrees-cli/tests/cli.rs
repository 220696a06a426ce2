//! End-to-end tests of the `twotrees` binary: output bytes, JSON shape, and
//! exit codes.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_twotrees"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8 stdout")
}

#[test]
fn check_reports_graphicality_and_sigma() {
    let o = run(&["check", "6,2^6"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "{\"graphic\":true,\"n\":7,\"parity_even\":true,\"sequence\":\
         \"6,2,2,2,2,2,2\",\"sigma\":18,\"violation_t\":null}\n"
    );
}

#[test]
fn check_reports_first_failing_inequality() {
    let o = run(&["check", "3,3,1,1"]);
    assert_eq!(o.status.code(), Some(0), "a verdict is not a failure");
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["graphic"], false);
    assert_eq!(v["violation_t"], 2);
}

#[test]
fn check_rejects_malformed_sequences() {
    assert_eq!(run(&["check", "2,3"]).status.code(), Some(2), "increasing");
    assert_eq!(run(&["check", "x"]).status.code(), Some(2));
}

#[test]
fn layoff_prints_residual() {
    let o = run(&["layoff", "4,3,3,2,2,2", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "3,2,2,2,1\n");
    assert_eq!(run(&["layoff", "2,2,2", "9"]).status.code(), Some(2));
}

#[test]
fn enumerate_seven_emits_twelve_records() {
    let o = run(&["enumerate", "7"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 12);
    for line in lines {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["k"], 7);
        assert_eq!(v["edges"].as_array().unwrap().len(), 11);
    }
    assert_eq!(run(&["enumerate", "11"]).status.code(), Some(2), "over cap");
}

#[test]
fn hosts_json_and_dot() {
    let o = run(&["hosts", "7"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["family"], "G7");
    assert_eq!(v["graph"]["edges"].as_array().unwrap().len(), 16);

    let o = run(&["hosts", "4"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["family"], "small");
    assert_eq!(v["graph"]["edges"].as_array().unwrap().len(), 5);

    let o = run(&["hosts", "6", "--dot"]);
    assert!(stdout(&o).starts_with("graph G {"));
    assert_eq!(run(&["hosts", "2"]).status.code(), Some(2));
}

#[test]
fn pipeline_emits_realization_and_host_embedding() {
    let o = run(&["pipeline", "6,6,5,5,4,4,3^24", "7"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 2);
    let g: serde_json::Value = serde_json::from_str(lines[0]).unwrap();
    assert_eq!(g["n"], 30);
    let s: serde_json::Value = serde_json::from_str(lines[1]).unwrap();
    let emb = s["host_embedding"].as_array().unwrap();
    assert_eq!(emb.len(), 7);
    assert!(emb.iter().all(|x| x.as_u64().unwrap() < 7));
    // Hypothesis violations are usage errors, not falsifications.
    assert_eq!(run(&["pipeline", "2,2,2,2,2,2,2,2", "7"]).status.code(), Some(2));
}

#[test]
fn verify_exhaustive_small() {
    let o = run(&["verify", "3", "6", "--exhaustive"]);
    assert_eq!(o.status.code(), Some(0));
    let all = stdout(&o);
    let last = all.lines().last().unwrap();
    let v: serde_json::Value = serde_json::from_str(last).unwrap();
    assert_eq!(v["mode"], "exhaustive");
    assert_eq!(v["checked"], v["passed"]);
    assert!(v["checked"].as_u64().unwrap() > 0);
}

#[test]
fn verify_sampled_is_byte_deterministic() {
    let a = run(&["verify", "6", "78", "--samples", "8", "--seed", "5"]);
    let b = run(&["verify", "6", "78", "--samples", "8", "--seed", "5"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let c = run(&["verify", "6", "78", "--samples", "8", "--seed", "6"]);
    assert_ne!(a.stdout, c.stdout, "seed must matter");
    // --exhaustive and --samples are mutually exclusive.
    let d = run(&["verify", "3", "6", "--exhaustive", "--samples", "4"]);
    assert_eq!(d.status.code(), Some(2));
}

#[test]
fn extremal_four_seven_fails_both_checks() {
    let o = run(&["extremal", "4", "7"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "{\"adjusted\":false,\"k\":4,\"n\":7,\"sequence\":\"6,2,2,2,2,2,2\",\
         \"sigma\":18,\"strong\":false,\"threshold\":18,\"weak\":false}\n"
    );
}

#[test]
fn dot_renders_graph_json() {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let path = dir.join("cli_dot_input.json");
    std::fs::write(&path, "{\"n\":4,\"edges\":[[0,1],[1,2]]}\n").unwrap();
    let o = run(&["dot", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "graph G {\n  3;\n  0 -- 1;\n  1 -- 2;\n}\n");
    let missing = dir.join("cli_dot_missing.json");
    assert_eq!(
        run(&["dot", missing.to_str().unwrap()]).status.code(),
        Some(2)
    );
}

#[test]
fn bare_invocation_is_a_usage_error() {
    let o = bin().output().unwrap();
    assert_eq!(o.status.code(), Some(2));
}
