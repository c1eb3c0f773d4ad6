//! End-to-end tests of the `ctube` binary: output contracts, exit codes, and
//! byte-stability of the exports.

use std::process::{Command, Output};

fn ctube(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ctube"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).unwrap()
}

fn assert_exit(output: &Output, code: i32) {
    assert_eq!(
        output.status.code(),
        Some(code),
        "stderr: {}",
        String::from_utf8_lossy(&output.stderr)
    );
}

#[test]
fn test_xvar_golden_values() {
    let out = ctube(&["xvar", "--rank", "3", "--object", "2,2"]);
    assert_exit(&out, 0);
    assert_eq!(
        stdout_of(&out).trim(),
        "x1*x2^-2 + x1^-1 + 2*x2^-2 + x1^-1*x2^-2"
    );

    let out = ctube(&["xvar", "--rank", "3", "--object", "1,1"]);
    assert_exit(&out, 0);
    assert_eq!(stdout_of(&out).trim(), "x2");
}

#[test]
fn test_xvar_rejects_non_rigid() {
    let out = ctube(&["xvar", "--rank", "3", "--object", "1,3"]);
    assert_exit(&out, 2);
    assert!(stdout_of(&out).is_empty(), "no partial output on error");
    assert!(String::from_utf8_lossy(&out.stderr).contains("rigid"));
}

#[test]
fn test_xvar_json_format() {
    let out = ctube(&["xvar", "--rank", "3", "--object", "1,2", "--format", "json"]);
    assert_exit(&out, 0);
    let value: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(value["vars"], 2);
    assert_eq!(value["terms"][0]["coeff"], "1");
    assert_eq!(value["terms"][0]["exps"], serde_json::json!([1, 0]));
}

#[test]
fn test_index_examples() {
    let out = ctube(&["index", "--rank", "3", "--object", "3,2"]);
    assert_exit(&out, 0);
    assert_eq!(stdout_of(&out).trim(), "[-1,0]");

    let out = ctube(&["index", "--rank", "3", "--object", "2,1"]);
    assert_eq!(stdout_of(&out).trim(), "[1,-1]");

    let out = ctube(&["index", "--rank", "4", "--object", "1,2"]);
    assert_eq!(stdout_of(&out).trim(), "[0,1,0]");

    let out = ctube(&["index", "--rank", "3", "--object", "1,5"]);
    assert_exit(&out, 2);
}

#[test]
fn test_enumerate_counts() {
    let out = ctube(&[
        "enumerate",
        "--rank",
        "3",
        "--kind",
        "maximal-rigid",
        "--count",
    ]);
    assert_exit(&out, 0);
    assert_eq!(stdout_of(&out).trim(), "6");

    let out = ctube(&["enumerate", "--rank", "4", "--kind", "rigid", "--count"]);
    assert_eq!(stdout_of(&out).trim(), "12");

    let out = ctube(&["enumerate", "--rank", "4", "--kind", "variables", "--count"]);
    assert_eq!(stdout_of(&out).trim(), "12");
}

#[test]
fn test_enumerate_listing_is_sorted_and_complete() {
    let out = ctube(&["enumerate", "--rank", "3", "--kind", "rigid"]);
    assert_exit(&out, 0);
    let lines: Vec<String> = stdout_of(&out).trim().lines().map(String::from).collect();
    assert_eq!(lines.len(), 6);
    assert_eq!(lines[0], "(1,2)@3");

    let out = ctube(&["enumerate", "--rank", "3", "--kind", "maximal-rigid"]);
    let listing = stdout_of(&out);
    assert_eq!(listing.trim().lines().count(), 6);
    assert!(listing.contains("(1,2)+(1,1)"));

    let out = ctube(&[
        "enumerate",
        "--rank",
        "3",
        "--kind",
        "variables",
        "--format",
        "json",
    ]);
    let value: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(value.as_array().unwrap().len(), 6);
}

#[test]
fn test_mutate_rank3_apex() {
    let out = ctube(&[
        "mutate",
        "--rank",
        "3",
        "--rigid",
        "(1,2)+(1,1)",
        "--at",
        "(1,2)",
    ]);
    assert_exit(&out, 0);
    let text = stdout_of(&out);
    assert!(text.contains("partner: (3,2)"));
    assert!(text.contains("extDim: 2"));
    assert!(text.contains("E: (1,1)+(1,1)"));
    assert!(text.contains("E': 0"));
    assert!(text.contains("identity: ok"));
}

#[test]
fn test_mutate_rank4_inner_summand() {
    let out = ctube(&[
        "mutate",
        "--rank",
        "4",
        "--rigid",
        "(1,3)+(1,2)+(1,1)",
        "--at",
        "(1,2)",
    ]);
    assert_exit(&out, 0);
    let text = stdout_of(&out);
    assert!(text.contains("partner: (3,1)"), "got:\n{text}");
    assert!(text.contains("extDim: 1"));
    assert!(text.contains("E: (1,1)"));
    assert!(text.contains("E': (1,3)"));
    assert!(text.contains("identity: ok"));
}

#[test]
fn test_mutate_error_paths() {
    // not Ext-orthogonal: (1,3) and (2,3) at rank 4
    let out = ctube(&[
        "mutate",
        "--rank",
        "4",
        "--rigid",
        "(1,3)+(2,3)+(1,1)",
        "--at",
        "(1,1)",
    ]);
    assert_exit(&out, 2);

    // valid set, absent target
    let out = ctube(&[
        "mutate",
        "--rank",
        "3",
        "--rigid",
        "(1,2)+(1,1)",
        "--at",
        "(2,1)",
    ]);
    assert_exit(&out, 3);
}

#[test]
fn test_mutate_json() {
    let out = ctube(&[
        "mutate",
        "--rank",
        "3",
        "--rigid",
        "(1,2)+(1,1)",
        "--at",
        "(1,1)",
        "--format",
        "json",
    ]);
    assert_exit(&out, 0);
    let value: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(value["partner"], serde_json::json!([2, 1]));
    assert_eq!(value["extDim"], 1);
    assert_eq!(value["identity"], true);
}

#[test]
fn test_verify_passes_and_reports() {
    let out = ctube(&["verify", "--rank", "3", "--check", "all"]);
    assert_exit(&out, 0);
    let text = stdout_of(&out);
    assert!(text.contains("[PASS] mutation-identity"));
    assert!(text.contains("[PASS] cluster-count"));
    assert!(!text.contains("[FAIL]"));

    let out = ctube(&[
        "verify",
        "--rank",
        "2",
        "--check",
        "bijection",
        "--format",
        "json",
    ]);
    assert_exit(&out, 0);
    let value: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(value["rank"], 2);
    assert!(value["checks"]
        .as_array()
        .unwrap()
        .iter()
        .all(|c| c["pass"] == true));
    assert!(value["elapsedMs"].is_number());
}

#[test]
fn test_verify_bijection_rank5_counts() {
    let out = ctube(&["verify", "--rank", "5", "--check", "bijection"]);
    assert_exit(&out, 0);
    let text = stdout_of(&out);
    assert!(text.contains("20 variables"), "got:\n{text}");
    assert!(text.contains("70 clusters"), "got:\n{text}");
}

#[test]
fn test_verify_rejects_rank_below_two() {
    let out = ctube(&["verify", "--rank", "1", "--check", "all"]);
    assert_exit(&out, 2);
}

#[test]
fn test_rank_ceiling() {
    let out = ctube(&["xvar", "--rank", "13", "--object", "1,1"]);
    assert_exit(&out, 2);
}

#[test]
fn test_graph_dot_rank3_hexagon() {
    let out = ctube(&["graph", "--rank", "3", "--format", "dot"]);
    assert_exit(&out, 0);
    let dot = stdout_of(&out);
    let node_lines = dot
        .lines()
        .filter(|l| l.contains("[label=") && !l.contains("--"))
        .count();
    let edge_lines = dot.lines().filter(|l| l.contains("--")).count();
    assert_eq!(node_lines, 6);
    assert_eq!(edge_lines, 6);

    // byte-stable across runs
    let again = ctube(&["graph", "--rank", "3", "--format", "dot"]);
    assert_eq!(out.stdout, again.stdout);
}

#[test]
fn test_graph_json_rank2() {
    let out = ctube(&["graph", "--rank", "2", "--format", "json"]);
    assert_exit(&out, 0);
    let value: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(value["nodes"].as_array().unwrap().len(), 2);
    assert_eq!(value["edges"].as_array().unwrap().len(), 1);
}

#[test]
fn test_graph_dot_rank4_counts() {
    let out = ctube(&["graph", "--rank", "4", "--format", "dot"]);
    let dot = stdout_of(&out);
    let node_lines = dot
        .lines()
        .filter(|l| l.contains("[label=") && !l.contains("--"))
        .count();
    let edge_lines = dot.lines().filter(|l| l.contains("--")).count();
    assert_eq!(node_lines, 20);
    assert_eq!(edge_lines, 30);
}

#[test]
fn test_graph_seeds_json() {
    let out = ctube(&["graph", "--rank", "3", "--format", "json", "--seeds"]);
    assert_exit(&out, 0);
    let value: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(value["nodes"].as_array().unwrap().len(), 6);
    assert_eq!(value["edges"].as_array().unwrap().len(), 6);
    assert_eq!(value["variables"].as_array().unwrap().len(), 6);
    let node = &value["nodes"][0];
    assert!(node["cluster"][0]["terms"].is_array());
    assert!(node["matrix"].is_array());
}

#[test]
fn test_graph_node_limit() {
    let out = ctube(&[
        "graph",
        "--rank",
        "4",
        "--format",
        "json",
        "--seeds",
        "--max-nodes",
        "3",
    ]);
    assert_exit(&out, 4);
    assert!(stdout_of(&out).is_empty());
}

#[test]
fn test_output_to_file() {
    let dir = std::env::temp_dir().join("ctube-test-output");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("xvar.txt");
    let out = ctube(&[
        "xvar",
        "--rank",
        "3",
        "--object",
        "3,1",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert_exit(&out, 0);
    assert!(stdout_of(&out).is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    assert_eq!(written.trim(), "x1^-1*x2 + x2^-1 + x1^-1*x2^-1");
    std::fs::remove_file(&path).ok();
}
