//! Exit codes and golden outputs of the `tdgraph` binary. Golden files live
//! in `tests/golden`; set `TDGRAPH_BLESS=1` to rewrite them.

use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn tdgraph(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tdgraph")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

/// Zeroes every `runtime_ms` field of each JSON line; other lines pass through.
fn mask(text: &str) -> String {
    text.lines()
        .map(|line| match serde_json::from_str::<Value>(line) {
            Ok(mut v) => {
                if v.get("runtime_ms").is_some() {
                    v["runtime_ms"] = Value::from(0);
                }
                serde_json::to_string(&v).unwrap()
            }
            Err(_) => line.to_string(),
        })
        .map(|l| l + "\n")
        .collect()
}

fn golden(name: &str, args: &[&str]) {
    let out = tdgraph(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    let got = mask(&stdout(&out));
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    if std::env::var_os("TDGRAPH_BLESS").is_some() {
        std::fs::write(&path, &got).unwrap();
    }
    let want = std::fs::read_to_string(&path).unwrap_or_else(|_| panic!("missing golden {}", path.display()));
    assert_eq!(got, want, "golden {name} differs");
}

#[test]
fn golden_build_dot() {
    golden("build_z2_3_td.dot", &["build", "Z2", "3", "td", "--format", "dot"]);
}

#[test]
fn golden_build_closed_json() {
    golden("build_z2_3_tdbar.json", &["build", "Z2", "3", "tdbar", "--format", "json"]);
}

#[test]
fn golden_build_zdg_table() {
    golden("build_z9_1_zdg.txt", &["build", "Z9", "1", "zdg", "--format", "table"]);
}

#[test]
fn golden_invariants() {
    golden("invariant_z3_2_domination.json", &["invariant", "Z3", "2", "td", "domination"]);
    golden("invariant_z5_2_independence.json", &["invariant", "Z5", "2", "td", "independence"]);
    golden("invariant_z3_3_planar.json", &["invariant", "Z3", "3", "td", "planar"]);
}

#[test]
fn golden_verify() {
    golden("verify_planarity.jsonl", &["verify", "planarity-*"]);
    golden("verify_domination_field.jsonl", &["verify", "--filter", "domination-field"]);
}

#[test]
fn build_outputs() {
    let dot = stdout(&tdgraph(&["build", "Z2", "3", "td", "--format", "dot"]));
    assert_eq!(dot.matches("label=").count(), 7);
    assert_eq!(dot.matches(" -- ").count(), 9);

    let json: Value = serde_json::from_str(&stdout(&tdgraph(&["build", "Z2", "3", "tdbar", "--format", "json"]))).unwrap();
    let labels: Vec<&str> =
        json["loops"].as_array().unwrap().iter().map(|v| json["vertices"][v.as_u64().unwrap() as usize]["label"].as_str().unwrap()).collect();
    assert_eq!(labels, ["000", "011", "101", "110"]);

    let table = stdout(&tdgraph(&["build", "Z9", "1", "zdg", "--format", "table"]));
    assert!(table.starts_with("vertices 2  edges 1  loops 0\n"));
    assert!(table.ends_with("edges\n  3 -- 6\n"));
}

#[test]
fn invariant_values() {
    let v: Value = serde_json::from_str(&stdout(&tdgraph(&["invariant", "Z3", "2", "td", "domination"]))).unwrap();
    assert_eq!(v["value"], 4);
    assert_eq!(v["witness"].as_array().unwrap().len(), 4);
    assert_eq!(v["config"]["spec"], "Z3");

    let v: Value = serde_json::from_str(&stdout(&tdgraph(&["invariant", "Z5", "2", "td", "independence"]))).unwrap();
    assert_eq!(v["value"], 10);

    let v: Value = serde_json::from_str(&stdout(&tdgraph(&["invariant", "Z3", "3", "td", "planar"]))).unwrap();
    assert_eq!(v["value"], false);
    assert!(!v["witness_edges"].as_array().unwrap().is_empty());
}

#[test]
fn verify_stream_shape() {
    let text = stdout(&tdgraph(&["verify", "planarity-*"]));
    let lines: Vec<Value> = text.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 11);
    assert_eq!(lines[0]["config"]["filter"], "planarity-*");
    assert!(lines[1..10].iter().all(|r| r["status"] == "confirmed"));
    assert_eq!(lines[10]["summary"]["confirmed"], 9);

    let text = stdout(&tdgraph(&["verify", "domination-field"]));
    assert!(text.lines().any(|l| l.contains(r#""params":{"n":2,"r":"Z2"}"#) && l.contains("refuted-expected")));
}

#[test]
fn verify_is_deterministic() {
    let a = mask(&stdout(&tdgraph(&["verify", "clique-*"])));
    let b = mask(&stdout(&tdgraph(&["verify", "clique-*"])));
    assert_eq!(a, b);
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| tdgraph(args).status.code().unwrap();
    assert_eq!(code(&["build", "Z2", "2", "td"]), 0);
    assert_eq!(code(&["build", "Z(4", "2", "td"]), 2);
    assert_eq!(code(&["build", "GF(6)", "2", "td"]), 2);
    assert_eq!(code(&["build", "Z9", "2", "zdg"]), 2);
    assert_eq!(code(&["build", "Z2", "2", "nosuch"]), 2);
    assert_eq!(code(&["build", "Z2", "20", "td"]), 3);
    assert_eq!(code(&["build", "Z2", "5", "td", "--cap", "16"]), 3);
    assert_eq!(code(&["invariant", "Z2", "2", "td", "nosuch"]), 4);
    assert_eq!(code(&["verify", "nosuch-*"]), 4);
    assert_eq!(code(&["verify", "planarity-*", "--budget", "huge"]), 2);
    assert_eq!(code(&["invariant", "Z3", "2", "td", "girth"]), 0);
}

#[test]
fn parse_error_names_position() {
    let out = tdgraph(&["build", "Z2xQ", "2", "td"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("position 3"));
}

#[test]
fn export_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.dot");
    let out = tdgraph(&["export", "Z2", "3", "td", "--format", "dot", "-o", path.to_str().unwrap()]);
    assert!(out.status.success());
    let built = stdout(&tdgraph(&["build", "Z2", "3", "td", "--format", "dot"]));
    assert_eq!(std::fs::read_to_string(&path).unwrap(), built);
    let summary: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(summary["edges"], 9);
}
