//! The `pathdeg` binary end to end: exit status, JSON records, files.

use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pathdeg")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    let out = run(&all);
    let code = out.status.code().unwrap();
    let text = if code == 2 { out.stderr } else { out.stdout };
    (code, serde_json::from_slice(&text).unwrap_or_else(|e| panic!("{args:?}: {e}")))
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("pathdeg-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn check_reports_both_verdicts() {
    let (code, v) = json(&["check", "-p", "2", "--graph", "fixture:dodecahedron", "--subdivide", "1"]);
    assert_eq!(code, 0);
    assert_eq!(v["degenerate"], true);
    assert_eq!(v["checks"]["certificate_replays"], true);

    let (code, v) = json(&["check", "-p", "3", "--graph", "fixture:dodecahedron", "--subdivide", "1", "--oracle"]);
    assert_eq!(code, 0);
    assert_eq!(v["degenerate"], false);
    assert_eq!(v["girth"], 10);
    assert_eq!(v["checks"]["witness_irreducible"], true);
    assert_eq!(v["checks"]["oracle_agrees"], true);
}

#[test]
fn output_is_deterministic() {
    let args = ["check", "-p", "3", "--graph", "fixture:heawood", "--subdivide", "2"];
    let a = run(&args);
    let b = run(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn errors_exit_2_with_a_record() {
    let (code, v) = json(&["check", "-p", "3", "--graph", "/no/such/file"]);
    assert_eq!(code, 2);
    assert!(v["error"].as_str().unwrap().contains("/no/such/file"));

    let (code, v) = json(&["bounds", "wcol", "-r", "3", "-q", "3"]);
    assert_eq!(code, 2);
    assert_eq!(v["kind"], "bounds");

    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn certificate_round_trip_through_files() {
    let cert = scratch("c7.cert");
    let path = cert.to_str().unwrap();
    assert!(run(&["check", "-p", "3", "--graph", "cycle:7", "--out", path]).status.success());
    let (code, v) = json(&["verify", "certificate", "--graph", "cycle:7", "-p", "3", "--certificate", path]);
    assert_eq!((code, &v["passed"]), (0, &Value::Bool(true)));

    std::fs::write(&cert, "E 0 1 2\n").unwrap();
    let (code, v) = json(&["verify", "certificate", "--graph", "cycle:7", "-p", "3", "--certificate", path]);
    assert_eq!(code, 1);
    assert_eq!(v["checks"]["certificate_replays"], false);
}

#[test]
fn coloring_verifier_finds_poor_cycles() {
    let file = scratch("petersen.col");
    let path = file.to_str().unwrap();
    let base = ["--graph", "fixture:petersen", "--subdivide", "1"];
    let mut args = vec!["color-arb", "-r", "1", "--out", path];
    args.extend(base);
    assert!(run(&args).status.success());

    let mut args = vec!["verify", "coloring", "--coloring", path, "--threshold", "2"];
    args.extend(base);
    assert_eq!(json(&args).0, 0);

    let mut args = vec!["verify", "coloring", "--coloring", path, "--threshold", "3"];
    args.extend(base);
    let (code, v) = json(&args);
    assert_eq!(code, 1);
    assert!(v["poor_cycle"].as_array().is_some_and(|c| c.len() >= 3));
}

#[test]
fn acyclic_coloring_is_checked() {
    let (code, v) = json(&["color-acyclic", "-r", "3", "--graph", "fixture:dodecahedron", "--subdivide", "3"]);
    assert_eq!(code, 0);
    assert_eq!(v["colors"], 3);
    assert_eq!(v["checks"]["proper"], true);
}

#[test]
fn weak_orders_verify() {
    let file = scratch("c9.order");
    let path = file.to_str().unwrap();
    let (code, v) = json(&["wcol-order", "-r", "3", "-q", "4", "--graph", "cycle:9", "--out", path]);
    assert_eq!(code, 0);
    assert_eq!(v["max_wreach"], serde_json::json!([1, 3, 4, 5]));
    let (code, _) = json(&["verify", "order", "--graph", "cycle:9", "-r", "3", "-q", "4", "--order", path]);
    assert_eq!(code, 0);

    std::fs::write(&file, "0 1 2\n").unwrap();
    let (code, v) = json(&["verify", "order", "--graph", "cycle:9", "-r", "3", "-q", "4", "--order", path]);
    assert_eq!(code, 1);
    assert_eq!(v["checks"]["order_matches_graph"], false);
}

#[test]
fn bounds_and_density() {
    let (_, v) = json(&["bounds", "polynomial", "-a", "1", "-b", "1", "-p", "2"]);
    assert_eq!(v["threshold"], 40.0);
    let (_, v) = json(&["bounds", "lambert", "-t", "-0.1"]);
    assert!((v["w"].as_f64().unwrap() + 3.577152063957297).abs() < 1e-12);
    let (_, v) = json(&["density", "--graph", "complete:4", "--nabla", "0"]);
    assert_eq!(v["nabla"], "3/2");
}

#[test]
fn graph_files_are_read() {
    let el = scratch("tri.edges");
    std::fs::write(&el, "# triangle\n0 1\n1 2\n2 0\n").unwrap();
    let (code, v) = json(&["analyze", "--graph", el.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(v["girth"], 3);

    let g6 = scratch("k4.g6");
    std::fs::write(&g6, "C~\n").unwrap();
    let (_, v) = json(&["analyze", "--graph", g6.to_str().unwrap()]);
    assert_eq!(v["size"], 6);
    let (_, v) = json(&["analyze", "--graph", "g6:Bw"]);
    assert_eq!(v["size"], 3);
}
