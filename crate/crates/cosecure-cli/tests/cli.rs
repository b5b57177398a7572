//! End-to-end tests of the `cosecure` binary: output formats, determinism,
//! and the documented exit codes (0 ok, 2 parse error, 3 guard, 4 property
//! failure).

use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_cosecure"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn tmp(name: &str, content: &str) -> PathBuf {
    let dir = std::env::temp_dir().join("cosecure-cli-tests");
    fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    fs::write(&path, content).unwrap();
    path
}

fn p4_file() -> PathBuf {
    tmp("p4.edges", "4 3\n0 1\n1 2\n2 3\n")
}

#[test]
fn solve_p4() {
    let out = run(&["solve", p4_file().to_str().unwrap()]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("gamma=2 gamma_cs=2"));
}

#[test]
fn solve_reports_witness_and_json() {
    let out = run(&["solve", p4_file().to_str().unwrap(), "--witness", "--json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["gamma"], 2);
    assert_eq!(v["gamma_cs"], 2);
    assert_eq!(v["certificate"]["valid"], true);
}

#[test]
fn solve_complete_bipartite_value() {
    let k23 = tmp("k23.edges", "5 6\n0 2\n0 3\n0 4\n1 2\n1 3\n1 4\n");
    let out = run(&["solve", k23.to_str().unwrap()]);
    assert!(stdout(&out).contains("gamma_cs=2"));
}

#[test]
fn solve_isolated_vertex_exits_4() {
    let f = tmp("isolated.edges", "3 1\n0 1\n");
    let out = run(&["solve", f.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn solve_guard_exit_3_and_force() {
    let mut text = String::from("25 24\n");
    for i in 0..24 {
        text.push_str(&format!("{} {}\n", i, i + 1));
    }
    let f = tmp("p25.edges", &text);
    let out = run(&["solve", f.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
    let out = run(&["solve", f.to_str().unwrap(), "--force"]);
    assert!(out.status.success());
}

#[test]
fn parse_error_exits_2() {
    let f = tmp("dup.edges", "2 2\n0 1\n0 1\n");
    let out = run(&["solve", f.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr).into_owned();
    assert!(err.contains("line 3"));
}

#[test]
fn verify_valid_and_invalid() {
    let f = p4_file();
    let out = run(&["verify", f.to_str().unwrap(), "--set", "1,2", "--json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["replacement"], serde_json::json!([[1, 0], [2, 3]]));

    let out = run(&["verify", f.to_str().unwrap(), "--set", "0", "--json"]);
    assert_eq!(out.status.code(), Some(4));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["kind"], "not-dominating");
    assert_eq!(v["vertex"], 2);
}

#[test]
fn chain_p4_and_c6() {
    let out = run(&["chain", p4_file().to_str().unwrap()]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("k=2 gamma_cs=2"));

    let c6 = tmp("c6.edges", "6 6\n0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n");
    let out = run(&["chain", c6.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(4));
    let err = String::from_utf8_lossy(&out.stderr).into_owned();
    assert!(err.contains("not a chain graph"));
}

#[test]
fn solve_per_component_breakdown() {
    let two_p4 = tmp("twop4b.edges", "8 6\n0 1\n1 2\n2 3\n4 5\n5 6\n6 7\n");
    let out = run(&["solve", two_p4.to_str().unwrap(), "--per-component"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("gamma=4 gamma_cs=4"));
    assert!(text.contains("component 0: gamma=2 gamma_cs=2"));
    assert!(text.contains("component 1: gamma=2 gamma_cs=2"));
}

#[test]
fn chain_disconnected_sums() {
    let two_p4 = tmp("twop4.edges", "8 6\n0 1\n1 2\n2 3\n4 5\n5 6\n6 7\n");
    let out = run(&["chain", two_p4.to_str().unwrap(), "--json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["gamma_cs"], 4);
    assert_eq!(v["components"].as_array().unwrap().len(), 2);
}

#[test]
fn reduce_gy4_writes_deterministic_files() {
    let k2 = tmp("k2.edges", "2 1\n0 1\n");
    let dir = std::env::temp_dir().join("cosecure-cli-tests");
    let out_prefix = dir.join("k2gy4");
    let out = run(&[
        "reduce",
        "gy4",
        k2.to_str().unwrap(),
        out_prefix.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let edges = fs::read_to_string(dir.join("k2gy4.edges")).unwrap();
    assert!(edges.starts_with("10 9\n"));
    let meta: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(dir.join("k2gy4.meta.json")).unwrap()).unwrap();
    assert_eq!(meta["kind"], "gy4");
    assert_eq!(meta["offset"], 2);

    // rerun must produce identical bytes
    let out2 = run(&[
        "reduce",
        "gy4",
        k2.to_str().unwrap(),
        out_prefix.to_str().unwrap(),
    ]);
    assert!(out2.status.success());
    assert_eq!(edges, fs::read_to_string(dir.join("k2gy4.edges")).unwrap());
}

#[test]
fn reduce_star_convex_offsets() {
    let k11 = tmp("k11.edges", "2 1\n0 1\n");
    let dir = std::env::temp_dir().join("cosecure-cli-tests");
    let prefix = dir.join("k11star");
    let out = run(&[
        "reduce",
        "star-convex",
        k11.to_str().unwrap(),
        prefix.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let meta: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(dir.join("k11star.meta.json")).unwrap()).unwrap();
    assert_eq!(meta["offset"], 6);
    let edges = fs::read_to_string(dir.join("k11star.edges")).unwrap();
    assert!(edges.starts_with("12 15\n"));
}

#[test]
fn reduce_set_cover() {
    let inst = tmp("cover.sc", "2 1\n1 2\n");
    let dir = std::env::temp_dir().join("cosecure-cli-tests");
    let prefix = dir.join("coverg");
    let out = run(&[
        "reduce",
        "set-cover",
        inst.to_str().unwrap(),
        prefix.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let edges = fs::read_to_string(dir.join("coverg.edges")).unwrap();
    assert!(edges.starts_with("10 "));
    let meta: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(dir.join("coverg.meta.json")).unwrap()).unwrap();
    assert_eq!(meta["offset"], 4);
    assert_eq!(meta["witness"]["shape"], "dpeo");
}

#[test]
fn xcheck_pendant_path_ok() {
    let out = run(&["xcheck", "pendant-path", "--max-n", "3"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("0 violations"));
}

#[test]
fn gen_is_deterministic() {
    let a = run(&["gen", "chain", "--max-n", "10", "--seed", "42"]);
    let b = run(&["gen", "chain", "--max-n", "10", "--seed", "42"]);
    assert!(a.status.success());
    assert_eq!(stdout(&a), stdout(&b));
}

#[test]
fn gen_chain_classes_gives_p4_shape() {
    let out = run(&["gen", "chain", "--classes", "1,1/1,1"]);
    assert!(out.status.success());
    let g = cosecure::graph::Graph::parse_edge_list(&stdout(&out)).unwrap();
    assert_eq!((g.n(), g.m()), (4, 3));
    let mut degs: Vec<usize> = (0..4).map(|v| g.degree(v)).collect();
    degs.sort_unstable();
    assert_eq!(degs, vec![1, 1, 2, 2]);
}

#[test]
fn gen_complete_bipartite() {
    let out = run(&["gen", "complete-bipartite", "--p", "2", "--q", "3"]);
    let g = cosecure::graph::Graph::parse_edge_list(&stdout(&out)).unwrap();
    assert_eq!((g.n(), g.m()), (5, 6));
}

#[test]
fn check_class_verdicts() {
    let c6 = tmp("c6b.edges", "6 6\n0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n");
    let out = run(&["check-class", "chordal-bipartite", c6.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(4));

    let tree = tmp("tree.edges", "4 3\n0 1\n0 2\n0 3\n");
    let out = run(&["check-class", "chordal-bipartite", tree.to_str().unwrap()]);
    assert!(out.status.success());

    let out = run(&[
        "check-class",
        "dpeo",
        tree.to_str().unwrap(),
        "--order",
        "1,2,3,0",
        "--json",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["ok"], true);

    let out = run(&[
        "check-class",
        "star",
        "--vertices",
        "0,1,2,3",
        "--tree",
        "0-1,0-2,0-3",
        "--json",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["witness"], 0);
}
