use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn cubmatch(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cubmatch"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("valid json")
}

#[test]
fn analyze_k33() {
    let v = json(&cubmatch(&["analyze", "--named", "K3,3"]));
    assert_eq!(v["rho"], 9);
    assert_eq!(v["lambda"], 0);
    assert_eq!(v["n"], 6);
}

#[test]
fn analyze_is_byte_identical_across_runs() {
    let a = cubmatch(&["analyze", "--named", "K33sK4"]);
    let b = cubmatch(&["analyze", "--named", "K33sK4"]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(json(&a)["lambda"], 6);
}

#[test]
fn decompose_k33_splice_k4() {
    let v = json(&cubmatch(&[
        "decompose",
        "--named",
        "K33sK4",
        "--mode",
        "tight",
    ]));
    let mut names: Vec<&str> = v["leaves"]
        .as_array()
        .unwrap()
        .iter()
        .map(|l| l["name"].as_str().unwrap())
        .collect();
    names.sort();
    assert_eq!(names, ["K33", "K4"]);
}

#[test]
fn decompose_two_cut_dot() {
    let out = cubmatch(&[
        "decompose",
        "--named",
        "K33gThetagK33",
        "--mode",
        "two-cut",
        "--output",
        "dot",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("digraph decomposition"));
    assert_eq!(text.matches("piece").count(), 3);
}

#[test]
fn verify_exhaustive_is_green() {
    let out = cubmatch(&["verify", "--exhaustive", "10", "--jobs", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let last: Value = serde_json::from_str(text.lines().last().unwrap()).unwrap();
    assert_eq!(last["summary"]["red"], 0);
    assert_eq!(last["summary"]["graphs"], text.lines().count() - 1);
}

#[test]
fn verify_families() {
    let out = cubmatch(&["verify", "--families", "1", "--max-n", "0"]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stdout)
    );
}

#[test]
fn edge_list_file_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("theta.txt");
    fs::write(&path, "cubmatch v1 n=2\n0 1\n0 1\n0 1\n").unwrap();
    let v = json(&cubmatch(&["analyze", "--input", path.to_str().unwrap()]));
    assert_eq!(v["rho"], 1);
    fs::write(&path, "cubmatch v1 n=4\n0 1\n2 2\n").unwrap();
    let out = cubmatch(&["analyze", "--input", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));
}

#[test]
fn graph6_input() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("petersen.g6");
    fs::write(&path, "IheA@GUAo\n").unwrap();
    let v = json(&cubmatch(&[
        "analyze",
        "--input",
        path.to_str().unwrap(),
        "--format",
        "graph6",
    ]));
    assert_eq!(v["n"], 10);
    assert_eq!(v["lambda"], 10);
}

#[test]
fn generate_to_directory() {
    let dir = tempfile::tempdir().unwrap();
    let out = cubmatch(&[
        "generate",
        "--n",
        "8",
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert_eq!(fs::read_dir(dir.path()).unwrap().count(), 20);
    let out = cubmatch(&["generate", "--n", "8", "--simple", "--format", "graph6"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap().lines().count(), 5);
    let out = cubmatch(&["generate", "--n", "4", "--format", "graph6"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn family_generate_and_recognize() {
    let v = json(&cubmatch(&["family", "k", "--depth", "1"]));
    assert_eq!(v["family"], "K");
    assert_eq!(v["graph"]["n"], 10);
    let v = json(&cubmatch(&["family", "k", "--named", "Cube"]));
    assert_eq!(v["member"], false);
    let v = json(&cubmatch(&["family", "g", "--named", "Petersen"]));
    assert_eq!(v["member"], true);
    let v = json(&cubmatch(&["family", "negative", "--depth", "14"]));
    assert_eq!(v["graph"]["n"], 14);
}

#[test]
fn oracle_agrees_on_fixture() {
    let v = json(&cubmatch(&["oracle", "--named", "K33sK33"]));
    assert_eq!(v["agree"], true);
    assert_eq!(v["fast"]["rho"], 21);
}

#[test]
fn usage_errors() {
    assert_eq!(cubmatch(&["analyze"]).status.code(), Some(2));
    assert_eq!(
        cubmatch(&["analyze", "--named", "Nope"]).status.code(),
        Some(2)
    );
    assert!(!cubmatch(&["frobnicate"]).status.success());
}
