use std::path::PathBuf;
use std::process::{Command, Output};

use matsplit::parse_matroid_file;
use matsplit_core::split::es_splitting;
use matsplit_core::SplitSpec;

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_matsplit")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn p(name: &str) -> String {
    data(name).to_str().unwrap().to_owned()
}

#[test]
fn analyze_p8() {
    let o = run(&["analyze", &p("p8.mat")]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("rank 4\n"));
    assert!(out.contains("circuits (26)\n"));
    assert!(out.contains("connectivity 3-connected\n"));
    assert!(out.contains("eulerian yes {1,4,5,8} {2,3,6,7}\n"));
    assert!(out.contains("hamiltonian yes {1,2,3,5,6}\n"));
    assert!(out.contains("bipartite no\n"));
}

#[test]
fn analyze_gf5_json() {
    let o = run(&["analyze", &p("gf5.mat"), "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["name"], "gf5");
    assert_eq!(v["field"], 5);
    assert_eq!(v["ground"], serde_json::json!([1, 2, 3, 4, 5]));
    assert_eq!(v["circuits"], serde_json::json!([[1, 2, 5], [3, 4, 5], [1, 2, 3, 4]]));
    assert!(v["eulerian"].is_null());
}

#[test]
fn analyze_empty_ground() {
    let o = run(&["analyze", &p("empty.mat")]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("rank 0\n"));
}

#[test]
fn esplit_writes_golden_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("out.mat");
    let o = run(&["esplit", &p("p8.mat"), "-a", "1", "-b", "4", "-e", "4", "-o", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let written = std::fs::read_to_string(&out).unwrap();
    assert_eq!(written, std::fs::read_to_string(data("p8_es_1_4_4.mat")).unwrap());
    let back = parse_matroid_file(&written).unwrap();
    let m = parse_matroid_file(&std::fs::read_to_string(data("p8.mat")).unwrap()).unwrap().matroid;
    let es = es_splitting(&m, &SplitSpec::new(&m, 1, 4, 4).unwrap()).unwrap();
    assert_eq!(back.matroid.matrix(), es.matrix());
}

#[test]
fn split_and_elsplit() {
    let o = run(&["split", &p("p8.mat"), "-a", "1", "-b", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with("1 0 0 1 0 0 0 0\nend\n"));
    let o = run(&["elsplit", &p("p8.mat"), "-a", "1", "-b", "4"]);
    assert!(stdout(&o).contains("elements 1 2 3 4 5 6 7 8 9\n"));
}

#[test]
fn invalid_spec_is_usage_error() {
    let o = run(&["esplit", &p("p8.mat"), "-a", "1", "-b", "1", "-e", "1"]);
    assert_eq!(o.status.code(), Some(1));
    let o = run(&["esplit", &p("p8.mat"), "-a", "1", "-b", "4", "-e", "2"]);
    assert_eq!(o.status.code(), Some(1));
    let o = run(&["esplit", &p("p8.mat"), "-a", "1", "-b", "4"]);
    assert_eq!(o.status.code(), Some(1));
    let o = run(&["frobnicate"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn bad_files() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.mat");
    std::fs::write(&bad, "matroid x\nfield 3\nelements 1 2\nmatrix\n1 3\nend\n").unwrap();
    let o = run(&["analyze", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 5"));
    let o = run(&["analyze", dir.path().join("missing.mat").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn oversized_ground_set() {
    let dir = tempfile::tempdir().unwrap();
    let big = dir.path().join("big.mat");
    let labels: Vec<String> = (1..=24).map(|i| i.to_string()).collect();
    let row: Vec<String> = (0..24).map(|i| (i % 2).to_string()).collect();
    std::fs::write(&big, format!("matroid big\nfield 2\nelements {}\nmatrix\n{}\nend\n", labels.join(" "), row.join(" ")))
        .unwrap();
    let o = run(&["report", big.to_str().unwrap(), "-a", "1", "-b", "2", "-e", "2", "--allow-coloops"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("exceeds the enumeration limit"));
}

#[test]
fn report_groups() {
    let o = run(&["report", &p("p8.mat"), "-a", "1", "-b", "4", "-e", "4", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let groups = v["groups"].as_array().unwrap();
    let classes: Vec<&str> = groups.iter().map(|g| g["class"].as_str().unwrap()).collect();
    assert_eq!(classes, ["C0", "np", "C4", "C5", "C6", "C7", "C8", "Delta"]);
    assert_eq!(v["counts"], serde_json::json!([26, 8, 46]));
    assert_eq!(groups[7]["es"], serde_json::json!([[4, 9, 10]]));
    let text = run(&["report", &p("p8.mat"), "-a", "1", "-b", "4", "-e", "4"]);
    assert!(stdout(&text).contains("prediction matches oracle: yes"));
    assert_eq!(text.stdout, run(&["report", &p("p8.mat"), "-a", "1", "-b", "4", "-e", "4"]).stdout);
}

#[test]
fn verify_exit_codes() {
    let o = run(&["verify", &p("p8.mat"), "-a", "1", "-b", "4", "-e", "4", "--suite", "all"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let o = run(&["verify", &p("p8.mat"), "-a", "1", "-b", "4", "-e", "4", "--suite", "circuits", "--corrupt-prediction"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("missing: {4,9,10}"));
    let o = run(&["verify", &p("p8.mat"), "-a", "1", "-b", "4", "-e", "4", "--suite", "nope"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn verify_random_summary_is_pinned() {
    let o = run(&["verify", "--random", "200", "--seed", "0", "--suite", "all"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.starts_with("200 random instances from seed 0\n"));
    assert!(out.contains("circuits: 200 instances, 200 pass, 0 known-deviation, 0 not-applicable, 0 fail\n"));
    assert!(out.contains("rank: 200 instances, 127 pass, 73 known-deviation, 0 not-applicable, 0 fail\n"));
    assert!(out.contains("hamiltonian: 200 instances, 183 pass, 0 known-deviation, 17 not-applicable, 0 fail\n"));
    assert_eq!(o.stdout, run(&["verify", "--random", "200", "--seed", "0", "--suite", "all"]).stdout);
}

#[test]
fn verify_random_binary_field() {
    let o = run(&["verify", "--random", "20", "--p", "2", "--suite", "eulerian"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("eulerian: 20 instances, 0 pass, 0 known-deviation, 20 not-applicable, 0 fail"));
}
