//! End-to-end checks of the command-line surface: file round-trips, exit
//! codes, and output formats.

use std::process::Command;

use proptest::prelude::*;

use clawmat::graph::SimpleGraph;
use clawmat::matroid::Matroid;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_clawmat"))
}

#[test]
fn construct_then_analyze_roundtrip() {
    let dir = tempfile::tempdir().unwrap();
    for family in ["pg:4", "ag:4", "mrt:5,2", "free:3", "cc:3,3+1", "gnt:9,2"] {
        let path = dir.path().join("out.txt");
        let status = bin()
            .args(["construct", "--family", family, "--out"])
            .arg(&path)
            .status()
            .unwrap();
        assert!(status.success(), "construct {family}");
        let out = bin()
            .args(["analyze", "--in"])
            .arg(&path)
            .output()
            .unwrap();
        assert!(out.status.success(), "analyze {family}");
        assert!(!out.stdout.is_empty());
    }
}

#[test]
fn mrt_example_has_ten_columns_and_max_claw_two() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("m.txt");
    assert!(bin()
        .args(["construct", "--family", "mrt:5,2", "--out"])
        .arg(&path)
        .status()
        .unwrap()
        .success());
    let m = Matroid::parse(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(m.n(), 10);
    let out = bin()
        .args(["analyze", "--claws", "--in"])
        .arg(&path)
        .output()
        .unwrap();
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("max claw size: 2"), "{text}");
}

#[test]
fn bad_flags_exit_64() {
    let out = bin().args(["verify", "nonsense"]).output().unwrap();
    assert_eq!(out.status.code(), Some(64));
    let out = bin().args(["--no-such-flag"]).output().unwrap();
    assert_eq!(out.status.code(), Some(64));
}

#[test]
fn budget_zero_exits_incomplete() {
    let out = bin()
        .args(["verify", "graph", "--n", "8", "--t", "2", "--budget-seconds", "0"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("incomplete"), "{text}");
}

#[test]
fn verify_graph_table_matches_example() {
    let out = bin()
        .args(["verify", "graph", "--n", "7", "--t", "2", "--format", "table"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("observed_min         9"), "{text}");
    assert!(text.contains("K4+K3"), "{text}");
}

#[test]
fn tables_f_row() {
    let out = bin()
        .args(["tables", "f", "--r-max", "6", "--t-max", "3"])
        .output()
        .unwrap();
    let text = String::from_utf8(out.stdout).unwrap();
    let row6: Vec<&str> = text
        .lines()
        .find(|l| l.starts_with("6"))
        .expect("row for r=6")
        .split('\t')
        .collect();
    assert_eq!(row6, vec!["6", "63", "14", "9"]);
}

#[test]
fn report_file_output_is_json() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    assert!(bin()
        .args(["verify", "lowrank", "--r", "2", "--t", "1", "--n-max", "3", "--out"])
        .arg(&path)
        .status()
        .unwrap()
        .success());
    let text = std::fs::read_to_string(&path).unwrap();
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["observed_min"], 3);
    assert!(v.get("runtime_seconds").is_none());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn graph_file_roundtrip(n in 1usize..10, edges in proptest::collection::vec((0usize..10, 0usize..10), 0..20)) {
        let mut g = SimpleGraph::empty(n).unwrap();
        for (u, v) in edges {
            if u < n && v < n && u != v {
                g.add_edge(u, v).unwrap();
            }
        }
        let back = SimpleGraph::parse(&g.serialize()).unwrap();
        prop_assert_eq!(back, g);
    }

    #[test]
    fn binary_matroid_file_roundtrip(r in 1usize..6, seed in any::<u64>()) {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let max = (1u32 << r) - 1;
        let columns: Vec<u32> = (0..rng.gen_range(1..=10)).map(|_| rng.gen_range(0..=max)).collect();
        let m = Matroid::Binary(clawmat::matroid::BinaryMatroid::new(r, columns).unwrap());
        let back = Matroid::parse(&m.serialize()).unwrap();
        prop_assert_eq!(back, m);
    }
}
