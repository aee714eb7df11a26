use std::process::{Command, Output};

use poscodeg::io::{parse_hg, write_hg};
use poscodeg_core::constructions;
use serde_json::Value;

fn poscodeg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_poscodeg"))
        .args(args)
        .env_remove("POSCODEG_JOBS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

#[test]
fn delta_of_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("k222.hg");
    std::fs::write(&path, write_hg(&constructions::balanced_complete_k_partite(6, 3).unwrap())).unwrap();
    let o = poscodeg(&["delta", "-H", path.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).trim(), "2");
}

#[test]
fn freeness_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p6.hg");
    std::fs::write(&path, write_hg(&constructions::balanced_complete_k_partite(12, 6).unwrap())).unwrap();
    assert_eq!(code(&poscodeg(&["free", "-F", "Fano", "-H", path.to_str().unwrap()])), 0);
    assert_eq!(code(&poscodeg(&["free", "-F", "K4-", "-H", path.to_str().unwrap()])), 1);
    assert_eq!(code(&poscodeg(&["free", "-F", "K4-", "-H", "K4"])), 1);
}

#[test]
fn search_reports_value_and_witnesses() {
    let o = poscodeg(&["search", "-F", "K4-", "--n", "6"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert!(text.lines().any(|l| l == "value 2"), "{text}");
    assert!(text.lines().any(|l| l == "exhaustive true"), "{text}");

    let o = poscodeg(&["search", "-F", "K4-", "--n", "6", "--json"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["exact_value"], 2);
    assert_eq!(v["exhaustive"], true);
    assert!(v["witnesses"].as_array().unwrap().len() >= 2);
    assert!(v.get("wall_time").is_none());
}

#[test]
fn decision_mode() {
    let o = poscodeg(&["search", "-F", "K4-", "--n", "6", "--k", "2", "--json"]);
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["outcome"], "witness");
    let o = poscodeg(&["search", "-F", "K4-", "--n", "6", "--k", "3", "--json"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["outcome"], "refuted");
}

#[test]
fn budget_infeasible_and_usage_exit_codes() {
    let o = poscodeg(&["search", "-F", "K4-", "--n", "7", "--budget", "10"]);
    assert_eq!(code(&o), 2);
    assert!(stdout(&o).contains("exhaustive false"));
    assert_eq!(code(&poscodeg(&["search", "-F", "K4-", "--n", "9"])), 3);
    assert_eq!(code(&poscodeg(&["bogus"])), 64);
    assert_eq!(code(&poscodeg(&["delta", "-H", "/no/such/file"])), 64);
    assert_eq!(code(&poscodeg(&["search", "-F", "nothing", "--n", "5"])), 64);
    assert_eq!(code(&poscodeg(&["--help"])), 0);
}

#[test]
fn jobs_from_the_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_poscodeg"))
        .args(["search", "-F", "F5", "--n", "5", "--json"])
        .env("POSCODEG_JOBS", "3")
        .output()
        .unwrap();
    assert_eq!(o.stdout, poscodeg(&["search", "-F", "F5", "--n", "5", "--json", "--jobs", "1"]).stdout);
}

#[test]
fn catalog_listing() {
    let o = poscodeg(&["catalog", "list"]);
    assert_eq!(code(&o), 0);
    let names: Vec<String> = stdout(&o).lines().map(|l| l.split_whitespace().next().unwrap().to_string()).collect();
    for name in ["K4-", "F5", "F32", "Fano", "K4", "F33", "C5", "C5-", "J4", "H6", "K222"] {
        assert!(names.iter().any(|n| n == name), "{name}");
    }
    let o = poscodeg(&["catalog", "show", "H6"]);
    let h6 = parse_hg(&stdout(&o)).unwrap();
    assert_eq!((h6.n(), h6.edge_count()), (6, 10));
    assert_eq!(code(&poscodeg(&["catalog", "show", "K9"])), 64);
}

#[test]
fn generators_emit_parseable_graphs() {
    let cases: [(&[&str], usize, usize); 6] = [
        (&["gen", "partite", "--n", "30", "--k", "6"], 30, 20),
        (&["gen", "one-way", "--x", "15", "--y", "15"], 30, 14),
        (&["gen", "h6-blowup", "--sizes", "1,1,1,1,1,1"], 6, 2),
        (&["gen", "k222", "--q", "2", "--x", "3"], 17, 3),
        (&["gen", "jk", "--k", "4"], 5, 1),
        (&["gen", "blowup", "-G", "H6", "--m", "2"], 12, 4),
    ];
    for (args, n, delta) in cases {
        let o = poscodeg(args);
        assert_eq!(code(&o), 0, "{args:?}");
        let h = parse_hg(&stdout(&o)).unwrap();
        assert_eq!(h.n(), n, "{args:?}");
        assert_eq!(h.min_positive_codegree().unwrap(), delta, "{args:?}");
    }
    let o = poscodeg(&["gen", "circle", "--n", "5", "--json"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["n"], 5);
}

#[test]
fn verify_subcommands() {
    let o = poscodeg(&["verify", "edge-bound", "-H", "K4", "--json"]);
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["holds"], true);
    assert_eq!(v["rhs"], "4/3");
    assert_eq!(code(&poscodeg(&["verify", "supersaturation", "-H", "K4"])), 0);
    assert_eq!(code(&poscodeg(&["verify", "classification", "--n", "6"])), 0);
    assert_eq!(code(&poscodeg(&["verify", "dichotomy", "-F", "K4-"])), 0);
    assert_eq!(code(&poscodeg(&["verify", "span-profile", "-H", "H6"])), 0);
    assert_eq!(code(&poscodeg(&["verify", "span-profile", "-H", "K4"])), 1);
    assert_eq!(code(&poscodeg(&["verify", "edge-bound"])), 64);
}

#[test]
fn table_lists_every_catalog_graph() {
    let o = poscodeg(&["table", "--n", "30", "--json"]);
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 9);
    let k4 = rows.iter().find(|r| r["forbidden"] == "K4").unwrap();
    assert_eq!((k4["delta"].as_u64(), k4["free"].as_bool()), (Some(14), Some(true)));
}
