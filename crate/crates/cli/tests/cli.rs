use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn tritau(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tritau"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json_file(path: &Path) -> Value {
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn gen_writes_one_graph6_line() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("g.g6");
    let o = tritau(&[
        "gen",
        "--kind",
        "gnp",
        "--n",
        "64",
        "--theta",
        "0.75",
        "--seed",
        "7",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&out).unwrap();
    assert_eq!(text.lines().count(), 1);
    let g = tritau_core::graph::graph6::decode(text.trim_end()).unwrap();
    assert_eq!(g.order(), 64);
}

#[test]
fn solve_tau_on_k4() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "k4.g6", "C~\n");
    let out = dir.path().join("r.json");
    let o = tritau(&[
        "solve",
        "--problem",
        "tau",
        "--in",
        &input,
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let doc = json_file(&out);
    assert_eq!(doc["results"][0]["value"], 2.0);
    assert_eq!(doc["results"][0]["certificate_valid"], true);
    assert_eq!(doc["tool"], "tritau");
    assert!(doc["version"].is_string());
    assert_eq!(doc["config"]["common"]["seed"], 0);
    for method in ["oracle", "bnb"] {
        let o = tritau(&[
            "solve",
            "--problem",
            "alpha1",
            "--method",
            method,
            "--in",
            &input,
        ]);
        let doc: Value = serde_json::from_slice(&o.stdout).unwrap();
        assert_eq!(doc["results"][0]["value"], 2.0);
    }
}

#[test]
fn solve_join_method() {
    let dir = tempfile::tempdir().unwrap();
    // C5
    let input = write(dir.path(), "c5.g6", "Dhc\n");
    let o = tritau(&[
        "solve",
        "--problem",
        "tau",
        "--method",
        "join",
        "--k",
        "1",
        "--in",
        &input,
    ]);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    let doc: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(doc["results"][0]["value"], 3.0);
    assert_eq!(doc["results"][0]["certificate_valid"], true);
}

#[test]
fn verify_tritau_passes() {
    let o = tritau(&["verify", "tritau", "--exhaustive-n", "5", "--k", "1,2,3"]);
    assert_eq!(o.status.code(), Some(0));
    let doc: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(doc["results"]["summary"]["fail"], 0);
    assert_eq!(doc["results"]["checks"][0]["verdict"], "pass");
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(tritau(&["solve", "--bogus"]).status.code(), Some(2));
    assert_eq!(tritau(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        tritau(&["solve", "--problem", "phi", "--in", "/nonexistent"])
            .status
            .code(),
        Some(2)
    );
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.g6", "C~\nD Qc\n");
    let o = tritau(&["solve", "--problem", "tau", "--in", &bad]);
    assert_eq!(o.status.code(), Some(2));
    assert!(
        String::from_utf8_lossy(&o.stderr).contains("byte 1")
            && String::from_utf8_lossy(&o.stderr).contains("line 2")
    );
}

#[test]
fn failed_check_exits_one_with_witness() {
    let dir = tempfile::tempdir().unwrap();
    let empty = write(dir.path(), "e.g6", "I????????\n");
    let o = tritau(&[
        "verify", "density", "--in", &empty, "--p", "0.5", "--eps", "0.5",
    ]);
    assert_eq!(o.status.code(), Some(1));
    let doc: Value = serde_json::from_slice(&o.stdout).unwrap();
    let check = &doc["results"]["checks"][0];
    assert_eq!(check["verdict"], "fail");
    assert!(check["counterexample"]["set"].as_array().unwrap().len() >= 5);
}

#[test]
fn exhausted_budget_with_require_exact_exits_three() {
    let dir = tempfile::tempdir().unwrap();
    let k9 = write(dir.path(), "k9.g6", "H~~~~~~\n");
    let args = [
        "solve",
        "--problem",
        "tau",
        "--in",
        &k9,
        "--budget-nodes",
        "1",
    ];
    assert_eq!(tritau(&args).status.code(), Some(0));
    let mut strict = args.to_vec();
    strict.push("--require-exact");
    let o = tritau(&strict);
    assert_eq!(o.status.code(), Some(3));
    let doc: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(doc["results"][0]["outcome"]["status"], "BOUNDED");
}

#[test]
fn sweep_rows_and_sidecar() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("t.csv");
    let o = tritau(&[
        "sweep",
        "--n",
        "64",
        "--seeds",
        "1,2,3",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let mut reader = csv::Reader::from_path(&out).unwrap();
    let headers = reader.headers().unwrap().clone();
    let rows: Vec<_> = reader.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 3);
    let col = |name: &str| headers.iter().position(|h| h == name).unwrap();
    for (row, seed) in rows.iter().zip(["1", "2", "3"]) {
        assert_eq!(&row[col("params.seed")], seed);
        assert!(!row[col("premises.all")].is_empty());
    }
    let sidecar = json_file(&dir.path().join("t.csv.json"));
    assert_eq!(sidecar["results"]["rows"], 3);
    assert!(sidecar["version"].is_string());
}

#[test]
fn sweep_is_total_when_floor_of_k_is_zero() {
    let o = tritau(&["sweep", "--n", "4,64", "--d", "0.1", "--seeds", "0"]);
    assert_eq!(o.status.code(), Some(0));
    let mut reader = csv::Reader::from_reader(o.stdout.as_slice());
    let headers = reader.headers().unwrap().clone();
    let rows: Vec<_> = reader.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 2);
    let k_int = headers.iter().position(|h| h == "k_int").unwrap();
    let flag = headers
        .iter()
        .position(|h| h == "premises.k_int_positive")
        .unwrap();
    assert_eq!(&rows[0][k_int], "0");
    assert_eq!(&rows[0][flag], "false");
}

#[test]
fn parallel_sweep_matches_sequential() {
    let args = [
        "sweep", "--n", "32,48", "--seeds", "0,1,2", "--d", "0.4,0.7",
    ];
    let seq = tritau(&args);
    let mut par_args = args.to_vec();
    par_args.extend(["--parallel", "4"]);
    let par = tritau(&par_args);
    assert_eq!(seq.stdout, par.stdout);
}

#[test]
fn construct_reports() {
    let o = tritau(&[
        "construct",
        "norin",
        "--n",
        "30",
        "--effort",
        "200",
        "--c",
        "2",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let doc: Value = serde_json::from_slice(&o.stdout).unwrap();
    let report = &doc["results"]["report"];
    assert_eq!(report["verdict"], report["predicate"]);
    assert!(doc["results"]["h_graph6"].is_string());

    let o = tritau(&[
        "construct",
        "egt",
        "--n",
        "48",
        "--seed",
        "2",
        "--direct-tau",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let doc: Value = serde_json::from_slice(&o.stdout).unwrap();
    let r = &doc["results"];
    assert_eq!(r["tau"]["lower"], r["tau_direct"]["lower"]);
    assert!(r["g_graph6"].is_string());
    assert!(doc.to_string().find("\"seconds\"").is_none());
}

#[test]
fn timings_only_on_request() {
    let o = tritau(&["construct", "egt", "--n", "32", "--timings"]);
    assert!(String::from_utf8_lossy(&o.stdout).contains("\"seconds\""));
}
