//! End-to-end tests of the `denniston` binary: exit codes, pinned output
//! formats, byte determinism, and the construct -> verify -> dual ->
//! export pipeline.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_denniston"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 stdout")
}

fn tmpfile(name: &str) -> PathBuf {
    let mut p = std::env::temp_dir();
    p.push(format!("denniston-cli-test-{}-{name}", std::process::id()));
    p
}

#[test]
fn params_output_is_pinned() {
    let out = run(&["params", "--p", "3", "--m", "2", "--r", "1"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "v=729 k=168 lambda=27 mu=42 theta=6,-21\n");
}

#[test]
fn params_domain_errors_exit_2() {
    let out = run(&["params", "--p", "3", "--m", "2", "--r", "2"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["params", "--p", "2", "--m", "2", "--r", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("odd prime"));
}

#[test]
fn usage_errors_exit_2() {
    let out = run(&["params", "--p", "3"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn construct_is_byte_deterministic() {
    for args in [
        vec!["construct", "--kind", "X", "--p", "3", "--m", "2"],
        vec!["construct", "--kind", "X_k", "--p", "3", "--m", "2", "--k", "3"],
        vec!["construct", "--kind", "D", "--p", "3", "--m", "2"],
        vec!["construct", "--kind", "singer", "--p", "3", "--m", "3"],
    ] {
        let a = run(&args);
        let b = run(&args);
        assert!(a.status.success(), "{args:?}");
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        assert!(!a.stdout.is_empty());
    }
}

#[test]
fn construct_verify_pipeline() {
    let doc = tmpfile("d32.json");
    let out = run(&[
        "construct",
        "--kind",
        "D",
        "--p",
        "3",
        "--m",
        "2",
        "--out",
        doc.to_str().unwrap(),
    ]);
    assert!(out.status.success());

    let out = run(&["verify", doc.to_str().unwrap(), "--method", "all"]);
    assert!(out.status.success(), "{}", stdout(&out));
    let text = stdout(&out);
    assert!(text.contains("Brute: pass"));
    assert!(text.contains("Character: pass"));
    assert!(text.contains("Matrix: pass"));

    let out = run(&["verify", doc.to_str().unwrap(), "--method", "brute", "--json"]);
    assert!(out.status.success());
    let reports: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(reports[0]["pass"], serde_json::Value::Bool(true));
    assert_eq!(reports[0]["k"], 168);

    std::fs::remove_file(doc).ok();
}

#[test]
fn tampered_document_exits_1() {
    let path = tmpfile("tampered.json");
    let out = run(&["construct", "--kind", "X", "--p", "3", "--m", "2"]);
    assert!(out.status.success());
    // Swap one element of X for an outsider: the unit is never in X.
    let mut doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    doc["elements"][0] = serde_json::json!([1, 0, 0, 0]);
    std::fs::write(&path, serde_json::to_string_pretty(&doc).unwrap()).unwrap();
    let out = run(&["verify", path.to_str().unwrap(), "--method", "brute"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("FAIL"));
    std::fs::remove_file(path).ok();
}

#[test]
fn singer_document_verifies_as_difference_set() {
    let path = tmpfile("singer.json");
    let out = run(&[
        "construct",
        "--kind",
        "singer",
        "--p",
        "3",
        "--m",
        "3",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let out = run(&["verify", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("DifferenceSet: pass"));
    std::fs::remove_file(path).ok();
}

#[test]
fn dual_round_trip() {
    let d = tmpfile("dual-in.json");
    let dd = tmpfile("dual-out.json");
    assert!(run(&[
        "construct", "--kind", "D", "--p", "3", "--m", "2", "--out", d.to_str().unwrap()
    ])
    .status
    .success());
    assert!(run(&["dual", d.to_str().unwrap(), "--out", dd.to_str().unwrap()])
        .status
        .success());
    let text = std::fs::read_to_string(&dd).unwrap();
    assert!(text.contains("\"kind\": \"dual\""));
    assert!(text.contains("\"k\": 168"));
    let out = run(&["verify", dd.to_str().unwrap(), "--method", "character"]);
    assert!(out.status.success());
    std::fs::remove_file(d).ok();
    std::fs::remove_file(dd).ok();
}

#[test]
fn export_graph_formats() {
    let doc = tmpfile("x32.json");
    assert!(run(&[
        "construct", "--kind", "X", "--p", "3", "--m", "2", "--out", doc.to_str().unwrap()
    ])
    .status
    .success());

    let out = run(&["export-graph", doc.to_str().unwrap(), "--format", "edgelist"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 810); // vk/2 = 81*20/2
    let mut sorted = lines.clone();
    sorted.sort_by_key(|l| {
        let mut it = l.split(' ').map(|t| t.parse::<u64>().unwrap());
        (it.next().unwrap(), it.next().unwrap())
    });
    assert_eq!(lines, sorted);

    let out = run(&["export-graph", doc.to_str().unwrap(), "--format", "graph6"]);
    assert!(out.status.success());
    let g6 = stdout(&out);
    // 81 vertices: long-form header "~?@P", then ceil(81*80/2 / 6) bytes.
    assert!(g6.starts_with("~?@P"));
    assert_eq!(g6.trim_end().len(), 4 + (81usize * 80 / 2).div_ceil(6));

    std::fs::remove_file(doc).ok();
}

#[test]
fn size_guard_flag_is_enforced() {
    let out = bin()
        .args(["construct", "--kind", "X", "--p", "3", "--m", "2"])
        .args(["--size-guard", "50"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("size guard"));

    let out = bin()
        .args(["construct", "--kind", "X", "--p", "3", "--m", "2"])
        .env("DENNISTON_SIZE_GUARD", "50")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}
