use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use serde_json::{json, Value};

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_graph-toughness"));
    c.env("NO_COLOR", "1");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn run_with_stdin(args: &[&str], input: &str) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch_dir(name: &str) -> PathBuf {
    let d = std::env::temp_dir().join(format!("graph-toughness-{name}-{}", std::process::id()));
    let _ = fs::remove_dir_all(&d);
    fs::create_dir_all(&d).unwrap();
    d
}

#[test]
fn gen_then_invariant_pipeline() {
    let jm = run(&["gen", "jm", "--m", "5"]);
    assert!(jm.status.success());
    let line = stdout(&jm);
    assert_eq!(line.lines().count(), 1);
    let t = run_with_stdin(&["invariant", "toughness"], &line);
    assert_eq!(t.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&t)).unwrap();
    assert_eq!(v["value"], json!({"num": 2, "den": 1}));
    assert_eq!(v["invariant"], "toughness");
}

#[test]
fn invariant_examples() {
    let c8 = stdout(&run(&["gen", "cycle", "--n", "8", "--format", "edges"]));
    let o = run_with_stdin(&["invariant", "connectivity"], &c8);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["value"]["num"], 2);

    let j3 = stdout(&run(&["gen", "jm", "--m", "3"]));
    let o = run(&["invariant", "claws", "--graph6", j3.trim()]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["value"], json!([]));
    assert_eq!(v["claw_free"], true);
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["gen", "jm", "--m", "2"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        run_with_stdin(&["invariant", "toughness"], "not a graph\n")
            .status
            .code(),
        Some(3)
    );
    let big = stdout(&run(&["gen", "cycle", "--n", "40"]));
    assert_eq!(
        run(&["invariant", "toughness", "--graph6", big.trim()])
            .status
            .code(),
        Some(4)
    );
    assert_eq!(
        run(&["verify", "--claim", "LEMMA_B", "--m", "5..7"])
            .status
            .code(),
        Some(5)
    );
    assert_eq!(
        run(&["verify", "--claim", "THEOREM", "--m", "4"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["invariant", "toughness", "--input", "/nonexistent/x"])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn verify_is_deterministic_across_workers() {
    let a = run(&["--workers", "1", "verify", "--m", "3..7"]);
    let b = run(&["--workers", "8", "verify", "--m", "3..7"]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.status.code(), b.status.code());
    let v: Value = serde_json::from_slice(&a.stdout).unwrap();
    let rows = v.as_array().unwrap();
    assert!(rows
        .iter()
        .all(|r| r["verdict"] == "PASS" || r["claim"] == "LEMMA_B"));
}

#[test]
fn verify_odd_only_theorem_rows() {
    let o = run(&[
        "verify",
        "--m",
        "3..7",
        "--odd-only",
        "--claim",
        "THEOREM",
        "--claim",
        "LEMMA_C",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    let subjects: Vec<&str> = v
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["subject"].as_str().unwrap())
        .collect();
    assert_eq!(subjects, ["J_3", "J_5", "J_7", "J_3", "J_5", "J_7"]);
}

#[test]
fn table_respects_no_color() {
    let o = run(&[
        "verify", "--claim", "LEMMA_A", "--m", "3", "--format", "table",
    ]);
    let text = stdout(&o);
    assert!(text.contains("LEMMA_A"));
    assert!(!text.contains('\x1b'));
}

#[test]
fn census_writes_survivors_and_dot() {
    let dir = scratch_dir("census");
    let surv = dir.join("survivors.g6");
    let dots = dir.join("dot");
    let o = run(&[
        "census",
        "--n",
        "8",
        "--r",
        "4",
        "--connected",
        "--supertough",
        "--claw-free",
        "--survivors",
        surv.to_str().unwrap(),
        "--emit-dot",
        dots.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    let count = v["survivor_count"].as_u64().unwrap() as usize;
    assert!(count >= 1);
    let lines = fs::read_to_string(&surv).unwrap();
    assert_eq!(lines.lines().count(), count);
    let c82 = stdout(&run(&["gen", "cycle_power", "--n", "8", "--k", "2"]));
    let canon = graph_toughness::search::canonical_form(
        &graph_toughness::format::parse_graph6(c82.trim()).unwrap(),
    )
    .unwrap();
    assert!(lines.lines().any(|l| l == canon));
    let dot = fs::read_to_string(dots.join("survivor_1.dot")).unwrap();
    assert!(dot.starts_with("graph {"));
    fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn census_stream_with_bad_lines() {
    let c82 = stdout(&run(&["gen", "cycle_power", "--n", "8", "--k", "2"]));
    let input = format!("{c82}garbage\n");
    let args = [
        "census",
        "--stdin",
        "--r",
        "4",
        "--n",
        "8",
        "--claw-free",
        "--supertough",
    ];
    let o = run_with_stdin(&args, &input);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["survivor_count"], 1);
    assert_eq!(v["errors"][0]["line"], 2);
    let mut strict = args.to_vec();
    strict.push("--strict");
    assert_eq!(run_with_stdin(&strict, &input).status.code(), Some(3));
}

#[test]
fn corpus_round_trips_through_invariant() {
    let o = run(&["corpus", "--count", "5", "--max-n", "9", "--seed", "4"]);
    for line in stdout(&o).lines() {
        let r = run(&["invariant", "independence", "--graph6", line]);
        assert_eq!(r.status.code(), Some(0));
    }
}
