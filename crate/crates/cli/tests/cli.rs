use std::process::{Command, Output};

use serde_json::Value;

const BIN: &str = env!("CARGO_BIN_EXE_indeplab");

fn run(args: &[&str]) -> Output {
    Command::new(BIN).args(args).output().expect("binary runs")
}

fn run_with_stdin(args: &[&str], input: &str) -> Output {
    use std::io::Write;
    use std::process::Stdio;
    let mut child = Command::new(BIN)
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("JSON on stdout")
}

fn stdout_text(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn analyze_cycle_four() {
    let out = run(&["analyze", "--gen", "cycle:4"]);
    assert_eq!(out.status.code(), Some(0));
    let r = stdout_json(&out);
    assert_eq!(r["core"], serde_json::json!([]));
    assert_eq!(r["nucleus"], serde_json::json!([]));
    assert_eq!(r["diadem"], serde_json::json!([0, 1, 2, 3]));
    assert_eq!(r["is_KE"], true);
}

#[test]
fn analyze_k1() {
    let r = stdout_json(&run(&["analyze", "--gen", "complete:1"]));
    assert_eq!(r["alpha"], 1);
    assert_eq!(r["d"], 1);
    assert_eq!(r["core"], serde_json::json!([0]));
}

#[test]
fn oracle_and_fast_tiers_agree() {
    for spec in ["figure1", "gnp:12,0.3,4", "star:4", "cycle:7"] {
        let oracle = stdout_json(&run(&["analyze", "--oracle", "--gen", spec]));
        let fast = stdout_json(&run(&["analyze", "--fast", "--gen", spec]));
        for field in ["d", "is_KE", "is_2bicritical", "ker", "nucleus", "diadem"] {
            assert_eq!(oracle[field], fast[field], "{spec} {field}");
        }
        assert_eq!(oracle["larson"]["L"], fast["larson"]["L"]);
        assert_eq!(oracle["tiers"]["nucleus"], "oracle");
        assert_eq!(fast["tiers"]["nucleus"], "fast");
    }
}

#[test]
fn fast_only_beyond_the_oracle_cap() {
    let out = run(&["analyze", "--fast-only", "--gen", "gnp:40,0.1,1"]);
    assert_eq!(out.status.code(), Some(0));
    let r = stdout_json(&out);
    assert_eq!(r["alpha"], Value::Null);
    assert_eq!(r["tiers"]["core"], "unavailable");
    assert_eq!(run(&["analyze", "--gen", "gnp:40,0.1,1"]).status.code(), Some(3));
}

#[test]
fn oracle_cap_from_environment() {
    let out = Command::new(BIN)
        .args(["analyze", "--gen", "path:8"])
        .env("INDEPLAB_ORACLE_CAP", "6")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("cap"));
}

#[test]
fn check_main_theorem_on_figure1() {
    let out = run(&["check", "--theorem", "T3.16", "--gen", "figure1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = &stdout_json(&out)["verdicts"][0];
    assert_eq!(v["theorem_id"], "T3.16");
    assert_eq!(v["holds"], true);
    assert_eq!(v["counterexample"], Value::Null);
}

#[test]
fn check_all_on_c5() {
    let r = stdout_json(&run(&["check", "--all", "--gen", "cycle:5"]));
    assert_eq!(r["verdicts"].as_array().unwrap().len(), 21);
    assert_eq!(r["failures"], 0);
}

#[test]
fn unknown_theorem_is_a_usage_error() {
    let out = run(&["check", "--theorem", "bogus", "--gen", "figure1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("T3.16"));
}

#[test]
fn parse_errors_exit_two() {
    assert_eq!(run(&["analyze", "--graph6", "B!"]).status.code(), Some(2));
    assert_eq!(run(&["analyze", "--gen", "wheel:4"]).status.code(), Some(2));
    assert_eq!(run_with_stdin(&["analyze"], "Bw\nBg\n").status.code(), Some(2));
    assert_eq!(run(&["scan", "--exhaustive", "8", "--all"]).status.code(), Some(3));
}

#[test]
fn reads_edge_lists_and_graph6_from_stdin() {
    let a = stdout_json(&run_with_stdin(&["analyze"], "5 5\n0 1\n0 2\n1 2\n2 3\n3 4\n"));
    let b = stdout_json(&run_with_stdin(&["analyze"], "DxC\n"));
    assert_eq!(a, b);
    assert_eq!(a["graph6"], "DxC");
}

#[test]
fn scan_summaries() {
    let out = run(&["scan", "--exhaustive", "3", "--all"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout_text(&out).starts_with("graphs=8 failures=0 "));
    let out = run(&["scan", "--exhaustive", "5", "--theorem", "T3.16", "--theorem", "C3.18"]);
    assert_eq!(stdout_text(&out).trim(), "graphs=1024 failures=0 not_applicable=0");
    let out = run(&["scan", "--random", "12", "0.3", "100", "7", "--theorem", "T3.16"]);
    assert_eq!(stdout_text(&out).trim(), "graphs=100 failures=0 not_applicable=0");
}

#[test]
fn scan_empty_corpus() {
    let out = run_with_stdin(&["scan", "--corpus", "-", "--all"], "");
    assert_eq!(stdout_text(&out).trim(), "graphs=0 failures=0 not_applicable=0");
}

#[test]
fn scan_json_counts_per_check() {
    let r = stdout_json(&run(&["scan", "--exhaustive", "4", "--all", "--json"]));
    assert_eq!(r["graphs"], 64);
    let checks = r["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 21);
    for c in checks {
        assert_eq!(c["holds"].as_u64().unwrap() + c["not_applicable"].as_u64().unwrap(), 64);
    }
}

#[test]
fn generate_named_and_random() {
    assert_eq!(stdout_text(&run(&["generate", "--gen", "path:3"])), "Bg\n");
    assert_eq!(stdout_text(&run(&["generate", "--gen", "complete:3"])), "Bw\n");
    let a = stdout_text(&run(&["generate", "--random", "6", "0.5", "2", "1"]));
    assert_eq!(a.lines().count(), 2);
    assert_eq!(a, stdout_text(&run(&["generate", "--random", "6", "0.5", "2", "1"])));
}

#[test]
fn generate_to_file_then_scan_it() {
    let dir = std::env::temp_dir().join(format!("indeplab-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("corpus.g6");
    let path = file.to_str().unwrap();
    assert!(run(&["generate", "--random", "9", "0.4", "50", "2", "--out", path]).status.success());
    let out = run(&["scan", "--corpus", path, "--all"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout_text(&out).starts_with("graphs=50 failures=0 "));
    std::fs::remove_dir_all(dir).unwrap();
}
