use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_approxquasi"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn rows(out: &Output) -> Vec<Vec<String>> {
    stdout(out).lines().skip(1).map(|l| l.split('\t').map(str::to_string).collect()).collect()
}

fn write_temp(name: &str, contents: &str) -> std::path::PathBuf {
    let path = std::path::Path::new(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn prefix_coverage_rows() {
    let out = run(&["coverage", "--distance", "hamming", "--k", "1", "--mode", "prefix"], "abaab\n");
    assert!(out.status.success());
    assert!(stdout(&out).lines().any(|l| l == "2\t5"));
    assert_eq!(rows(&out).len(), 5);
}

#[test]
fn empty_input_gives_empty_report() {
    for mode in ["prefix", "factor"] {
        let out = run(&["coverage", "--k", "1", "--mode", mode], "");
        assert!(out.status.success());
        assert_eq!(stdout(&out).lines().count(), 1);
    }
}

#[test]
fn usage_and_input_errors() {
    assert_eq!(run(&["coverage", "--distance", "edit", "--k", "1"], "ab").status.code(), Some(1));
    assert_eq!(run(&["coverage", "--k", "-1"], "ab").status.code(), Some(1));
    assert_eq!(run(&["frobnicate"], "ab").status.code(), Some(1));
    assert_eq!(run(&["enhanced", "--distance", "levenshtein", "--k", "0"], "ab").status.code(), Some(1));
    let missing = run(&["coverage", "--distance", "edit", "--penalty", "/nonexistent.toml", "--k", "1"], "ab");
    assert_eq!(missing.status.code(), Some(2));
    let pen = write_temp("ab.toml", "alphabet = \"ab\"\nsubstitution = [[0, 1], [1, 0]]\ninsertion = [1, 1]\ndeletion = [1, 1]\n");
    let bad_byte = run(&["coverage", "--distance", "edit", "--penalty", pen.to_str().unwrap(), "--k", "1"], "abc");
    assert_eq!(bad_byte.status.code(), Some(2));
}

#[test]
fn covers_examples() {
    let out = run(&["covers", "--distance", "hamming", "--k", "1"], "abab\n");
    let got: Vec<(String, String)> = rows(&out).into_iter().map(|r| (r[0].clone(), r[3].clone())).collect();
    for want in [("ab", "0"), ("a", "1"), ("b", "1")] {
        assert!(got.contains(&(want.0.to_string(), want.1.to_string())), "{got:?}");
    }
    let out = run(&["covers", "--distance", "edit", "--penalty", "unit"], "abab\n");
    let minimal: Vec<String> = rows(&out).into_iter().filter(|r| r[4] == "1").map(|r| r[0].clone()).collect();
    assert_eq!(minimal, vec!["ab"]);
    assert!(rows(&out).iter().any(|r| r[0] == "ab" && r[3] == "0"));
}

#[test]
fn seeds_respect_length_limit() {
    let out = run(&["seeds", "--k", "1"], "ab\n");
    let factors: Vec<String> = rows(&out).into_iter().map(|r| r[0].clone()).collect();
    assert_eq!(factors, vec!["a", "b"]);
}

#[test]
fn escalation_finds_least_k() {
    let out = run(&["covers", "--escalate"], "abcabd\n");
    assert!(out.status.success());
    let best: Vec<Vec<String>> = rows(&out).into_iter().filter(|r| r[4] == "1").collect();
    assert!(!best.is_empty());
    assert!(best.iter().all(|r| r[3] == best[0][3]));
}

#[test]
fn enhanced_examples() {
    let out = run(&["enhanced", "--k", "1", "--variant", "exact-border"], "abaab\n");
    assert_eq!(rows(&out), vec![vec!["ab", "0", "2", "5"]]);
    let out = run(&["enhanced", "--k", "0", "--variant", "approx-border"], "abab\n");
    assert_eq!(rows(&out)[0][0], "ab");
    assert_eq!(rows(&out)[0][3], "4");
    let out = run(&["enhanced", "--k", "0"], "abc\n");
    assert_eq!(rows(&out)[0][0], "none");
}

#[test]
fn wildcard_flag() {
    let a = run(&["coverage", "--k", "0", "--mode", "factor"], "a?a\n");
    let b = run(&["coverage", "--k", "0", "--mode", "factor", "--wildcard", "*"], "a*a\n");
    assert_eq!(stdout(&a), stdout(&b));
    assert!(stdout(&a).lines().any(|l| l == "0\t0\t3"));
}

/// TSV cells rendered the way the TSV writer renders JSON values.
fn tsv_of_json(v: &Value) -> String {
    match v {
        Value::Null => "none".into(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

#[test]
fn json_and_tsv_carry_the_same_data() {
    let cases: Vec<Vec<&str>> = vec![
        vec!["coverage", "--k", "1", "--mode", "prefix"],
        vec!["coverage", "--k", "1", "--mode", "factor"],
        vec!["coverage", "--distance", "levenshtein", "--k", "1", "--mode", "factor"],
        vec!["coverage", "--distance", "edit", "--penalty", "unit", "--k", "2", "--mode", "prefix"],
        vec!["covers", "--k", "1"],
        vec!["seeds", "--distance", "levenshtein"],
        vec!["enhanced", "--k", "1", "--variant", "approx-border"],
    ];
    for args in cases {
        let tsv = run(&args, "abaababa\n");
        let mut json_args = args.clone();
        json_args.extend(["--format", "json"]);
        let json = run(&json_args, "abaababa\n");
        assert!(tsv.status.success() && json.status.success(), "{args:?}");
        let doc: Value = serde_json::from_str(&stdout(&json)).unwrap();
        let columns: Vec<String> = doc["columns"].as_array().unwrap().iter().map(|c| c.as_str().unwrap().into()).collect();
        let header = stdout(&tsv).lines().next().unwrap().to_string();
        assert_eq!(header, columns.join("\t"));
        let from_json: Vec<Vec<String>> = doc["rows"]
            .as_array()
            .unwrap()
            .iter()
            .map(|r| columns.iter().map(|c| tsv_of_json(&r[c.as_str()])).collect())
            .collect();
        assert_eq!(from_json, rows(&tsv), "{args:?}");
    }
}

#[test]
fn reports_are_deterministic() {
    let args = ["covers", "--distance", "levenshtein", "--threads", "3"];
    let a = run(&args, "abaabbab\n");
    let b = run(&args, "abaabbab\n");
    assert_eq!(stdout(&a), stdout(&b));
}

#[test]
fn gadget_commands() {
    let inst = write_temp("one.txt", "1 1 0\n0\n");
    let out = run(&["gadget", "build-cover", inst.to_str().unwrap()], "");
    assert_eq!(rows(&out), vec![vec!["1111000010100000", "16"]]);
    let out = run(&["gadget", "build-seed", inst.to_str().unwrap()], "");
    let row = &rows(&out)[0];
    assert_eq!(row[0], format!("{0}{0}1111{0}1111", "1111000010100000"));
    assert_eq!(row[1], "20");
    let out = run(&["gadget", "verify", inst.to_str().unwrap()], "");
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));

    let inst = write_temp("two.txt", "2 2 1\n01\n10\n");
    assert_eq!(run(&["gadget", "verify", inst.to_str().unwrap()], "").status.code(), Some(0));

    let big = write_temp("big.txt", &format!("1 40 0\n{}\n", "0".repeat(40)));
    let out = run(&["gadget", "verify", big.to_str().unwrap(), "--budget", "1024"], "");
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("budget"));

    let bad = write_temp("bad.txt", "1 2 0\n0a\n");
    assert_eq!(run(&["gadget", "build-cover", bad.to_str().unwrap()], "").status.code(), Some(2));
}

#[test]
fn bench_quick_runs() {
    let out = run(&["bench", "--quick"], "");
    assert!(out.status.success());
    let names: Vec<String> = rows(&out).into_iter().map(|r| r[0].clone()).collect();
    assert!(names.contains(&"prefix-coverage-hamming".to_string()));
    assert!(names.contains(&"q-table-fast-vs-quadratic".to_string()));
}
