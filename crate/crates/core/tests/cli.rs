use std::io::Write;
use std::process::{Command, Output, Stdio};

use tempfile::NamedTempFile;

fn zinbiel() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_zinbiel"));
    cmd.env_remove("ZINBIEL_SEED");
    cmd
}

fn run(args: &[&str]) -> Output {
    zinbiel().args(args).output().unwrap()
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child =
        zinbiel().args(args).stdin(Stdio::piped()).stdout(Stdio::piped()).stderr(Stdio::piped()).spawn().unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn catalog_file(id: &str, params: &[&str]) -> NamedTempFile {
    let mut args = vec!["catalog", "show", id];
    for p in params {
        args.extend(["--param", p]);
    }
    let out = run(&args);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let mut f = NamedTempFile::new().unwrap();
    f.write_all(&out.stdout).unwrap();
    f
}

fn path(f: &NamedTempFile) -> &str {
    f.path().to_str().unwrap()
}

const NOT_ZINBIEL: &str = r#"{"format": 1, "name": "assoc", "dim": 1,
  "products": [{"left": 1, "right": 1, "result": [{"basis": 1, "coeff": "1"}]}]}"#;

#[test]
fn check_accepts_catalog_and_rejects_non_zinbiel() {
    let f = catalog_file("A_4^1", &[]);
    let ok = run(&["check", path(&f)]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(stdout(&ok).contains("holds on all 64 basis triples"));

    let bad = run_stdin(&["check", "-"], NOT_ZINBIEL);
    assert_eq!(bad.status.code(), Some(1));
    assert!(stdout(&bad).contains("(1, 1, 1): residual (-1)"), "{}", stdout(&bad));
}

#[test]
fn inner_reads_stdin_and_reports_dimension() {
    let text = stdout(&run(&["catalog", "show", "A_3^4"]));
    let out = run_stdin(&["inner", "-"], &text);
    assert_eq!(out.status.code(), Some(0));
    let s = stdout(&out);
    assert!(s.contains("a_2  -a_1  0"), "{s}");
    assert!(s.ends_with("dim Inn = 2\n"), "{s}");
}

#[test]
fn parameter_cases_reach_the_computation() {
    let zero = catalog_file("A_4^9", &["alpha=0"]);
    let generic = catalog_file("A_4^9", &["alpha=3/2"]);
    assert!(stdout(&run(&["inner", path(&zero)])).contains("dim Inn = 0"));
    assert!(stdout(&run(&["inner", path(&generic)])).contains("dim Inn = 2"));
}

#[test]
fn input_errors_exit_two() {
    let missing = run(&["catalog", "show", "A_4^9"]);
    assert_eq!(missing.status.code(), Some(2));
    assert!(stderr(&missing).contains("alpha"));

    let excluded = run(&["catalog", "show", "A_3^6", "--param", "lambda=0"]);
    assert_eq!(excluded.status.code(), Some(2));

    let unknown = run(&["catalog", "show", "A_5^1"]);
    assert_eq!(unknown.status.code(), Some(2));

    let syntax = run_stdin(&["der", "-"], "{\"format\": 1,\n \"dim\": ");
    assert_eq!(syntax.status.code(), Some(2));
    assert!(stderr(&syntax).contains("line 2"), "{}", stderr(&syntax));

    let range = r#"{"format": 1, "name": "x", "dim": 2,
      "products": [{"left": 1, "right": 3, "result": []}]}"#;
    let semantic = run_stdin(&["der", "-"], range);
    assert_eq!(semantic.status.code(), Some(2));
    assert!(stderr(&semantic).contains("products[0]"), "{}", stderr(&semantic));

    let coeff = r#"{"format": 1, "name": "x", "dim": 1,
      "products": [{"left": 1, "right": 1, "result": [{"basis": 1, "coeff": "1/0"}]}]}"#;
    let bad_coeff = run_stdin(&["check", "-"], coeff);
    assert_eq!(bad_coeff.status.code(), Some(2));
    assert!(stderr(&bad_coeff).contains("products[0].result[0].coeff"), "{}", stderr(&bad_coeff));

    let no_file = run(&["ann", "/definitely/not/here.json"]);
    assert_eq!(no_file.status.code(), Some(2));

    let bad_flag = run(&["inner", "--nope"]);
    assert_eq!(bad_flag.status.code(), Some(2));
}

#[test]
fn help_exits_zero() {
    let out = run(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("catalog"));
}

#[test]
fn props_flags_the_ad_counterexample_without_failing() {
    let f = catalog_file("A_4^1", &[]);
    let out = run(&["props", path(&f)]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(stdout(&out).contains("ad_e_1 is a derivation:                 NO (fails on (e_1, e_1))"));
}

#[test]
fn json_output_is_stable_for_a_seed() {
    let f = catalog_file("A_4^8", &["alpha=-2"]);
    let a = run(&["--json", "--seed", "11", "props", path(&f)]);
    let b = run(&["--json", "--seed", "11", "props", path(&f)]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["seed"], 11);
}

#[test]
fn seed_falls_back_to_environment() {
    let f = catalog_file("A_3^5", &[]);
    let flag = run(&["--json", "--seed", "42", "props", path(&f)]);
    let env = zinbiel().env("ZINBIEL_SEED", "42").args(["--json", "props", path(&f)]).output().unwrap();
    assert_eq!(flag.stdout, env.stdout);

    let both = zinbiel().env("ZINBIEL_SEED", "42").args(["--json", "--seed", "5", "props", path(&f)]).output().unwrap();
    let v: serde_json::Value = serde_json::from_slice(&both.stdout).unwrap();
    assert_eq!(v["seed"], 5);
}

#[test]
fn catalog_report_json() {
    let out = run(&["catalog", "report", "--format", "json"]);
    // dimension mismatches in the reference tables make the report fail
    assert_eq!(out.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 27);
    let row = |id: &str| rows.iter().find(|r| r["id"] == id).unwrap();
    assert_eq!(row("A_4^14")["status"], "dimension-match-matrix-differs");
    assert_eq!(row("A_4^14")["table_status"], "flagged");
    assert_eq!(row("A_4^2")["status"], "mismatch");
    assert_eq!(row("A_4^1")["status"], "match");
    let again = run(&["catalog", "report", "--format", "json"]);
    assert_eq!(out.stdout, again.stdout);
}

#[test]
fn catalog_list_names_every_entry() {
    let out = run(&["catalog", "list"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).lines().count(), 24);
}
