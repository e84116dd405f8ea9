use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;

fn bmhom(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bmhom"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn table_file(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

const A1: &str = "0 1 2 3\n2 0 3 1\n1 3 0 2\n3 2 1 0\n";

#[test]
fn check_a1_file() {
    let f = table_file(A1);
    let o = bmhom(&["check", f.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let line = out.lines().find(|l| l.starts_with("identities:")).unwrap();
    for id in ["A25", "A23", "B25", "E25", "A14", "F25", "C25", "A35"] {
        assert!(
            line.split_whitespace().any(|w| w == id),
            "{id} missing from {line}"
        );
    }
    assert!(out.contains("loop class: left loop only"));
    assert!(out.contains("substitutions: (1,1) (1,-1) (-1,1) (-1,-1)"));
}

#[test]
fn check_cyclic_group() {
    let f = table_file("0 1 2 3\n1 2 3 0\n2 3 0 1\n3 0 1 2\n");
    let o = bmhom(&["check", f.path().to_str().unwrap()]);
    assert!(stdout(&o).contains("group: all identities satisfied"));
}

#[test]
fn malformed_tables() {
    let f = table_file("0 1\n0 1\n");
    let o = bmhom(&["check", f.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("not a Latin square"));
    let f = table_file("0 1\n1 x\n");
    let o = bmhom(&["check", f.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 2"));
    let o = bmhom(&["check", "/nonexistent/table"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(bmhom(&["h1"]).status.code(), Some(1));
    assert_eq!(bmhom(&["h2", "A1", "-i", "Q99"]).status.code(), Some(1));
    assert_eq!(bmhom(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(bmhom(&["--help"]).status.code(), Some(0));
}

#[test]
fn homology_examples() {
    let o = bmhom(&["h2", "A1", "-i", "E25", "-t", "1", "-s", "1"]);
    assert_eq!(stdout(&o).trim(), "Z/2");
    let o = bmhom(&["h2", "A13", "-i", "A35", "-t", "-1", "-s", "1"]);
    assert_eq!(stdout(&o).trim(), "Z^12 (+) (Z/2)^4");
    let o = bmhom(&["h1", "A4", "-t", "-2", "-s", "1"]);
    assert_eq!(stdout(&o).trim(), "Z/10");
}

#[test]
fn golden_flag() {
    let o = bmhom(&["h2", "A1", "-i", "F25", "--golden"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).trim_end().ends_with("PASS"));
    // The listed H1(1,-1) of A1 is Z/4; the table gives Z/2.
    let o = bmhom(&["h1", "A1", "-t", "1", "-s", "-1", "--golden"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).contains("FAIL"));
}

#[test]
fn warnings() {
    let o = bmhom(&["h2", "A1", "-i", "C14"]);
    assert!(stderr(&o).contains("IdentityNotSatisfied"));
    let o = bmhom(&["h1", "A1", "-t", "2", "-s", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stderr(&o).contains("SubstitutionNotValid"));
}

#[test]
fn affine_solve_sorted() {
    let o = bmhom(&["--json", "affine-solve", "-i", "A23", "-n", "5"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    let specs = v.as_array().unwrap();
    assert_eq!(specs.len(), 20);
    let keys: Vec<(u64, u64, u64)> = specs
        .iter()
        .map(|s| {
            (
                s["t"].as_u64().unwrap(),
                s["s"].as_u64().unwrap(),
                s["c0"].as_u64().unwrap(),
            )
        })
        .collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
}

#[test]
fn parastrophe_and_category() {
    let o = bmhom(&["parastrophe", "A1", "-k", "rdiv"]);
    assert!(stdout(&o).contains("abelianization: Z/2"));
    let o = bmhom(&["--json", "cat-homology", "A1", "--source", "mlt"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["size"], 8);
    assert_eq!(v["h1"], "(Z/2)^2");
    assert_eq!(v["h2"], "Z/2");
    let o = bmhom(&["cat-homology", "A1", "--source", "end"]);
    assert!(stdout(&o).contains("H1: 0\nH2: 0"));
    let o = bmhom(&["--budget", "10", "cat-homology", "A1", "--source", "mlt"]);
    assert_eq!(o.status.code(), Some(2));
    let o = bmhom(&["mlt", "A1"]);
    assert!(stdout(&o).starts_with("order: 8\n"));
}

#[test]
fn extend_with_cochain_file() {
    let zero = table_file("0 0 0 0\n0 0 0 0\n0 0 0 0\n0 0 0 0\n");
    let o = bmhom(&[
        "extend",
        "--base",
        "A1",
        "-n",
        "2",
        "-i",
        "E25",
        "--phi",
        zero.path().to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.starts_with("order: 8\n"));
    assert!(out.contains("satisfies E25: yes"));
    let seeded = |seed: &str| {
        stdout(&bmhom(&[
            "--seed", seed, "extend", "--base", "A1", "-n", "3",
        ]))
    };
    assert_eq!(seeded("5"), seeded("5"));
    let short = table_file("0 0\n");
    let o = bmhom(&[
        "extend",
        "--base",
        "A1",
        "-n",
        "2",
        "--phi",
        short.path().to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn report_text_and_json_agree() {
    let text = bmhom(&["report", "--only", "A2"]);
    let json = bmhom(&["--json", "report", "--only", "A2"]);
    assert_eq!(text.status.code(), json.status.code());
    let rows: Vec<Value> = serde_json::from_slice(&json.stdout).unwrap();
    let lines: Vec<String> = stdout(&text).lines().map(String::from).collect();
    assert_eq!(rows.len(), lines.len());
    for (row, line) in rows.iter().zip(&lines) {
        let f: Vec<&str> = line.split('\t').collect();
        assert_eq!(row["quasigroup"], f[0]);
        assert_eq!(row["group"], f[5]);
        assert_eq!(row["expected"], f[6]);
    }
}

#[test]
fn report_exit_code_reflects_mismatches() {
    assert_eq!(bmhom(&["report", "--only", "A2"]).status.code(), Some(0));
    assert_eq!(bmhom(&["report", "--only", "A1"]).status.code(), Some(3));
}
