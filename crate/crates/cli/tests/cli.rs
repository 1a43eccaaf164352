use std::path::Path;
use std::process::{Command, Output};

fn osborn(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_osborn")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn write_loop(dir: &Path, name: &str, body: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, body).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn validate_reports_order_and_identity() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_loop(dir.path(), "z3.loop", "# cyclic\n3\n0 1 2\n1 2 0\n2 0 1\n");
    let out = osborn(&["validate", &path]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("loop of order 3, identity 0"));
}

#[test]
fn validate_rejects_a_non_latin_table() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_loop(dir.path(), "bad.loop", "2\n0 1\n1 1\n");
    assert_eq!(osborn(&["validate", &path]).status.code(), Some(1));
}

#[test]
fn osborn_fails_on_n5() {
    let out = osborn(&["osborn", "@N5"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("OS3 fails"));
}

#[test]
fn theorem_json_on_klein_group() {
    let out = osborn(&["theorem", "@Z2xZ2", "--name", "2post1.10", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["pass"], true);
    assert_eq!(v["loop"], "Z2xZ2");
    assert!(v["clauses"].as_array().unwrap().iter().any(|c| c["name"] == "equivalence"));
}

#[test]
fn theorem_requiring_universal_osborn_rejects_n5() {
    let out = osborn(&["theorem", "@N5", "--name", "2post1.11"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(osborn(&["theorem", "@Z3", "--name", "nope"]).status.code(), Some(2));
    assert_eq!(osborn(&["validate", "@nope"]).status.code(), Some(2));
    assert_eq!(osborn(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(osborn(&["diagram", "@Z3", "--name", "7"]).status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["corpus", "--max-order", "4", "--json"][..],
        &["theorem", "@S3", "--name", "2post1.12", "--json", "--jobs", "4"][..],
        &["pyramid", "@Z4", "--x", "1", "--u", "2", "--v", "3", "--format", "dot"][..],
    ] {
        let a = osborn(args);
        let b = osborn(args);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        assert_eq!(a.status.code(), b.status.code());
    }
}

#[test]
fn enumerate_counts_and_emits() {
    let out = osborn(&["enumerate", "--order", "5", "--count"]);
    assert_eq!(stdout(&out).trim(), "56");
    let dir = tempfile::tempdir().unwrap();
    let emit = dir.path().join("out");
    let out = osborn(&["enumerate", "--order", "4", "--emit", emit.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let mut names: Vec<String> = std::fs::read_dir(&emit)
        .unwrap()
        .map(|e| e.unwrap().file_name().to_string_lossy().into_owned())
        .collect();
    names.sort();
    assert_eq!(names, ["o4_0.loop", "o4_1.loop", "o4_2.loop", "o4_3.loop"]);
    let back = osborn(&["validate", emit.join("o4_2.loop").to_str().unwrap()]);
    assert_eq!(back.status.code(), Some(0));
}

#[test]
fn isomorphism_and_chein() {
    assert_eq!(osborn(&["isomorphic", "@Z4", "@Z2xZ2"]).status.code(), Some(1));
    assert_eq!(osborn(&["isomorphic", "@Z2xZ2", "@Z2xZ2"]).status.code(), Some(0));
    let out = osborn(&["chein", "@S3", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["order"], 12);
    assert_eq!(osborn(&["chein", "@N5"]).status.code(), Some(2));
}

#[test]
fn pyramid_formats() {
    let dot = stdout(&osborn(&["pyramid", "@Z3", "--format", "dot"]));
    assert!(dot.starts_with("digraph"));
    let json = osborn(&["pyramid", "@Z3", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&json.stdout).unwrap();
    assert_eq!(v["edges"].as_array().unwrap().len(), 8);
}

#[test]
fn complex_round_trip_through_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = osborn(&["complex", "@Z3", "--name", "K0", "--x", "0", "--u", "1", "--v", "2", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let path = dir.path().join("k0.json");
    std::fs::write(&path, v["complex"].to_string()).unwrap();
    let p = path.to_str().unwrap();
    assert_eq!(osborn(&["complex", "--file", p]).status.code(), Some(0));
    assert_eq!(osborn(&["complex", "@Z3", "--file", p]).status.code(), Some(0));
}
