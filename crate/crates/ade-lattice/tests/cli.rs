//! End-to-end tests of the binary: exit codes, text output, and JSON shape.

use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_ade-lattice"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary should run")
}

fn fixture(name: &str) -> String {
    format!("{}/tests/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn stdout_of(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("stdout is utf-8")
}

fn stderr_of(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).expect("stderr is utf-8")
}

#[test]
fn classify_hexagonal_lattice() {
    let output = run(&["classify", "--gram", &fixture("hexagonal.json")]);
    assert_eq!(output.status.code(), Some(0));
    let text = stdout_of(&output);
    assert!(text.starts_with("hexagonal\n"), "label line first: {text}");
    assert!(text.contains("rank 2  disc 3  roots 6  weyl order 6"));
    assert!(text.contains("components: A2"));
    assert!(text.contains("roots span lattice: yes"));
    assert!(text.contains("disc invariant factors: 3"));
}

#[test]
fn classify_single_norm_two_generator() {
    let output = run(&["classify", "--gram", &fixture("single_a1.json")]);
    assert_eq!(output.status.code(), Some(0));
    let text = stdout_of(&output);
    assert!(text.contains("components: A1"));
    assert!(text.contains("weyl order 2"));
}

#[test]
fn classify_rank_six_bordered_form() {
    let output = run(&["classify", "--gram", &fixture("rank6_structured.json")]);
    assert_eq!(output.status.code(), Some(0));
    let text = stdout_of(&output);
    assert!(text.contains("components: E6"));
    assert!(text.contains("disc 3"));
    assert!(text.contains("weyl order 51840"));
}

#[test]
fn classify_json_output_has_no_expectation_fields() {
    let output = run(&["classify", "--gram", &fixture("hexagonal.json"), "--json"]);
    assert_eq!(output.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout_of(&output)).unwrap();
    assert_eq!(doc["input"], "hexagonal");
    assert_eq!(doc["report"]["rank"], 2);
    assert_eq!(doc["report"]["disc"], "3");
    assert_eq!(doc["report"]["components"][0], "A2");
    assert_eq!(doc["disc_factors"][0], "3");
    assert!(doc.get("expected").is_none());
    assert!(doc["elapsed_us"].is_u64());
}

#[test]
fn classify_missing_file_is_an_input_error() {
    let output = run(&["classify", "--gram", &fixture("no_such_file.json")]);
    assert_eq!(output.status.code(), Some(2));
    assert!(stderr_of(&output).contains("cannot read"));
}

#[test]
fn classify_malformed_json_is_an_input_error() {
    let output = run(&["classify", "--gram", &fixture("not_json.json")]);
    assert_eq!(output.status.code(), Some(2));
    assert!(stderr_of(&output).contains("could not parse"));
}

#[test]
fn classify_indefinite_form_is_a_precondition_error() {
    let output = run(&["classify", "--gram", &fixture("indefinite.json")]);
    assert_eq!(output.status.code(), Some(3));
    let err = stderr_of(&output);
    assert!(err.contains("not positive definite"), "stderr: {err}");
    assert!(err.contains("minor 2 is -3"), "witness named: {err}");
}

#[test]
fn construct_scroll_matches_expectation() {
    let output = run(&["construct", "--family", "scroll", "--param", "r=5"]);
    assert_eq!(output.status.code(), Some(0));
    let text = stdout_of(&output);
    assert!(text.contains("components: A4"));
    assert!(text.contains("disc 5"));
    assert!(text.contains("-> MATCH"));
}

#[test]
fn construct_reports_the_overlattice_ambiguity() {
    let output = run(&["construct", "--family", "veronese-pencil", "--param", "m=8"]);
    assert_eq!(output.status.code(), Some(0));
    let text = stdout_of(&output);
    assert!(text.contains("components: D8"));
    assert!(text.contains("possible overlattices: {D8, E8}"));
    assert!(text.contains("ambiguous overlattice {D8, E8} -> MATCH"));
}

#[test]
fn construct_impossible_outcome_still_matches() {
    let output = run(&["construct", "--family", "ordinary-quadric-pencil", "--param", "m=2"]);
    assert_eq!(output.status.code(), Some(0));
    let text = stdout_of(&output);
    assert!(text.contains("components: A1 + A1"));
    assert!(text.contains("impossible -> MATCH"));
}

#[test]
fn construct_unknown_family_is_an_input_error() {
    let output = run(&["construct", "--family", "frobnicator", "--param", "x=1"]);
    assert_eq!(output.status.code(), Some(2));
    assert!(stderr_of(&output).contains("unknown family 'frobnicator'"));
}

#[test]
fn construct_bad_parameter_is_an_input_error() {
    let output = run(&["construct", "--family", "scroll", "--param", "r=zero"]);
    assert_eq!(output.status.code(), Some(2));
    assert!(stderr_of(&output).contains("nonnegative integer"));
}

#[test]
fn capacity_environment_variable_guards_enumeration() {
    let output = bin()
        .args(["construct", "--family", "veronese-pencil", "--param", "m=8"])
        .env("ADE_LATTICE_DISC_CAPACITY", "1")
        .output()
        .expect("binary should run");
    assert_eq!(output.status.code(), Some(3));
    assert!(stderr_of(&output).contains("above the enumeration capacity 1"));
}

#[test]
fn table_checks_all_seven_rows() {
    let output = run(&["table2"]);
    assert_eq!(output.status.code(), Some(0));
    let text = stdout_of(&output);
    for row in ["V3", "V4", "V5", "V6:", "V6'", "V7", "V8"] {
        assert!(text.contains(row), "missing row {row}: {text}");
    }
    assert_eq!(text.matches("-> MATCH").count(), 7);
    assert_eq!(text.matches("MISMATCH").count(), 0);
}

#[test]
fn table_row_filter_and_aliases() {
    let output = run(&["table2", "--only", "v5"]);
    assert_eq!(output.status.code(), Some(0));
    let text = stdout_of(&output);
    assert!(text.contains("components: A4"));
    assert_eq!(text.matches("-> MATCH").count(), 1);
    let prime = run(&["table2", "--only", "V6prime"]);
    assert!(stdout_of(&prime).contains("components: A2"));
    let unknown = run(&["table2", "--only", "V9"]);
    assert_eq!(unknown.status.code(), Some(2));
}

#[test]
fn table_json_is_an_array_of_seven_documents() {
    let output = run(&["table2", "--json"]);
    assert_eq!(output.status.code(), Some(0));
    let docs: serde_json::Value = serde_json::from_str(&stdout_of(&output)).unwrap();
    let rows = docs.as_array().expect("top level is an array");
    assert_eq!(rows.len(), 7);
    assert_eq!(rows[0]["report"]["components"][0], "E6");
    assert!(rows.iter().all(|r| r["matched"] == true));
}

#[test]
fn theorem_finds_four_varieties_on_the_builtin_catalog() {
    let output = run(&["theorem"]);
    assert_eq!(output.status.code(), Some(0));
    let text = stdout_of(&output);
    assert!(text.contains("distinct varieties: 4"), "{text}");
    for variety in [
        "quadric threefold in P4",
        "product of three projective lines",
        "blowup of P3 at a point",
        "second Veronese embedding of P3",
    ] {
        assert!(text.contains(variety), "missing {variety}");
    }
    assert!(text.contains("expected four varieties -> MATCH"));
}

#[test]
fn theorem_with_empty_catalog_exits_one() {
    let output = run(&["theorem", "--catalog", &fixture("catalog_empty.json")]);
    assert_eq!(output.status.code(), Some(1));
    let text = stdout_of(&output);
    assert!(text.contains("A1 survivors: 0"));
    assert!(text.contains("distinct varieties: 0"));
    assert!(text.contains("expected four varieties -> MISMATCH"));
}

#[test]
fn theorem_extended_catalog_yields_the_same_four_varieties() {
    let output = run(&[
        "theorem",
        "--catalog",
        &fixture("catalog_extended.json"),
        "--json",
    ]);
    assert_eq!(output.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout_of(&output)).unwrap();
    assert_eq!(doc["catalog_size"], 19);
    let varieties: Vec<&str> = doc["varieties"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_str().unwrap())
        .collect();
    assert_eq!(
        varieties,
        vec![
            "blowup of P3 at a point",
            "product of three projective lines",
            "quadric threefold in P4",
            "second Veronese embedding of P3",
        ]
    );
    assert_eq!(doc["matched"], true);
}

#[test]
fn selftest_is_deterministic_and_green() {
    let first = run(&["selftest", "--seed", "7"]);
    let second = run(&["selftest", "--seed", "7"]);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(stdout_of(&first), stdout_of(&second));
    assert!(stdout_of(&first).contains("all checks passed"));
    let json = run(&["selftest", "--seed", "7", "--json"]);
    let doc: serde_json::Value = serde_json::from_str(&stdout_of(&json)).unwrap();
    assert_eq!(doc["seed"], 7);
    let checks = doc["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 9);
    assert!(checks.iter().all(|c| c["passed"] == true));
}

#[test]
fn text_and_json_formats_agree_on_the_numbers() {
    let text_out = run(&["construct", "--family", "del-pezzo", "--param", "degree=3"]);
    let text = stdout_of(&text_out);
    assert!(text.contains("rank 6  disc 3  roots 72  weyl order 51840"));
    assert!(text.contains("components: E6"));
    let json_out = run(&["construct", "--family", "del-pezzo", "--param", "degree=3", "--json"]);
    let doc: serde_json::Value = serde_json::from_str(&stdout_of(&json_out)).unwrap();
    assert_eq!(doc["report"]["rank"], 6);
    assert_eq!(doc["report"]["disc"], "3");
    assert_eq!(doc["report"]["root_count"], 72);
    assert_eq!(doc["report"]["weyl_order"], "51840");
    assert_eq!(doc["report"]["components"][0], "E6");
    assert_eq!(doc["matched"], true);
}
