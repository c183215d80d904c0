mod common;

use std::process::Command;

use common::*;
use qualdom::cli::{run, EXIT_BAD_WEIGHTS, EXIT_INVALID, EXIT_NOT_DOMINANT, EXIT_OK, EXIT_UNKNOWN_ID, EXIT_USAGE};

struct Output {
    code: i32,
    stdout: String,
    stderr: String,
}

fn qualdom(args: &[&str]) -> Output {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(std::iter::once("qualdom").chain(args.iter().copied()), &mut out, &mut err);
    Output { code, stdout: String::from_utf8(out).unwrap(), stderr: String::from_utf8(err).unwrap() }
}

fn path(name: &str) -> String {
    fixture(name).to_str().unwrap().to_owned()
}

#[test]
fn dominates_reports_witness_and_exit_code() {
    let f = path("cost_perf.json");
    let yes = qualdom(&["dominates", &f, "A", "B"]);
    assert_eq!(yes.code, EXIT_OK);
    assert_eq!(yes.stdout, "A dominates B (witness: Cost)\n");
    let no = qualdom(&["dominates", &f, "B", "A"]);
    assert_eq!(no.code, EXIT_NOT_DOMINANT);
    assert_eq!(no.stdout, "B does not dominate A\n");
}

#[test]
fn unknown_alternative_has_its_own_exit_code() {
    let out = qualdom(&["dominates", &path("cost_perf.json"), "A", "Z"]);
    assert_eq!(out.code, EXIT_UNKNOWN_ID);
    assert!(out.stderr.contains("\"Z\""));
}

#[test]
fn cyclic_importance_is_an_invalid_problem() {
    let f = path("cyclic.json");
    for args in [vec!["validate", &f], vec!["rank", &f], vec!["dominates", &f, "x", "y"]] {
        let out = qualdom(&args);
        assert_eq!(out.code, EXIT_INVALID, "{args:?}");
    }
    let out = qualdom(&["validate", &f]);
    assert!(out.stdout.contains("importance cycle a→b→a"), "{}", out.stdout);
}

#[test]
fn validate_accepts_a_good_file() {
    let out = qualdom(&["validate", &path("building_design.json")]);
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stdout.starts_with("valid: 3 attributes, 5 alternatives\n"));
}

#[test]
fn validate_reports_syntax_errors_with_location() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("broken.json");
    std::fs::write(&file, "{\n  \"attributes\": [\n    {\"name\": \"Cost\",, }\n  ]\n}\n").unwrap();
    let out = qualdom(&["validate", file.to_str().unwrap()]);
    assert_eq!(out.code, EXIT_INVALID);
    assert!(out.stdout.contains("line 3"), "{}", out.stdout);
}

#[test]
fn rank_prints_class_guarantee_and_layers() {
    let out = qualdom(&["rank", &path("building_design.json"), "--layers"]);
    assert_eq!(out.code, EXIT_OK);
    assert_eq!(
        out.stdout,
        "importance: WeakOrder\n\
         guarantee: strict partial order guaranteed (importance is an interval order)\n\
         maximal: Atrium, Courtyard\n\
         layer 0: Atrium, Courtyard\n\
         layer 1: Tower, Terrace\n\
         layer 2: Podium\n"
    );
}

#[test]
fn rank_without_importance_keeps_every_tradeoff() {
    let out = qualdom(&["rank", &path("tradeoffs.json")]);
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stdout.contains("maximal: North, South, East\n"), "{}", out.stdout);
}

#[test]
fn explain_names_witness_and_exclusions() {
    let out = qualdom(&["explain", &path("cost_perf.json"), "A", "B"]);
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stdout.contains("witness Cost; excluded as less important than Cost: Perf"), "{}", out.stdout);
    assert!(out.stdout.ends_with("A dominates B\n"));
}

#[test]
fn hasse_writes_dot() {
    let dir = tempfile::tempdir().unwrap();
    let dot = dir.path().join("g.dot");
    let out = qualdom(&["hasse", &path("mixed.json"), "--out", dot.to_str().unwrap()]);
    assert_eq!(out.code, EXIT_OK);
    let text = std::fs::read_to_string(&dot).unwrap();
    assert!(text.starts_with("digraph dominance {\n"));
    assert!(text.contains("\"B\" -> \"D\""));
    // A -> D is implied by A -> B -> D
    let full = dir.path().join("full.dot");
    qualdom(&["hasse", &path("mixed.json"), "--out", full.to_str().unwrap(), "--full"]);
    let full = std::fs::read_to_string(full).unwrap();
    assert!(!text.contains("\"A\" -> \"D\""));
    assert!(full.contains("\"A\" -> \"D\""));
}

#[test]
fn compare_reports_agreement() {
    let out = qualdom(&["compare", &path("cost_perf.json"), "--weights", &path("cost_perf_weights.json")]);
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stdout.contains("dominance pairs: 1, inverted: 0, agreement: 1.000000"), "{}", out.stdout);
}

#[test]
fn bad_weights_exit_code() {
    let dir = tempfile::tempdir().unwrap();
    let w = dir.path().join("w.json");
    std::fs::write(&w, r#"{"Cost": 0.9, "Perf": 0.5}"#).unwrap();
    let out = qualdom(&["compare", &path("cost_perf.json"), "--weights", w.to_str().unwrap()]);
    assert_eq!(out.code, EXIT_BAD_WEIGHTS);
    std::fs::write(&w, r#"{"Cost": 1.0}"#).unwrap();
    let out = qualdom(&["probe", &path("cost_perf.json"), "--weights", w.to_str().unwrap()]);
    assert_eq!(out.code, EXIT_BAD_WEIGHTS);
}

#[test]
fn probe_lists_reversals() {
    let out = qualdom(&["probe", &path("rank_reversal.json"), "--weights", &path("rank_reversal_weights.json")]);
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stdout.starts_with("without A: reversed B/C\nwithout B: no reversals\nwithout C: no reversals\n"));
}

#[test]
fn usage_errors() {
    assert_eq!(qualdom(&["bogus"]).code, EXIT_USAGE);
    assert_eq!(qualdom(&["rank"]).code, EXIT_USAGE);
    assert_eq!(qualdom(&["rank", "/nonexistent/problem.json"]).code, EXIT_USAGE);
    assert_eq!(qualdom(&["--help"]).code, EXIT_OK);
}

#[test]
fn binary_uses_the_same_exit_codes() {
    let status = |args: &[&str]| Command::new(env!("CARGO_BIN_EXE_qualdom")).args(args).output().unwrap();
    let yes = status(&["dominates", &path("cost_perf.json"), "A", "B"]);
    assert_eq!(yes.status.code(), Some(EXIT_OK));
    assert_eq!(String::from_utf8_lossy(&yes.stdout), "A dominates B (witness: Cost)\n");
    assert_eq!(status(&["dominates", &path("cost_perf.json"), "B", "A"]).status.code(), Some(EXIT_NOT_DOMINANT));
    assert_eq!(status(&["rank", &path("cyclic.json")]).status.code(), Some(EXIT_INVALID));
}
