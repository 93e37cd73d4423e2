//! Behavior of the command-line front end: output shapes, bounds, and the
//! exit-code contract (0 success, 1 mathematical failure, 2 usage).

use std::process::Command;

fn run(args: &[&str]) -> (String, String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_dqsym"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        String::from_utf8(out.stdout).expect("utf-8 stdout"),
        String::from_utf8(out.stderr).expect("utf-8 stderr"),
        out.status.code().expect("exit code"),
    )
}

#[test]
fn verify_reports_every_check_and_exits_cleanly() {
    let (stdout, _, code) = run(&["verify", "--suite", "all", "--n", "3"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = stdout.lines().collect();
    assert_eq!(lines.len(), 13, "twelve checks and a summary");
    assert!(lines[..12].iter().all(|l| l.starts_with("ok   ")));
    assert_eq!(lines[12], "suite all: 12 checks passed at degree 3");
}

#[test]
fn verify_selects_named_suites() {
    let (stdout, _, code) = run(&["verify", "--suite", "corollary", "--n", "4"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("ok   ribbon-coefficient-formula"));
    assert!(stdout.ends_with("suite corollary: 3 checks passed at degree 4\n"));
}

#[test]
fn unknown_suite_is_a_usage_error() {
    let (_, stderr, code) = run(&["verify", "--suite", "theorems", "--n", "3"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("unknown suite"));
    assert!(stderr.contains("closed_forms"));
}

#[test]
fn degree_bounds_are_usage_errors() {
    let (_, stderr, code) = run(&["matrix", "--kind", "D", "--n", "9"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("2..=7"));
    let (_, _, code) = run(&["matrix", "--kind", "D", "--n", "1"]);
    assert_eq!(code, 2);
    let (_, _, code) = run(&["verify", "--suite", "all", "--n", "0"]);
    assert_eq!(code, 2);
    let (_, _, code) = run(&["expand", "--target", "sigma", "--arg", "8", "--basis", "R"]);
    assert_eq!(code, 2);
}

#[test]
fn the_bound_is_adjustable() {
    let (stdout, _, code) =
        run(&["matrix", "--kind", "D", "--n", "8", "--max-n", "8", "--format", "csv"]);
    assert_eq!(code, 0);
    assert_eq!(stdout.lines().count(), 129, "header and one row per composition of 8");
}

#[test]
fn expand_prints_each_basis() {
    let (g, _, code) = run(&["expand", "--target", "psi", "--arg", "312", "--basis", "G"]);
    assert_eq!(code, 0);
    assert_eq!(
        g.trim_end(),
        "(312/123) - q·(132/213) - q·(231/312) + q^2·(213/321)"
    );
    let (r, _, code) = run(&["expand", "--target", "sigma", "--arg", "2", "--basis", "R"]);
    assert_eq!(code, 0);
    assert_eq!(r.trim_end(), "R_2^(2) + R_2^(11) + (1-q)·R_11^(11)");
    let (l, _, code) = run(&["expand", "--target", "p", "--arg", "21", "--basis", "Lambda"]);
    assert_eq!(code, 0);
    assert_eq!(l.trim_end(), "-L_21^(21) - q·L_21^(111) + L_111^(21)");
}

#[test]
fn expand_accepts_comma_literals() {
    let (a, _, _) = run(&["expand", "--target", "p", "--arg", "2,1", "--basis", "Lambda"]);
    let (b, _, _) = run(&["expand", "--target", "p", "--arg", "21", "--basis", "Lambda"]);
    assert_eq!(a, b);
}

#[test]
fn elements_outside_the_ribbon_span_fail_with_a_witness() {
    let (_, stderr, code) = run(&["expand", "--target", "psi", "--arg", "212", "--basis", "R"]);
    assert_eq!(code, 1);
    assert!(stderr.contains("non-permutation color row"));
}

#[test]
fn bad_literals_are_usage_errors() {
    let (_, _, code) = run(&["expand", "--target", "sigma", "--arg", "two", "--basis", "G"]);
    assert_eq!(code, 2);
    let (_, stderr, code) = run(&["expand", "--target", "p", "--arg", "2,0", "--basis", "G"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("composition"));
    let (_, _, code) = run(&["expand", "--target", "psi", "--arg", "", "--basis", "G"]);
    assert_eq!(code, 2);
}

#[test]
fn unknown_flags_and_kinds_are_usage_errors() {
    let (_, _, code) = run(&["matrix", "--kind", "X", "--n", "3"]);
    assert_eq!(code, 2);
    let (_, _, code) = run(&["matrix", "--kind", "D"]);
    assert_eq!(code, 2, "missing required degree");
    let (_, _, code) = run(&["grid"]);
    assert_eq!(code, 2, "unknown subcommand");
}

#[test]
fn json_matrix_has_the_documented_shape() {
    let (stdout, _, code) =
        run(&["matrix", "--kind", "Mribbon", "--n", "2", "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["n"], 2);
    assert_eq!(v["kind"], "Mribbon");
    assert_eq!(v["rows"], serde_json::json!(["2", "11"]));
    assert_eq!(v["cols"], serde_json::json!(["2", "11"]));
    assert_eq!(v["entries"], serde_json::json!([[[1], [1]], [[], [1, -1]]]));
}

#[test]
fn csv_matrix_round_trips_the_text_cells() {
    let (csv, _, code) = run(&["matrix", "--kind", "N", "--n", "3", "--format", "csv"]);
    assert_eq!(code, 0);
    let rows: Vec<Vec<&str>> = csv.lines().map(|l| l.split(',').collect()).collect();
    assert_eq!(rows[0], vec!["I\\J", "3", "21", "12", "111"]);
    assert_eq!(rows[2], vec!["21", "3", "21", "3", "21"]);
}
