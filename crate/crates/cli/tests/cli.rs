//! Exit-code and error-path coverage for the binary; the golden-file
//! comparisons live in the acceptance suite.

use std::io::Write;
use std::process::{Command, Stdio};

fn dioph(args: &[&str], stdin: &[u8]) -> (i32, String, String) {
    let mut child = Command::new(env!("CARGO_BIN_EXE_dioph"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.as_mut().unwrap().write_all(stdin).unwrap();
    let out = child.wait_with_output().unwrap();
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

fn golden(name: &str) -> String {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name)
        .display()
        .to_string()
}

#[test]
fn malformed_document_is_a_usage_error() {
    let (code, stdout, stderr) = dioph(&["bound"], b"{\"A\": [[1, 1]]}");
    assert_eq!(code, 2);
    assert!(stdout.is_empty());
    assert!(
        stderr.contains("b"),
        "diagnostic names the missing field: {stderr}"
    );

    let (code, _, stderr) = dioph(&["bound"], b"{\"A\": [[1.5]], \"b\": [1]}");
    assert_eq!(code, 2);
    assert!(
        stderr.contains("A[0][0]"),
        "diagnostic carries the location: {stderr}"
    );
}

#[test]
fn rank_deficient_matrix_is_a_validation_error() {
    let (code, _, stderr) = dioph(&["bound"], b"{\"A\": [[1, 2], [2, 4]], \"b\": [1, 2]}");
    assert_eq!(code, 2);
    assert!(stderr.contains("rank"), "stderr: {stderr}");
}

#[test]
fn oversized_bound_is_reported_not_truncated() {
    let (code, _, stderr) = dioph(&["solve"], b"{\"A\": [[1]], \"b\": [20000]}");
    assert_eq!(code, 3);
    assert!(stderr.contains("cap"), "stderr: {stderr}");

    // a raised cap turns the same system solvable
    let (code, stdout, _) = dioph(
        &["solve", "--cap", "30000"],
        b"{\"A\": [[1]], \"b\": [20000]}",
    );
    assert_eq!(code, 0);
    assert!(stdout.contains("x0 = (20000)"));
}

#[test]
fn oracle_budget_is_enforced() {
    let (code, _, stderr) = dioph(
        &["oracle", "--cap", "100", "--budget", "100"],
        b"{\"A\": [[1, 1]], \"b\": [2]}",
    );
    assert_eq!(code, 3);
    assert!(stderr.contains("budget"), "stderr: {stderr}");
}

#[test]
fn lemma_requires_gcd_one() {
    let (code, _, stderr) = dioph(&["lemma"], b"{\"A\": [[2, 4]], \"b\": [6]}");
    assert_eq!(code, 2);
    assert!(stderr.contains("gcd"), "stderr: {stderr}");
}

#[test]
fn check_on_infeasible_system_holds_vacuously() {
    let (code, stdout, _) = dioph(&["check"], b"{\"A\": [[2]], \"b\": [1]}");
    assert_eq!(code, 0);
    assert!(stdout.contains("feasible = false"));
    assert!(stdout.contains("holds = true"));
    assert!(stdout.contains("oracle agreement = true"));
}

#[test]
fn input_flag_reads_a_file() {
    let (code, stdout, _) = dioph(&["bound", "--input", &golden("two_vars.json")], b"");
    assert_eq!(code, 0);
    assert_eq!(stdout, "d = 2\n");

    let (code, _, stderr) = dioph(&["bound", "--input", "/nonexistent/system.json"], b"");
    assert_eq!(code, 2);
    assert!(stderr.contains("cannot read"), "stderr: {stderr}");
}

#[test]
fn json_reports_have_stable_shapes() {
    let (code, stdout, _) = dioph(&["solve", "--json"], b"{\"A\": [[1, 1]], \"b\": [2]}");
    assert_eq!(code, 0);
    assert_eq!(
        stdout,
        "{\"d\":\"2\",\"feasible\":true,\"x0\":[\"0\",\"2\"]}\n"
    );

    let (code, stdout, _) = dioph(&["solve", "--json"], b"{\"A\": [[2]], \"b\": [1]}");
    assert_eq!(code, 1);
    assert_eq!(stdout, "{\"d\":\"2\",\"feasible\":false,\"x0\":null}\n");

    let (code, stdout, _) = dioph(&["oracle", "--json"], b"{\"A\": [[1, 1]], \"b\": [2]}");
    assert_eq!(code, 0);
    assert_eq!(
        stdout,
        "{\"cap\":\"2\",\"count\":3,\"solutions\":[[\"0\",\"2\"],[\"1\",\"1\"],[\"2\",\"0\"]]}\n"
    );

    let (code, stdout, _) = dioph(&["lemma", "--json"], b"{\"A\": [[1, 2]], \"b\": [3]}");
    assert_eq!(code, 0);
    assert_eq!(stdout, "{\"holds\":true,\"pairs\":2,\"violation\":null}\n");

    let (code, stdout, _) = dioph(&["bound", "--json"], b"{\"A\": [[1, 1]], \"b\": [2]}");
    assert_eq!(code, 0);
    assert_eq!(stdout, "{\"d\":\"2\"}\n");
}

#[test]
fn usage_errors_exit_two() {
    let (code, _, _) = dioph(&["frobnicate"], b"");
    assert_eq!(code, 2);
    let (code, _, _) = dioph(&["fuzz", "--mode", "nonsense"], b"");
    assert_eq!(code, 2);
    let (code, _, stderr) = dioph(&["fuzz", "--mode", "theorem", "--m", "3", "--n", "2"], b"");
    assert_eq!(code, 2);
    assert!(stderr.contains("parameters"), "stderr: {stderr}");
}

#[test]
fn help_exits_zero() {
    let (code, stdout, _) = dioph(&["--help"], b"");
    assert_eq!(code, 0);
    assert!(stdout.contains("bound"));
    assert!(stdout.contains("fuzz"));
}

#[test]
fn fuzz_failures_exit_one() {
    // an impossible d cap turns every trial into a recorded failure
    let (code, stdout, stderr) = dioph(
        &[
            "fuzz", "--mode", "theorem", "--trials", "2", "--seed", "1", "--cap", "0",
        ],
        b"",
    );
    assert_eq!(code, 1);
    assert!(stdout.contains("failures = 2"));
    assert!(stdout.trim_end().ends_with("FAIL"));
    assert!(
        stderr.contains("elapsed"),
        "timing goes to stderr: {stderr}"
    );
}

#[test]
fn elapsed_time_stays_out_of_stdout() {
    let (_, stdout, stderr) = dioph(
        &["fuzz", "--mode", "theorem", "--trials", "3", "--seed", "9"],
        b"",
    );
    assert!(!stdout.contains("elapsed"));
    assert!(stderr.contains("elapsed:"));
}
