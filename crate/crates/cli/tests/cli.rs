//! End-to-end tests against the compiled binary: golden output lines, file
//! export, exit codes, and byte-for-byte determinism.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_buergi"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

#[test]
fn fig4_verifies_and_prints_the_golden_lines() {
    let out = run(&["fig4"]);
    assert!(out.status.success(), "exit: {:?}", out.status);
    let text = stdout(&out);
    assert!(text.contains("Col. 2: 0,63,124,181,232,276,312,339,356,362"));
    assert!(text.contains("Col. 5: 0,2235060,4402208,6435596,8273441,9859902,11146776,12094962,12675649,12871192"));
    assert!(text.contains("aux 4: 2235060,2167148,2033388,1837845,1586461,1286874,948186,580687,195543"));
    assert!(text.contains("391086/2 = 195543"));
    let ratios = text
        .lines()
        .find(|l| l.starts_with("ratios:"))
        .expect("ratios line");
    assert!(ratios.contains("0.17364825") && ratios.contains("0.984807701"));
    assert!(text.contains("verified 86/86 values"));
}

#[test]
fn fig4_is_deterministic() {
    assert_eq!(run(&["fig4"]).stdout, run(&["fig4"]).stdout);
}

#[test]
fn degree_table_csv_golden_row() {
    let out = run(&["table", "--step", "60", "--precision", "9"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 91, "header + 90 rows");
    assert_eq!(lines[0], "angle_arcmin,angle_display,sine_decimal,sine_sexagesimal");
    assert_eq!(
        lines.iter().filter(|l| l.starts_with("angle_arcmin")).count(),
        1,
        "header exactly once"
    );
    assert!(lines.contains(&"1800,30\u{00B0}0\u{2032},0.500000000,0;30,0,0,0,0,0,0"));
    assert!(lines.contains(&"5400,90\u{00B0}0\u{2032},1.000000000,1;0,0,0,0,0,0,0"));
}

#[test]
fn minute_table_csv_has_5400_rows() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("minutes.csv");
    let out = run(&[
        "table",
        "--step",
        "1",
        "--precision",
        "12",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 5401);
    assert!(lines[1].starts_with("1,0\u{00B0}1\u{2032},0.000290888205,"));
    assert!(lines[5400].starts_with("5400,90\u{00B0}0\u{2032},1.000000000000,1;0,0,0,0,0,0,0"));
}

#[test]
fn table_output_is_byte_identical_between_runs() {
    let a = run(&["table", "--step", "300", "--precision", "12"]);
    let b = run(&["table", "--step", "300", "--precision", "12"]);
    assert!(a.status.success());
    assert!(!a.stdout.is_empty());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn ascii_and_tsv_variants() {
    let out = run(&[
        "table", "--step", "60", "--precision", "9", "--format", "tsv", "--ascii",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("1800\t30deg0'\t0.500000000\t0;30,0,0,0,0,0,0"));
}

#[test]
fn sexagesimal_text_format() {
    let out = run(&[
        "table", "--step", "1800", "--precision", "9", "--format", "sexagesimal-text",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 3);
    assert_eq!(lines[0], "30\u{00B0}0\u{2032}  0;30,0,0,0,0,0,0");
    assert_eq!(lines[2], "90\u{00B0}0\u{2032}  1;0,0,0,0,0,0,0");
}

#[test]
fn export_is_an_alias_for_table() {
    let out = run(&["export", "--step", "1800", "--precision", "6"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("1800,30\u{00B0}0\u{2032},0.500000,0;30,0,0,0,0,0,0"));
}

#[test]
fn bad_step_and_bad_precision_exit_2() {
    let out = run(&["table", "--step", "7", "--precision", "9"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["table", "--step", "60", "--precision", "60"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["table", "--step", "0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unwritable_output_path_exits_2() {
    let out = run(&[
        "table", "--step", "1800", "--output", "/nonexistent-dir/t.csv",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn eigen_trivial_case_is_exactly_half() {
    let out = run(&["eigen", "--n", "1", "--iterations", "3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("= 0.5000000000"));
    assert_eq!(text.matches("0.5000000000 ").count(), 3, "every ratio is 1/2");
}

#[test]
fn eigen_worked_example_ratio_after_four_steps() {
    let out = run(&[
        "eigen", "--n", "9", "--seed", "2,4,6,7,8,9,10,11,12", "--iterations", "4",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("32.9115239110"), "closed form");
    assert!(text.contains("32.9114107894"), "12871192/391086");
}

#[test]
fn eigen_large_n_closed_form() {
    let out = run(&["eigen", "--n", "90", "--iterations", "2", "--precision", "4"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("3282.8897"));
}

#[test]
fn iterate_reports_convergence() {
    let out = run(&["iterate", "--n", "9", "--target-digits", "9", "--precision", "10"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("10.0000  0.1736481777"));
    assert!(text.contains("90.0000  1.0000000000"));
    assert!(text.contains("closed-form eigenvalue: 32.9115"));
    let out = run(&["iterate", "--n", "3", "--seed", "1,2"]);
    assert_eq!(out.status.code(), Some(2), "seed length mismatch");
}

#[test]
fn compare_within_budgets() {
    let out = run(&["compare"]);
    assert!(out.status.success(), "budgets should hold");
    let text = stdout(&out);
    assert!(text.contains("budgets: iteration < 1e-9: OK; chords < 5e-6: OK"));
}

#[test]
fn prost_square_of_sin_30_degrees() {
    let out = run(&["prost", "--alpha", "1800", "--beta", "1800"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("estimate: 0.25000000000000"));
}

#[test]
fn prost_rejects_out_of_range_angles() {
    let out = run(&["prost", "--alpha", "0", "--beta", "60"]);
    assert_eq!(out.status.code(), Some(2));
}
