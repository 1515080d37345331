use std::process::{Command, Output};

use pade_roots_cli::output::read_csv;
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pade-roots")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn golden(name: &str) -> String {
    let path = format!("{}/tests/golden/{name}", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(path).unwrap()
}

#[test]
fn tan_table_matches_golden() {
    assert_eq!(stdout(&["table", "--kind", "tan", "--kappa", "1", "--rows", "10"]), golden("table_tan.csv"));
    assert_eq!(
        stdout(&["table", "--kind", "tan", "--kappa", "1", "--rows", "10", "--format", "markdown"]),
        golden("table_tan.md")
    );
}

#[test]
fn cot_table_matches_golden() {
    assert_eq!(stdout(&["table", "--kind", "cot", "--kappa", "1", "--rows", "10"]), golden("table_cot.csv"));
    assert_eq!(
        stdout(&["table", "--kind", "cot", "--kappa", "1", "--rows", "10", "--format", "markdown"]),
        golden("table_cot.md")
    );
}

#[test]
fn golden_tables_agree_with_reference_roots() {
    let tan = read_csv(&golden("table_tan.csv")).unwrap();
    let cot = read_csv(&golden("table_cot.csv")).unwrap();
    assert_eq!(tan.rows[0][1], "4.49340946");
    assert_eq!(tan.rows[9][1], "32.95638904");
    assert_eq!(cot.rows[0][1], "3.42561846");
    assert_eq!(cot.rows[9][2], "1.00101185");
    assert!(tan.header[3].contains("1e-3") && cot.header[3].contains("1e-2"));
}

#[test]
fn spec_examples() {
    assert_eq!(stdout(&["roots", "--kind", "tan", "--kappa", "1", "--n", "1", "--method", "oracle"]), "4.49340946\n");
    assert_eq!(stdout(&["wien", "--method", "pade-ii"]), "4.965114231797\n");
    assert_eq!(stdout(&["wien", "--method", "lambert"]), "4.965114231744\n");
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["table", "--kind", "cot", "--kappa", "2.5", "--rows", "7", "--format", "json"][..],
        &["error-curve", "--from", "-0.35", "--to", "1", "--points", "27", "--variant", "pade-ii"],
        &["planck", "--temperature", "5800", "--from", "1e-7", "--to", "3e-6", "--points", "50"],
    ] {
        assert_eq!(run(args).stdout, run(args).stdout, "{args:?}");
    }
}

#[test]
fn csv_round_trips() {
    let runs: [&[&str]; 5] = [
        &["table", "--kind", "tan", "--kappa", "0.5", "--rows", "5"],
        &["error-curve", "--from", "-0.4", "--to", "1.2", "--points", "17", "--variant", "taylor:4"],
        &["diffraction", "profile", "--from", "0", "--to", "20", "--points", "41"],
        &["delta", "double", "--ratio", "2"],
        &["lambert", "--x", "0.5", "--variant", "pade-i", "--format", "csv"],
    ];
    for args in runs {
        let text = stdout(args);
        assert!(!text.contains('\r'));
        let t = read_csv(&text).unwrap();
        assert!(!t.rows.is_empty());
        assert!(t.rows.iter().all(|r| r.len() == t.header.len()));
        for r in &t.rows {
            for cell in r.iter().filter(|c| c.starts_with(|ch: char| ch.is_ascii_digit() || ch == '-')) {
                if cell != "-inf" && cell != "-1" {
                    assert!(cell.parse::<f64>().is_ok(), "{args:?}: {cell}");
                }
            }
        }
    }
}

#[test]
fn error_curve_flags_range() {
    let t = read_csv(&stdout(&["error-curve", "--from", "-0.5", "--to", "1.5", "--points", "5", "--variant", "pade-ii"])).unwrap();
    let status: Vec<&str> = t.rows.iter().map(|r| r[2].as_str()).collect();
    assert_eq!(status, ["out-of-range", "zero-argument", "ok", "ok", "out-of-range"]);
    assert_eq!(t.rows[0][1], "");
}

#[test]
fn json_has_nested_fields() {
    let v: Value = serde_json::from_str(&stdout(&[
        "roots", "--kind", "cot", "--kappa", "1", "--n", "1", "--method", "pade", "--format", "json",
    ]))
    .unwrap();
    assert_eq!(v["inputs"]["kind"], "cot");
    assert_eq!(v["method"], "pade");
    assert_eq!(v["value"].as_f64().unwrap(), 3.42201844);
    assert!(v["residual"].as_f64().unwrap().abs() < 5e-2);

    let v: Value = serde_json::from_str(&stdout(&["delta", "double", "--ratio", "2", "--format", "json"])).unwrap();
    assert_eq!(v["value"][0]["state"], "even");
    assert!((v["value"][0]["energy"].as_f64().unwrap() + 0.614782).abs() < 1e-6);
    assert!((v["value"][1]["energy"].as_f64().unwrap() + 0.317454).abs() < 1e-6);
}

#[test]
fn application_values() {
    assert_eq!(stdout(&["wien", "--constant"]), "0.002897771955\n");
    let xi: f64 = stdout(&["spring", "--ratio", "1"]).trim().parse().unwrap();
    assert!((xi - 0.35).abs() < 0.005);
    let w: f64 = stdout(&["spring", "--m", "1", "--m0", "0", "--k", "4"]).trim().parse().unwrap();
    assert_eq!(w, 2.0);
    let t = read_csv(&stdout(&["diffraction", "maxima", "--n", "3"])).unwrap();
    let pct: Vec<&str> = t.rows.iter().map(|r| r[4].as_str()).collect();
    assert_eq!(pct[0], "4.7");
    assert_eq!(pct[2], "0.8");
    let e: f64 = stdout(&["delta", "single", "--n", "1", "--oracle"]).trim().parse().unwrap();
    assert_eq!(e, 0.0);
}

#[test]
fn writes_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t.csv");
    let out = run(&["table", "--kind", "tan", "--kappa", "1", "--rows", "10", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), golden("table_tan.csv"));
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| run(args).status.code().unwrap();
    assert_eq!(code(&["frobnicate"]), 2);
    assert_eq!(code(&["roots", "--kind", "tan", "--kappa", "1", "--n", "1", "--method", "guess"]), 2);
    assert_eq!(code(&["roots", "--kind", "tan", "--kappa", "1", "--n", "1"]), 2);
    assert_eq!(code(&["lambert", "--x", "0.1", "--variant", "pade-iii"]), 2);
    assert_eq!(code(&["spring", "--ratio", "1", "--m", "1"]), 2);
    assert_eq!(code(&["roots", "--kind", "tan", "--kappa", "2", "--n", "1", "--method", "frankel"]), 1);
    assert_eq!(code(&["lambert", "--x", "-1", "--variant", "oracle"]), 1);
    assert_eq!(code(&["wien", "--method", "contour", "--nodes", "4"]), 1);
    assert_eq!(code(&["delta", "single", "--n", "2"]), 1);
    assert_eq!(code(&["planck", "--temperature", "-3", "--from", "1e-7", "--to", "1e-6", "--points", "3"]), 1);
    assert_eq!(code(&["--version"]), 0);
    let err = run(&["delta", "single", "--n", "2"]);
    assert!(String::from_utf8_lossy(&err.stderr).starts_with("error:"));
    assert!(err.stdout.is_empty());
}
