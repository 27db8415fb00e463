// Copyright 2026 The spinsym Authors
// SPDX-License-Identifier: Apache-2.0

use std::process::{Command, Output};

fn spinsym(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_spinsym"))
        .args(args)
        .output()
        .expect("spawn spinsym")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn csv_rows(text: &str) -> Vec<Vec<String>> {
    text.lines()
        .take_while(|l| !l.is_empty())
        .map(|l| l.split(',').map(str::to_owned).collect())
        .collect()
}

#[test]
fn tables_two_at_pi() {
    let out = spinsym(&["tables", "--which", "II", "--theta", "3.141592653589793"]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let rows = csv_rows(&stdout(&out));
    let header = &rows[0];
    let state = header.iter().position(|h| h == "state").unwrap();
    let weight = header.iter().position(|h| h == "weight_numeric").unwrap();
    let phi1: Vec<&Vec<String>> = rows[1..].iter().filter(|r| r[state] == "phi1").collect();
    assert_eq!(phi1.len(), 5);
    let w: f64 = phi1[0][weight].parse().unwrap();
    assert!((w - 2.0 / 3.0).abs() < 1e-12);
}

#[test]
fn printed_table_one_fails_verification() {
    let out = spinsym(&[
        "tables",
        "--which",
        "I",
        "--transcription",
        "printed",
        "--theta",
        "0.7",
    ]);
    assert_eq!(code(&out), 2);
    assert!(!out.stdout.is_empty());
    let ok = spinsym(&["tables", "--which", "I", "--theta", "0.7"]);
    assert_eq!(code(&ok), 0);
}

#[test]
fn leakage_four_qubits_flags() {
    let out = spinsym(&["leakage", "--n", "4"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let summary = text.split("\n\n").nth(1).unwrap();
    let rows = csv_rows(summary);
    assert_eq!(rows[0], ["state", "max_leakage", "retained"]);
    let flags: Vec<&str> = rows[1..].iter().map(|r| r[2].as_str()).collect();
    assert_eq!(flags, ["false", "true", "false", "true", "false"]);
}

#[test]
fn invariant_and_commutators() {
    let out = spinsym(&["invariant", "--n", "4"]);
    assert_eq!(code(&out), 0);
    assert_eq!(csv_rows(&stdout(&out))[1], ["4", "ising", "4", "2"]);

    let out = spinsym(&["commutators", "--n", "3"]);
    assert_eq!(code(&out), 0);
    let rows = csv_rows(&stdout(&out));
    assert_eq!(rows[1], ["A_Jx", "0.0000000000000000e0"]);
    assert_eq!(rows[4], ["A_J2", "0.0000000000000000e0"]);
}

#[test]
fn xyz_model_flags() {
    let out = spinsym(&[
        "commutators",
        "--n",
        "4",
        "--model",
        "xyz",
        "--cx",
        "1",
        "--cy",
        "1",
        "--cz",
        "1",
    ]);
    assert_eq!(code(&out), 0);
    for row in &csv_rows(&stdout(&out))[1..] {
        assert!(row[1].parse::<f64>().unwrap() < 1e-12, "{row:?}");
    }
    let out = spinsym(&["commutators", "--n", "4", "--cz", "2"]);
    assert_eq!(code(&out), 1);
}

#[test]
fn exit_codes() {
    assert_eq!(code(&spinsym(&["leakage"])), 1);
    assert_eq!(code(&spinsym(&["bogus"])), 1);
    assert_eq!(code(&spinsym(&["leakage", "--n", "4", "--tol", "-1"])), 1);
    assert_eq!(
        code(&spinsym(&[
            "leakage", "--n", "4", "--theta", "1", "--steps", "3"
        ])),
        1
    );
    assert_eq!(code(&spinsym(&["invariant", "--n", "13"])), 3);
    assert_eq!(
        code(&spinsym(&["squeeze", "--n", "4", "--state", "dicke:0"])),
        4
    );
    assert_eq!(code(&spinsym(&["--help"])), 0);
    let version = spinsym(&["--version"]);
    assert_eq!(code(&version), 0);
    assert!(stdout(&version).starts_with("spinsym "));
}

#[test]
fn errors_go_to_stderr() {
    let out = spinsym(&["squeeze", "--n", "4", "--state", "dicke:0"]);
    assert!(out.stdout.is_empty());
    assert!(!out.stderr.is_empty());
}

#[test]
fn out_file_matches_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("leakage.csv");
    let args = ["leakage", "--n", "5", "--steps", "8"];
    let direct = spinsym(&args);
    let mut with_out = args.to_vec();
    with_out.extend(["--out", path.to_str().unwrap()]);
    let written = spinsym(&with_out);
    assert_eq!(code(&written), 0);
    assert!(written.stdout.is_empty());
    assert_eq!(std::fs::read(&path).unwrap(), direct.stdout);
}

#[test]
fn json_mirrors_csv() {
    let args = [
        "squeeze",
        "--n",
        "4",
        "--state",
        "basis:0001",
        "--theta",
        "0.9",
    ];
    let csv = stdout(&spinsym(&args));
    let mut json_args = args.to_vec();
    json_args.extend(["--format", "json"]);
    let json_text = stdout(&spinsym(&json_args));
    let json: serde_json::Value = serde_json::from_str(&json_text).unwrap();
    assert_eq!(json["command"], "squeeze");

    let rows = csv_rows(&csv);
    let records = json["squeeze"].as_array().unwrap();
    assert_eq!(records.len(), rows.len() - 1);
    for (record, row) in records.iter().zip(&rows[1..]) {
        let object = record.as_object().unwrap();
        assert_eq!(object.len(), rows[0].len());
        for (key, cell) in rows[0].iter().zip(row) {
            let value = &object[key];
            match value.as_f64() {
                Some(x) => {
                    let y: f64 = cell.parse().unwrap();
                    assert!((x - y).abs() <= f64::EPSILON * y.abs(), "{key}: {x} vs {y}");
                }
                None => assert_eq!(value.as_str().unwrap(), cell),
            }
        }
    }
    let positions: Vec<usize> = rows[0]
        .iter()
        .map(|k| json_text.find(&format!("\"{k}\":")).unwrap())
        .collect();
    assert!(
        positions.windows(2).all(|w| w[0] < w[1]),
        "key order follows the CSV header"
    );
    // Float text is identical in both formats.
    for cell in &rows[1][2..] {
        assert!(json_text.contains(cell.as_str()), "{cell}");
    }
}

#[test]
fn repeated_runs_are_identical() {
    for args in [
        &["tables", "--which", "I"][..],
        &["leakage", "--n", "6", "--format", "json"],
        &["invariant", "--n", "5"],
    ] {
        let a = spinsym(args);
        let b = spinsym(args);
        assert_eq!(code(&a), 0);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}
