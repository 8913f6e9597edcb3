use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;

fn prism(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_prism")).args(args).output().expect("prism runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

fn scratch(name: &str) -> PathBuf {
    std::env::temp_dir().join(format!("prism-cli-{}-{name}", std::process::id()))
}

#[test]
fn weight_two_json_report() {
    let path = scratch("w2.json");
    let p = path.to_str().unwrap();
    let (code, _, err) =
        prism(&["verify", "--weight", "2", "--backend", "all", "--trials", "5", "--seed", "7", "--report", "json", "--out", p]);
    assert_eq!(code, 0, "{err}");
    let report: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    std::fs::remove_file(&path).ok();
    assert_eq!(report["version"], "1");
    assert_eq!(report["seed"], 7);
    assert!(report["convention"]["partial_2"].is_array());
    let faces = report["faces"].as_array().unwrap();
    let mut ids: Vec<&str> = faces.iter().map(|f| f["id"].as_str().unwrap()).collect();
    ids.dedup();
    assert_eq!(ids, ["W2-SQ-A", "W2-SQ-B", "W2-SQ-C", "W2-TRI-1", "W2-TRI-2"]);
    for f in faces {
        for key in ["weight", "backend", "trials", "degenerate_resamples", "failures", "max_relative_residual", "elapsed_ms", "counterexample"] {
            assert!(f.get(key).is_some(), "missing {key}");
        }
    }
}

#[test]
fn literal_table_fails_with_counterexample() {
    let path = scratch("literal.json");
    std::fs::write(&path, prism_core::conventions::ConventionTable::literal().to_json()).unwrap();
    let (code, out, _) = prism(&[
        "verify",
        "--faces",
        "W2-SQ-C",
        "--backend",
        "exact",
        "--trials",
        "3",
        "--convention",
        path.to_str().unwrap(),
        "--report",
        "json",
    ]);
    std::fs::remove_file(&path).ok();
    assert_eq!(code, 1);
    let report: Value = serde_json::from_str(&out).unwrap();
    let row = &report["faces"][0];
    assert_eq!(row["status"], "fail");
    assert!(row["counterexample"].is_string());
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(prism(&["verify", "--faces", "W9-SQ-Z"]).0, 2);
    assert_eq!(prism(&["verify", "--weight", "4"]).0, 2);
    assert_eq!(prism(&["verify", "--faces", "W3-SQ-C", "--weight", "2"]).0, 2);
    assert_eq!(prism(&["audit", "--pin", "partial_2=1"]).0, 2);
    assert_eq!(prism(&["frobnicate"]).0, 2);
}

#[test]
fn audit_writes_the_shipped_table() {
    let path = scratch("table.json");
    let (code, _, err) = prism(&["audit", "--weight", "2", "--trials", "1", "--out", path.to_str().unwrap()]);
    assert_eq!(code, 0, "{err}");
    let table = prism_core::conventions::ConventionTable::from_json(&std::fs::read_to_string(&path).unwrap()).unwrap();
    std::fs::remove_file(&path).ok();
    assert_eq!(table, prism_core::conventions::ConventionTable::shipped());
}

#[test]
fn audit_with_literal_boundary_sign_is_empty() {
    let (code, _, err) = prism(&["audit", "--weight", "2", "--trials", "1", "--pin", "partial_2=1,1"]);
    assert_eq!(code, 1);
    assert!(err.contains("0 consistent"), "{err}");
}
