use std::collections::HashSet;

use prism_core::backend::BackendKind;
use prism_core::conventions::ConventionTable;
use prism_core::verifier::{parse_faces, registry, sign_audit, verify, AuditOptions, FaceId, Pin, RunOptions, Sample};

#[test]
fn every_face_registered_once() {
    let specs = registry();
    assert_eq!(specs.len(), FaceId::ALL.len());
    let ids: HashSet<FaceId> = specs.iter().map(|s| s.id).collect();
    assert_eq!(ids.len(), specs.len());
    assert_eq!(specs.iter().filter(|s| s.weight == 2).count(), 5);
    assert_eq!(specs.iter().filter(|s| s.weight == 3).count(), 9);
    for s in &specs {
        assert_eq!(s.id.as_str().starts_with("W2"), s.weight == 2);
        assert_eq!(s.id.as_str().parse::<FaceId>().unwrap(), s.id);
        if let Sample::Config { points, dim } = s.sample {
            assert_eq!(dim, s.weight as usize);
            assert!(points > dim);
        }
    }
}

#[test]
fn face_lists_parse() {
    assert_eq!(parse_faces("all").unwrap().len(), 14);
    assert_eq!(parse_faces("w3-tri-2, W2-SQ-A,W2-SQ-A").unwrap(), vec![FaceId::W2SqA, FaceId::W3Tri2]);
    assert!(parse_faces("W2-SQ-Q").is_err());
}

fn without_timing(json: String) -> serde_json::Value {
    let mut v: serde_json::Value = serde_json::from_str(&json).unwrap();
    for f in v["faces"].as_array_mut().unwrap() {
        f["elapsed_ms"] = 0.into();
    }
    v
}

#[test]
fn reports_are_deterministic() {
    let opts = RunOptions { trials: 4, seed: 11, ..RunOptions::default() };
    let faces = [FaceId::W2SqB, FaceId::W3SqD, FaceId::W3Tri1];
    let run = || verify(&faces, &[BackendKind::Exact, BackendKind::Numeric], &opts, &ConventionTable::shipped()).to_json();
    assert_eq!(without_timing(run()), without_timing(run()));
}

#[test]
fn audit_order_is_deterministic() {
    let opts = AuditOptions { faces: vec![FaceId::W2SqB, FaceId::W2Tri1], seed: 3, trials: 1, pin: Pin::default() };
    let a = sign_audit(&opts);
    let b = sign_audit(&opts);
    assert!(!a.consistent.is_empty());
    assert_eq!(a.consistent, b.consistent);
}
