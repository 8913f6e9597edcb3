//! Machine-readable report of a GL-transformed run.

use prism_core::backend::BackendKind;
use prism_core::conventions::ConventionTable;
use prism_core::verifier::{verify, FaceId, RunOptions};

fn main() {
    let opts = RunOptions { trials: 3, seed: 42, gl_transform: true, ..RunOptions::default() };
    let report = verify(&[FaceId::W3SqB1], &[BackendKind::Exact, BackendKind::Numeric], &opts, &ConventionTable::shipped());
    println!("{}", report.to_json());
}
