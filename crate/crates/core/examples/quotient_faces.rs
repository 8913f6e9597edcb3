//! A weight-3 face that only holds modulo the relation subgroups: checked
//! numerically through single-valued functionals and exactly through the
//! projection that kills the relations.

use prism_core::backend::BackendKind;
use prism_core::conventions::ConventionTable;
use prism_core::verifier::{verify, FaceId, RunOptions};

fn main() {
    let id = FaceId::W3SqA2;
    let spec = id.spec();
    println!("{id}: {} = {}  ({})", spec.left, spec.right, spec.statement);
    let opts = RunOptions { trials: 1, ..RunOptions::default() };
    let report = verify(&[id], &[BackendKind::Numeric, BackendKind::Exact], &opts, &ConventionTable::shipped());
    for r in &report.faces {
        println!(
            "{:<8} {:?}  residual {:.2e}  {} ms",
            r.backend.to_string(),
            r.status,
            r.max_relative_residual,
            r.elapsed_ms
        );
    }
}
