//! Every weight-2 face on all three backends.

use prism_core::backend::BackendKind;
use prism_core::conventions::ConventionTable;
use prism_core::verifier::{faces_of_weight, verify, RunOptions};

fn main() {
    let opts = RunOptions { trials: 10, seed: 1, ..RunOptions::default() };
    let backends = [BackendKind::Formal, BackendKind::Exact, BackendKind::Numeric];
    let report = verify(&faces_of_weight(&[2]), &backends, &opts, &ConventionTable::shipped());
    print!("{}", report.to_text());
    println!("all pass: {}", report.all_pass());
}
