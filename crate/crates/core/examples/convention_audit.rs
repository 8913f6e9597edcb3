//! Sign conventions: the formulas taken literally break a face, and an
//! exhaustive search recovers the tables under which the weight-2 prism commutes.

use prism_core::backend::BackendKind;
use prism_core::conventions::ConventionTable;
use prism_core::verifier::{faces_of_weight, run_face, sign_audit, AuditOptions, FaceId, Pin, RunOptions};

fn main() -> prism_core::Result<()> {
    let opts = RunOptions { trials: 2, ..RunOptions::default() };
    let literal = run_face(&FaceId::W2SqC.spec(), BackendKind::Exact, &opts, &ConventionTable::literal());
    println!("W2-SQ-C under the literal table: {:?}", literal.status);
    if let Some(d) = &literal.difference {
        println!("  {d}");
    }

    let audit = AuditOptions { faces: faces_of_weight(&[2]), seed: 0, trials: 1, pin: Pin::default() };
    let found = sign_audit(&audit);
    println!(
        "{} of {} tables are consistent on weight 2; shipped table among them: {}",
        found.consistent.len(),
        found.tables_searched,
        found.contains(&ConventionTable::shipped())
    );

    let mut pin = Pin::default();
    pin.set("partial_2=1,1")?;
    let forced = sign_audit(&AuditOptions { pin, ..audit });
    println!("with the literal ∂ signs: {}", forced.require_consistent().map(|t| t.len().to_string()).unwrap_or_else(|e| e.to_string()));
    Ok(())
}
