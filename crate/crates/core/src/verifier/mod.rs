//! Face registry, trial driver, convention audit and reports.

pub mod audit;
pub mod faces;
pub mod registry;
pub mod run;

pub use audit::{sign_audit, table_space, AuditOptions, AuditResult, Pin};
pub use registry::{faces_of_weight, parse_faces, registry, Comparison, FaceId, FaceSpec, Knob, Sample};
pub use run::{run_face, verify, FaceReport, Report, RunOptions, Status, Verdict};
