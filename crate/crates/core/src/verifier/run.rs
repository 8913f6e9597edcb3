//! Seeded, parallel trial driver and face reports.

use std::fmt::Write as _;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::backend::{Backend, BackendKind, ExactBackend, Exact, Formal, Numeric};
use crate::configs::RETRY_BUDGET;
use crate::conventions::ConventionTable;
use crate::error::{Error, Result};

use super::faces::{compare_exact, compare_numeric, sides, Input, Outcome};
use super::registry::{FaceId, FaceSpec};

/// Version of the JSON report layout.
pub const REPORT_VERSION: &str = "1";

#[derive(Clone, Debug)]
pub struct RunOptions {
    pub trials: usize,
    pub seed: u64,
    /// Relative functional tolerance, numeric backend only.
    pub tolerance: f64,
    /// Apply a random invertible linear map to every drawn configuration.
    pub gl_transform: bool,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions { trials: 50, seed: 0, tolerance: 1e-8, gl_transform: false }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    /// The formal backend disagreed; its lattice is not faithful on the
    /// additive slot, so this alone does not refute the face.
    Inconclusive,
    Skipped,
}

#[derive(Clone, Debug, Serialize)]
pub struct FaceReport {
    pub id: FaceId,
    pub weight: u8,
    pub backend: BackendKind,
    pub status: Status,
    pub trials: usize,
    pub degenerate_resamples: usize,
    pub failures: usize,
    /// Largest relative residual: functional residuals for the numeric
    /// backend, 0 (empty difference) or 1 for exact backends.
    pub max_relative_residual: f64,
    pub elapsed_ms: u64,
    /// Serialized input of the first failing trial.
    pub counterexample: Option<String>,
    pub difference: Option<String>,
    pub note: Option<String>,
    pub gl_transformed: bool,
}

/// Independent stream for trial `i` of a face on a backend.
fn trial_seed(seed: u64, face: FaceId, backend: BackendKind, i: usize) -> u64 {
    let mut x = seed ^ 0x9E37_79B9_7F4A_7C15;
    for v in [face as u64 + 1, backend as u64 + 1, i as u64 + 1] {
        x = x.wrapping_add(v).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        x ^= x >> 31;
    }
    x
}

type Compare<B> = dyn Fn(&crate::groups::Elt<B>, &crate::groups::Elt<B>) -> Result<Outcome> + Sync;

struct Trial {
    outcome: Outcome,
    resamples: usize,
    input: String,
}

fn one_trial<B: Backend>(
    b: &B,
    spec: &FaceSpec,
    opts: &RunOptions,
    rng: &mut ChaCha8Rng,
    compare: &Compare<B>,
    table: &ConventionTable,
) -> Result<Trial> {
    let mut resamples = 0;
    for _ in 0..RETRY_BUDGET {
        let attempt = Input::draw(b, spec, opts.gl_transform, rng).and_then(|input| {
            let (l, r) = sides(b, spec.id, &input, table)?;
            Ok((compare(&l, &r)?, input))
        });
        match attempt {
            Ok((outcome, input)) => return Ok(Trial { outcome, resamples, input: input.render(b) }),
            Err(e) if e.is_degenerate() => resamples += 1,
            Err(e) => return Err(e),
        }
    }
    Err(Error::RetryLimitExceeded(RETRY_BUDGET))
}

fn drive<B: Backend>(
    b: &B,
    spec: &FaceSpec,
    trials: usize,
    opts: &RunOptions,
    table: &ConventionTable,
    compare: &Compare<B>,
) -> FaceReport {
    let start = Instant::now();
    let results: Vec<Result<Trial>> = (0..trials)
        .into_par_iter()
        .map(|i| {
            let mut rng = ChaCha8Rng::seed_from_u64(trial_seed(opts.seed, spec.id, b.kind(), i));
            one_trial(b, spec, opts, &mut rng, compare, table)
        })
        .collect();
    let mut report = FaceReport {
        id: spec.id,
        weight: spec.weight,
        backend: b.kind(),
        status: Status::Pass,
        trials: 0,
        degenerate_resamples: 0,
        failures: 0,
        max_relative_residual: 0.0,
        elapsed_ms: 0,
        counterexample: None,
        difference: None,
        note: None,
        gl_transformed: opts.gl_transform,
    };
    for r in results {
        match r {
            Ok(t) => {
                report.trials += 1;
                report.degenerate_resamples += t.resamples;
                report.max_relative_residual = report.max_relative_residual.max(t.outcome.residual);
                if !t.outcome.equal {
                    report.failures += 1;
                    if report.counterexample.is_none() {
                        report.counterexample = Some(t.input);
                        report.difference = t.outcome.difference;
                    }
                }
            }
            Err(e @ (Error::NotCrossRatioShape(_) | Error::BackendInadmissible { .. })) => {
                report.status = Status::Skipped;
                report.note = Some(e.to_string());
                break;
            }
            Err(e) => {
                report.status = Status::Fail;
                report.note = Some(e.to_string());
                break;
            }
        }
    }
    if report.status == Status::Pass {
        if report.failures > 0 {
            report.status = if b.kind() == BackendKind::Formal { Status::Inconclusive } else { Status::Fail };
        } else if report.trials == 0 {
            report.status = Status::Fail;
            report.note = Some("no effective trials".into());
        }
    }
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    report
}

fn exact_compare<'a, B: ExactBackend>(
    b: &'a B,
    spec: &FaceSpec,
) -> impl Fn(&crate::groups::Elt<B>, &crate::groups::Elt<B>) -> Result<Outcome> + Sync + 'a {
    let how = spec.comparison;
    move |l, r| compare_exact(b, how, l, r)
}

/// Runs one face on one backend. The formal backend is symbolic, so it runs
/// a single trial whatever `opts.trials` says.
pub fn run_face(spec: &FaceSpec, backend: BackendKind, opts: &RunOptions, table: &ConventionTable) -> FaceReport {
    match backend {
        BackendKind::Formal => drive(&Formal, spec, opts.trials.min(1), opts, table, &exact_compare(&Formal, spec)),
        BackendKind::Exact => drive(&Exact, spec, opts.trials, opts, table, &exact_compare(&Exact, spec)),
        BackendKind::Numeric => {
            let tol = opts.tolerance;
            drive(&Numeric, spec, opts.trials, opts, table, &move |l, r| compare_numeric(l, r, tol))
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub version: &'static str,
    pub seed: u64,
    pub convention: ConventionTable,
    pub faces: Vec<FaceReport>,
}

/// Overall verdict of one face across the backends that ran.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
    Undecided,
}

impl Report {
    /// Fails if any backend failed; passes if some backend passed.
    pub fn verdict(&self, id: FaceId) -> Verdict {
        let rows: Vec<&FaceReport> = self.faces.iter().filter(|r| r.id == id).collect();
        if rows.iter().any(|r| r.status == Status::Fail) {
            Verdict::Fail
        } else if rows.iter().any(|r| r.status == Status::Pass) {
            Verdict::Pass
        } else {
            Verdict::Undecided
        }
    }

    pub fn face_ids(&self) -> Vec<FaceId> {
        let mut ids: Vec<FaceId> = self.faces.iter().map(|r| r.id).collect();
        ids.dedup();
        ids
    }

    pub fn all_pass(&self) -> bool {
        self.face_ids().into_iter().all(|id| self.verdict(id) == Verdict::Pass)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "seed {}  convention {}", self.seed, compact_table(&self.convention));
        for r in &self.faces {
            let _ = writeln!(
                s,
                "{:<9} {:<8} {:<12} trials {:>3}  resampled {:>3}  failures {:>3}  residual {:.2e}  {:>7} ms{}",
                r.id.as_str(),
                r.backend.to_string(),
                format!("{:?}", r.status).to_lowercase(),
                r.trials,
                r.degenerate_resamples,
                r.failures,
                r.max_relative_residual,
                r.elapsed_ms,
                if r.gl_transformed { "  (GL)" } else { "" },
            );
            if let Some(n) = &r.note {
                let _ = writeln!(s, "          note: {n}");
            }
            if let Some(c) = &r.counterexample {
                let _ = writeln!(s, "          counterexample: {c}");
            }
            if let Some(d) = &r.difference {
                let _ = writeln!(s, "          difference: {d}");
            }
        }
        for id in self.face_ids() {
            let _ = writeln!(s, "{:<9} {:?}", id.as_str(), self.verdict(id));
        }
        s
    }
}

fn compact_table(t: &ConventionTable) -> String {
    serde_json::to_string(t).expect("tables serialize")
}

/// Runs every requested face on every requested backend, in registry order.
pub fn verify(faces: &[FaceId], backends: &[BackendKind], opts: &RunOptions, table: &ConventionTable) -> Report {
    let mut rows = Vec::new();
    for &id in faces {
        let spec = id.spec();
        for &backend in backends {
            rows.push(run_face(&spec, backend, opts, table));
        }
    }
    Report { version: REPORT_VERSION, seed: opts.seed, convention: table.clone(), faces: rows }
}
