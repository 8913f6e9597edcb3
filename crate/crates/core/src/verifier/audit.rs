//! Exhaustive search for the convention tables under which every exact face
//! commutes.
//!
//! A face only reads the entries listed in its [`Knob`] set, so each face is
//! evaluated once per distinct projection of the table onto those entries.

use std::collections::HashMap;
use std::sync::Mutex;

use serde::Serialize;

use crate::backend::BackendKind;
use crate::conventions::{ConventionTable, Partial3Term};
use crate::error::{Error, Result};

use super::registry::{FaceId, Knob};
use super::run::{run_face, RunOptions, Status};

const SIGNS: [i8; 2] = [1, -1];

fn sign_vectors<const N: usize>() -> Vec<[i8; N]> {
    (0..1usize << N)
        .map(|bits| std::array::from_fn(|k| SIGNS[(bits >> (N - 1 - k)) & 1]))
        .collect()
}

/// Entries held fixed during an audit.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Pin {
    pub boundary_index_base: Option<u8>,
    pub partial3_second_term: Option<Partial3Term>,
    pub alt6_coefficient: Option<String>,
    pub partial_2: Option<[i8; 2]>,
    pub tau2_0: Option<[i8; 2]>,
    pub partial_32: Option<[i8; 3]>,
    pub tau3_0: Option<[i8; 1]>,
    pub tau3_1: Option<[i8; 1]>,
}

fn parse_signs<const N: usize>(v: &str) -> Result<[i8; N]> {
    let parts: Vec<i8> = v
        .split(',')
        .map(|p| p.trim().parse::<i8>().map_err(|e| Error::Parse(format!("{p}: {e}"))))
        .collect::<Result<_>>()?;
    if parts.iter().any(|s| *s != 1 && *s != -1) {
        return Err(Error::Parse(format!("sign entries must be ±1: {v}")));
    }
    parts.try_into().map_err(|_| Error::Parse(format!("expected {N} signs: {v}")))
}

impl Pin {
    /// Adds one `name=value` constraint, e.g. `partial_2=1,1`.
    pub fn set(&mut self, spec: &str) -> Result<()> {
        let (k, v) = spec.split_once('=').ok_or_else(|| Error::Parse(format!("expected name=value: {spec}")))?;
        match k.trim() {
            "boundary_index_base" => {
                self.boundary_index_base = Some(v.trim().parse().map_err(|_| Error::Parse(v.into()))?)
            }
            "partial3_second_term" => {
                self.partial3_second_term = Some(match v.trim() {
                    "one_minus_a" => Partial3Term::OneMinusA,
                    "dlog_a" => Partial3Term::DlogA,
                    other => return Err(Error::Parse(format!("partial3_second_term {other}"))),
                })
            }
            "alt6_coefficient" => {
                crate::scalars::parse_rat(v)?;
                self.alt6_coefficient = Some(v.trim().to_string())
            }
            "partial_2" => self.partial_2 = Some(parse_signs(v)?),
            "tau2_0" => self.tau2_0 = Some(parse_signs(v)?),
            "partial_32" => self.partial_32 = Some(parse_signs(v)?),
            "tau3_0" => self.tau3_0 = Some(parse_signs(v)?),
            "tau3_1" => self.tau3_1 = Some(parse_signs(v)?),
            other => return Err(Error::Parse(format!("unknown convention entry {other}"))),
        }
        Ok(())
    }

    fn admits(&self, t: &ConventionTable) -> bool {
        fn ok<T: PartialEq>(pin: &Option<T>, v: &T) -> bool {
            pin.as_ref().is_none_or(|p| p == v)
        }
        ok(&self.boundary_index_base, &t.boundary_index_base)
            && ok(&self.partial3_second_term, &t.partial3_second_term)
            && ok(&self.alt6_coefficient, &t.alt6_coefficient)
            && ok(&self.partial_2, &t.partial_2)
            && ok(&self.tau2_0, &t.tau2_0)
            && ok(&self.partial_32, &t.partial_32)
            && ok(&self.tau3_0, &t.tau3_0)
            && ok(&self.tau3_1, &t.tau3_1)
    }
}

/// Every table of the search space, in a fixed order (2¹² of them, plus any
/// pinned `Alt₆` coefficient outside the two candidates).
pub fn table_space(pin: &Pin) -> Vec<ConventionTable> {
    let mut alt6: Vec<String> = ConventionTable::alt6_candidates().to_vec();
    if let Some(a) = &pin.alt6_coefficient {
        if !alt6.contains(a) {
            alt6.push(a.clone());
        }
    }
    let mut out = Vec::new();
    for base in [0u8, 1] {
        for p3 in [Partial3Term::DlogA, Partial3Term::OneMinusA] {
            for a in &alt6 {
                for p2 in sign_vectors::<2>() {
                    for t20 in sign_vectors::<2>() {
                        for p32 in sign_vectors::<3>() {
                            for t30 in sign_vectors::<1>() {
                                for t31 in sign_vectors::<1>() {
                                    let t = ConventionTable {
                                        boundary_index_base: base,
                                        partial3_second_term: p3,
                                        alt6_coefficient: a.clone(),
                                        partial_2: p2,
                                        tau2_0: t20,
                                        partial_32: p32,
                                        tau3_0: t30,
                                        tau3_1: t31,
                                    };
                                    if pin.admits(&t) {
                                        out.push(t);
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

/// The entries of `t` a face with the given knobs can see.
fn projection(t: &ConventionTable, knobs: &[Knob]) -> Vec<String> {
    knobs
        .iter()
        .map(|k| match k {
            Knob::Boundary => t.boundary_index_base.to_string(),
            Knob::Partial2 => format!("{:?}", t.partial_2),
            Knob::Tau20 => format!("{:?}", t.tau2_0),
            Knob::Partial32 => format!("{:?}", t.partial_32),
            Knob::Partial3 => format!("{:?}", t.partial3_second_term),
            Knob::Tau30 => format!("{:?}", t.tau3_0),
            Knob::Tau31 => format!("{:?}", t.tau3_1),
            Knob::Alt6 => t.alt6_coefficient.clone(),
        })
        .collect()
}

#[derive(Clone, Debug)]
pub struct AuditOptions {
    pub faces: Vec<FaceId>,
    pub seed: u64,
    /// Exact-backend trials per face evaluation.
    pub trials: usize,
    pub pin: Pin,
}

#[derive(Clone, Debug, Serialize)]
pub struct AuditResult {
    /// Every table under which all audited faces pass, in search order.
    pub consistent: Vec<ConventionTable>,
    pub tables_searched: usize,
    pub face_evaluations: usize,
}

impl AuditResult {
    pub fn contains(&self, t: &ConventionTable) -> bool {
        self.consistent.contains(t)
    }

    pub fn require_consistent(&self) -> Result<&[ConventionTable]> {
        if self.consistent.is_empty() {
            Err(Error::NoConsistentAssignment)
        } else {
            Ok(&self.consistent)
        }
    }
}

/// Exhaustive audit on the exact backend.
pub fn sign_audit(opts: &AuditOptions) -> AuditResult {
    let specs: Vec<_> = opts.faces.iter().map(|f| f.spec()).collect();
    let run = RunOptions { trials: opts.trials, seed: opts.seed, ..RunOptions::default() };
    let cache: Mutex<HashMap<(FaceId, Vec<String>), bool>> = Mutex::new(HashMap::new());
    let space = table_space(&opts.pin);
    let mut consistent = Vec::new();
    for t in &space {
        let all = specs.iter().all(|spec| {
            let key = (spec.id, projection(t, spec.knobs));
            if let Some(v) = cache.lock().expect("cache lock").get(&key) {
                return *v;
            }
            let pass = run_face(spec, BackendKind::Exact, &run, t).status == Status::Pass;
            cache.lock().expect("cache lock").insert(key, pass);
            pass
        });
        if all {
            consistent.push(t.clone());
        }
    }
    let face_evaluations = cache.lock().expect("cache lock").len();
    AuditResult { consistent, tables_searched: space.len(), face_evaluations }
}
