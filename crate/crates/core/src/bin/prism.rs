use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use prism_core::backend::BackendKind;
use prism_core::conventions::ConventionTable;
use prism_core::verifier::{faces_of_weight, parse_faces, sign_audit, verify, AuditOptions, FaceId, Pin, RunOptions};

#[derive(Parser)]
#[command(name = "prism", about = "Check every face of the weight 2 and 3 prism diagrams")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum BackendArg {
    Formal,
    Exact,
    Numeric,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportArg {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Run face checks.
    Verify {
        /// Weights to check, e.g. `2`, `3` or `2,3`.
        #[arg(long, default_value = "2,3")]
        weight: String,
        /// Comma-separated face ids or `all`; intersected with --weight.
        #[arg(long, default_value = "all")]
        faces: String,
        #[arg(long, value_enum, default_value = "all")]
        backend: BackendArg,
        #[arg(long, default_value_t = 50)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Relative residual tolerance of the numeric backend.
        #[arg(long, default_value_t = 1e-8)]
        tolerance: f64,
        /// Convention table (JSON); defaults to the shipped table.
        #[arg(long)]
        convention: Option<PathBuf>,
        /// Apply a random GL transformation to each trial configuration.
        #[arg(long)]
        gl: bool,
        #[arg(long, value_enum, default_value = "text")]
        report: ReportArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Search all convention tables for those under which every exact face commutes.
    Audit {
        #[arg(long, default_value = "2,3")]
        weight: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Exact trials per face evaluation.
        #[arg(long, default_value_t = 3)]
        trials: usize,
        /// Hold an entry fixed, e.g. `--pin partial_2=1,1` (repeatable).
        #[arg(long)]
        pin: Vec<String>,
        /// Where to write the first consistent table.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn usage(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn parse_weights(s: &str) -> Result<Vec<u8>, String> {
    let w: Vec<u8> = s
        .split(',')
        .map(|p| p.trim().parse::<u8>().map_err(|e| format!("weight {p}: {e}")))
        .collect::<Result<_, _>>()?;
    match w.iter().find(|x| **x != 2 && **x != 3) {
        Some(x) => Err(format!("unsupported weight {x}")),
        None => Ok(w),
    }
}

fn write_out(path: &Option<PathBuf>, text: &str) -> Result<(), String> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| format!("{}: {e}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Verify { weight, faces, backend, trials, seed, tolerance, convention, gl, report, out } => {
            let weights = match parse_weights(&weight) {
                Ok(w) => w,
                Err(e) => return usage(e),
            };
            let requested = match parse_faces(&faces) {
                Ok(f) => f,
                Err(e) => return usage(e),
            };
            let in_weight = faces_of_weight(&weights);
            let ids: Vec<FaceId> = requested.into_iter().filter(|f| in_weight.contains(f)).collect();
            if ids.is_empty() {
                return usage("no face matches --faces and --weight");
            }
            let table = match convention {
                Some(p) => match std::fs::read_to_string(&p).map_err(|e| e.to_string()).and_then(|s| {
                    ConventionTable::from_json(&s).map_err(|e| e.to_string())
                }) {
                    Ok(t) => t,
                    Err(e) => return usage(format!("{}: {e}", p.display())),
                },
                None => ConventionTable::shipped(),
            };
            let backends = match backend {
                BackendArg::Formal => vec![BackendKind::Formal],
                BackendArg::Exact => vec![BackendKind::Exact],
                BackendArg::Numeric => vec![BackendKind::Numeric],
                BackendArg::All => vec![BackendKind::Formal, BackendKind::Exact, BackendKind::Numeric],
            };
            let opts = RunOptions { trials, seed, tolerance, gl_transform: gl };
            let r = verify(&ids, &backends, &opts, &table);
            let text = match report {
                ReportArg::Text => r.to_text(),
                ReportArg::Json => r.to_json() + "\n",
            };
            if let Err(e) = write_out(&out, &text) {
                return usage(e);
            }
            if r.all_pass() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Command::Audit { weight, seed, trials, pin, out } => {
            let weights = match parse_weights(&weight) {
                Ok(w) => w,
                Err(e) => return usage(e),
            };
            let mut p = Pin::default();
            for spec in &pin {
                if let Err(e) = p.set(spec) {
                    return usage(e);
                }
            }
            let opts = AuditOptions { faces: faces_of_weight(&weights), seed, trials, pin: p };
            let result = sign_audit(&opts);
            eprintln!(
                "searched {} tables, {} face evaluations, {} consistent",
                result.tables_searched,
                result.face_evaluations,
                result.consistent.len()
            );
            match result.require_consistent() {
                Ok(tables) => {
                    let shipped = ConventionTable::shipped();
                    let chosen = tables.iter().find(|t| **t == shipped).unwrap_or(&tables[0]);
                    if let Err(e) = write_out(&out, &(chosen.to_json() + "\n")) {
                        return usage(e);
                    }
                    ExitCode::SUCCESS
                }
                Err(e) => {
                    eprintln!("{e}");
                    ExitCode::from(1)
                }
            }
        }
    }
}
