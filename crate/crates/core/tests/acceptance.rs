#![allow(clippy::excessive_precision)]

use std::f64::consts::PI;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use prism_core::backend::{canonical, Backend, BackendKind, Exact, Numeric};
use prism_core::configs::{boundary, random_generic, ConfigChain, IndexBase};
use prism_core::conventions::ConventionTable;
use prism_core::groups::{five_term_r2, five_term_rho2d, partial_2, seven_term_r3};
use prism_core::oracles::{bloch_wigner, li_n, sv_l3};
use prism_core::scalars::{rat_int, Rat, RatFunc, Scalar, CF};
use prism_core::verifier::{run_face, sign_audit, verify, AuditOptions, FaceId, FaceReport, Pin, RunOptions, Status};

const CATALAN: f64 = 0.915_965_594_177_219_015;
const ZETA3: f64 = 1.202_056_903_159_594_285;

struct Line {
    n: usize,
    title: &'static str,
    pass: bool,
    detail: String,
    elapsed: Duration,
    limit: Duration,
}

fn run(n: usize, title: &'static str, limit_s: u64, body: impl FnOnce() -> (bool, String)) -> Line {
    let start = Instant::now();
    let (ok, detail) = body();
    let elapsed = start.elapsed();
    let limit = Duration::from_secs(limit_s);
    let line = Line { n, title, pass: ok && elapsed <= limit, detail, elapsed, limit };
    println!(
        "criterion {} {:<32} {}  {:.1}s/{}s  {}",
        line.n,
        line.title,
        if line.pass { "PASS" } else { "FAIL" },
        line.elapsed.as_secs_f64(),
        line.limit.as_secs(),
        line.detail
    );
    line
}

fn summarize(rows: &[FaceReport]) -> (bool, String) {
    let bad: Vec<String> = rows
        .iter()
        .filter(|r| r.status != Status::Pass && r.status != Status::Skipped)
        .map(|r| format!("{} {} {:?}", r.id, r.backend, r.status))
        .collect();
    let trials: usize = rows.iter().map(|r| r.trials).sum();
    let worst = rows.iter().map(|r| r.max_relative_residual).fold(0.0, f64::max);
    let all_skipped_somewhere = rows.iter().all(|r| r.status == Status::Skipped);
    let ok = bad.is_empty() && !all_skipped_somewhere;
    (ok, format!("{} rows, {trials} trials, max residual {worst:.1e}{}", rows.len(), if ok { String::new() } else { format!(", bad: {bad:?}") }))
}

fn chain_condition() -> (bool, String) {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut nonzero = 0;
    for k in 0..100 {
        let n = 2 + k % 2;
        let m = rng.gen_range(n + 2..=7);
        let mut chain = ConfigChain::new();
        for _ in 0..rng.gen_range(1..=3) {
            let c = random_generic::<Rat>(m, n, &mut rng).expect("generic configuration");
            chain.add_term(c, rat_int(rng.gen_range(-5..=5)));
        }
        for base in [IndexBase::Zero, IndexBase::One] {
            if !boundary(&boundary(&chain, base), base).is_empty() {
                nonzero += 1;
            }
        }
    }
    (nonzero == 0, format!("100 chains, {nonzero} with d∘d ≠ 0"))
}

fn weight_two() -> (bool, String) {
    let faces = prism_core::verifier::faces_of_weight(&[2]);
    let opts = RunOptions { trials: 50, ..RunOptions::default() };
    let report = verify(&faces, &[BackendKind::Formal, BackendKind::Exact], &opts, &ConventionTable::shipped());
    let (ok, detail) = summarize(&report.faces);
    (ok && report.all_pass() && faces.len() == 5, detail)
}

fn weight_three_exact() -> (bool, String) {
    let faces = [FaceId::W3SqA1, FaceId::W3SqB1, FaceId::W3Tri1, FaceId::W3Tri2, FaceId::W3Tri3];
    let opts = RunOptions { trials: 30, ..RunOptions::default() };
    let report = verify(&faces, &[BackendKind::Formal, BackendKind::Exact], &opts, &ConventionTable::shipped());
    let exact_clean = report.faces.iter().filter(|r| r.backend == BackendKind::Exact).all(|r| r.status == Status::Pass);
    let (ok, detail) = summarize(&report.faces);
    (ok && exact_clean && report.all_pass(), detail)
}

fn weight_three_quotient() -> (bool, String) {
    let faces = [FaceId::W3SqA2, FaceId::W3SqB2];
    let opts = RunOptions { trials: 10, ..RunOptions::default() };
    let report = verify(&faces, &[BackendKind::Numeric, BackendKind::Exact], &opts, &ConventionTable::shipped());
    let every_row = report.faces.iter().all(|r| r.status == Status::Pass && r.trials >= 10);
    let (ok, detail) = summarize(&report.faces);
    (ok && every_row, detail)
}

fn relations() -> (bool, String) {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut worst_r2 = 0.0f64;
    for _ in 0..100 {
        let c = Numeric.random_config(5, 2, &mut rng).expect("config");
        let f = Numeric.functionals(&five_term_r2(&Numeric, &c).expect("five-term")).expect("functional");
        worst_r2 = worst_r2.max(f[0].relative());
    }
    let mut surviving = 0;
    let table = ConventionTable::shipped();
    let mut drawn = 0;
    while drawn < 100 {
        let (a, b) = (Exact.random_generator(&mut rng).expect("a"), Exact.random_generator(&mut rng).expect("b"));
        let Ok(rho) = five_term_rho2d(&Exact, &a, &b) else { continue };
        drawn += 1;
        let image = partial_2(&Exact, &rho, &table).expect("∂ of the relation");
        if !canonical(&Exact, &[&image]).expect("canonical form")[0].is_empty() {
            surviving += 1;
        }
    }
    let mut worst_r3 = 0.0f64;
    for _ in 0..5 {
        let c = Numeric.random_config(7, 3, &mut rng).expect("config");
        let f = Numeric.functionals(&seven_term_r3(&Numeric, &c).expect("seven-term")).expect("functional");
        worst_r3 = worst_r3.max(f[0].relative());
    }
    let ok = worst_r2 < 1e-10 && surviving == 0 && worst_r3 < 1e-6;
    (ok, format!("D₂ on R₂ {worst_r2:.1e}, ∂ of ρ₂ nonzero {surviving}/100, L₃ on R₃ {worst_r3:.1e}"))
}

fn generator_squares_and_audit() -> (bool, String) {
    let shipped = ConventionTable::shipped();
    let opts = RunOptions { trials: 100, ..RunOptions::default() };
    let rows: Vec<FaceReport> =
        [FaceId::W2SqC, FaceId::W3SqC].iter().map(|id| run_face(&id.spec(), BackendKind::Exact, &opts, &shipped)).collect();
    let squares = rows.iter().all(|r| r.status == Status::Pass && r.trials == 100);

    let all = AuditOptions { faces: FaceId::ALL.to_vec(), seed: 0, trials: 1, pin: Pin::default() };
    let found = sign_audit(&all);
    let mut pin = Pin::default();
    pin.set("partial_2=1,1").expect("pin");
    let forced = sign_audit(&AuditOptions { pin, ..all.clone() });
    let ok = squares && found.contains(&shipped) && forced.consistent.is_empty() && forced.require_consistent().is_err();
    (
        ok,
        format!(
            "squares {}, audit {} consistent of {}, literal ∂ slice {} of {}",
            if squares { "pass" } else { "fail" },
            found.consistent.len(),
            found.tables_searched,
            forced.consistent.len(),
            forced.tables_searched
        ),
    )
}

fn numeric_kernels() -> (bool, String) {
    let li2 = li_n(CF::new(1.0, 0.0), 2).expect("Li₂(1)");
    let l3 = sv_l3(CF::new(1.0, 0.0)).expect("L₃(1)");
    let d2 = bloch_wigner(CF::new(0.0, 1.0)).expect("D₂(i)");
    let e = [(li2 - CF::new(PI * PI / 6.0, 0.0)).norm(), (l3 - ZETA3).abs(), (d2 - CATALAN).abs()];
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut broken = 0;
    for _ in 0..1000 {
        let f: RatFunc = Exact.random_unit(&mut rng).expect("f");
        let g: RatFunc = Exact.random_unit(&mut rng).expect("g");
        let lhs = f.mul(&g).derive();
        let rhs = f.derive().mul(&g).add(&f.mul(&g.derive()));
        if lhs != rhs {
            broken += 1;
        }
    }
    let ok = e.iter().all(|x| *x < 1e-10) && broken == 0;
    (ok, format!("errors {:.1e} {:.1e} {:.1e}, Leibniz failures {broken}/1000", e[0], e[1], e[2]))
}

fn gl_invariance() -> (bool, String) {
    let opts = RunOptions { trials: 10, gl_transform: true, ..RunOptions::default() };
    let report = verify(&FaceId::ALL, &[BackendKind::Exact], &opts, &ConventionTable::shipped());
    let (ok, detail) = summarize(&report.faces);
    (ok && report.all_pass(), detail)
}

fn main() {
    let lines = vec![
        run(1, "chain condition", 5, chain_condition),
        run(2, "weight-2 prism", 30, weight_two),
        run(3, "weight-3 exact faces", 120, weight_three_exact),
        run(4, "weight-3 quotient faces", 600, weight_three_quotient),
        run(5, "relation annihilation", 300, relations),
        run(6, "generator squares and sign audit", 600, generator_squares_and_audit),
        run(7, "numeric kernels and Leibniz", 60, numeric_kernels),
        run(8, "GL invariance", 600, gl_invariance),
    ];
    let failed: Vec<usize> = lines.iter().filter(|l| !l.pass).map(|l| l.n).collect();
    println!("acceptance: {}/{} criteria pass", lines.len() - failed.len(), lines.len());
    for l in &lines {
        if !l.pass {
            println!("  criterion {} ({}) failed: {}", l.n, l.title, l.detail);
        }
    }
    if !failed.is_empty() {
        std::process::exit(1);
    }
}
