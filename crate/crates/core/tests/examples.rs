use std::path::PathBuf;
use std::process::Command;

const EXAMPLES: &[(&str, &str)] = &[
    ("exact_field", "Dlog(a(1-a))"),
    ("grassmannian_complex", "d∘d has 0"),
    ("polylog_oracles", "five-term"),
    ("symbolic_square", "equal: true"),
    ("verify_weight_two", "all pass: true"),
    ("quotient_faces", "Pass"),
    ("convention_audit", "shipped table among them: true"),
    ("json_report", "\"W3-SQ-B1\""),
];

fn examples_dir() -> PathBuf {
    // target/<profile>/deps/<this test> → target/<profile>/examples
    let exe = std::env::current_exe().unwrap();
    exe.parent().and_then(|p| p.parent()).unwrap().join("examples")
}

#[test]
fn examples_run() {
    let dir = examples_dir();
    for (name, expect) in EXAMPLES {
        let path = dir.join(name);
        assert!(path.exists(), "{} not built; run through `cargo test`", path.display());
        let out = Command::new(&path).output().unwrap();
        let stdout = String::from_utf8_lossy(&out.stdout);
        assert!(out.status.success(), "{name}: {}", String::from_utf8_lossy(&out.stderr));
        assert!(stdout.contains(expect), "{name} printed:\n{stdout}");
    }
}
