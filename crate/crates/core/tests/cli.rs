use std::path::Path;
use std::process::{Command, Output};

use esoa::harness::{read_convergence_csv, read_summary_json};

fn esoa(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_esoa"))
        .args(args)
        .output()
        .expect("spawn esoa")
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn benchmark_protocol_writes_outputs() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().to_str().unwrap();
    let o = esoa(&[
        "--problem",
        "f1",
        "--dim",
        "30",
        "--pop",
        "50",
        "--iters",
        "500",
        "--trials",
        "2",
        "--seed",
        "42",
        "--out",
        out,
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let stdout = String::from_utf8_lossy(&o.stdout);
    assert!(stdout.lines().any(|l| l.starts_with("f1 ")));

    let csv = dir.path().join("f1_trial000.csv");
    let text = std::fs::read_to_string(&csv).unwrap();
    assert_eq!(text.lines().count(), 501);
    assert!(text.ends_with('\n'));
    let trace = read_convergence_csv(&csv).unwrap();
    assert!(trace.windows(2).all(|p| p[1] <= p[0]));

    let summary = read_summary_json(&dir.path().join("f1_summary.json")).unwrap();
    assert_eq!(summary.problem, "f1");
    assert_eq!(
        (summary.dim, summary.population, summary.max_iterations),
        (30, 50, 500)
    );
    assert_eq!((summary.trials, summary.seed), (2, 42));
    assert_eq!(summary.best_position.len(), 30);
    assert_eq!(summary.violation, 0.0);
    assert!(summary.best <= summary.ave && summary.ave <= summary.worst);
}

#[test]
fn spring_summary_reports_feasible_best() {
    let dir = tempfile::tempdir().unwrap();
    let o = esoa(&[
        "--problem",
        "spring",
        "--pop",
        "10",
        "--iters",
        "500",
        "--trials",
        "5",
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(String::from_utf8_lossy(&o.stdout).contains("violation"));
    let s = read_summary_json(&dir.path().join("spring_summary.json")).unwrap();
    assert_eq!(s.best_position.len(), 3);
    assert_eq!(s.dim, 3);
    assert_eq!(s.violation, 0.0);
    assert!(s.best > 0.0126 && s.best < 0.0135, "best {}", s.best);
    assert_eq!(s.value, s.raw_value);
}

#[test]
fn unknown_problem_exits_2_with_valid_keys() {
    let o = esoa(&["--problem", "nosuch"]);
    assert_eq!(o.status.code(), Some(2));
    let err = stderr(&o);
    assert!(err.contains("nosuch"));
    for key in ["f1", "f7", "himmelblau", "spring"] {
        assert!(err.contains(key), "{err}");
    }
}

#[test]
fn no_arguments_prints_usage_and_exits_2() {
    let o = esoa(&[]);
    assert_eq!(o.status.code(), Some(2));
    let text = format!("{}{}", stderr(&o), String::from_utf8_lossy(&o.stdout));
    assert!(text.contains("Usage"), "{text}");
}

#[test]
fn unknown_flag_exits_2() {
    let o = esoa(&["--problem", "f1", "--bogus"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("Usage"));
}

#[test]
fn bad_configuration_exits_2() {
    assert_eq!(
        esoa(&["--problem", "f1", "--pop", "0"]).status.code(),
        Some(2)
    );
    assert_eq!(
        esoa(&["--problem", "f1", "--dim", "0"]).status.code(),
        Some(2)
    );
    assert_eq!(
        esoa(&["--problem", "f1", "--trials", "0"]).status.code(),
        Some(2)
    );
}

#[test]
fn unwritable_output_exits_1() {
    let dir = tempfile::tempdir().unwrap();
    let blocker = dir.path().join("file");
    std::fs::write(&blocker, "x").unwrap();
    let target = blocker.join("sub");
    let o = esoa(&[
        "--problem",
        "f1",
        "--dim",
        "2",
        "--pop",
        "3",
        "--iters",
        "5",
        "--trials",
        "1",
        "--out",
        target.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains(Path::new("file").to_str().unwrap()));
}

#[test]
fn cli_main_is_deterministic_in_process() {
    let run = |dir: &Path| {
        let code = esoa::harness::cli_main([
            "esoa",
            "--problem",
            "himmelblau",
            "--pop",
            "10",
            "--iters",
            "50",
            "--trials",
            "3",
            "--out",
            dir.to_str().unwrap(),
        ]);
        assert_eq!(code, 0);
        std::fs::read(dir.join("himmelblau_summary.json")).unwrap()
    };
    let a = tempfile::tempdir().unwrap();
    let b = tempfile::tempdir().unwrap();
    assert_eq!(run(a.path()), run(b.path()));
}
