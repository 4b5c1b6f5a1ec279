use std::fs;
use std::path::Path;
use std::process::{Command, Output};
use std::time::Instant;

use newton_leja::nodes::{fast_leja, Interval};
use newton_leja::sweep::{run_sweep, SweepConfig};
use newton_leja::testbed::TestFunction;
use newton_leja::Family;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_newton-leja"))
        .args(args)
        .output()
        .expect("spawn newton-leja")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn sweep_to_stdout() {
    let out = run(&["sweep", "--functions", "runge", "--families", "fast-leja", "--degrees", "2"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "function,family,n,l1,l2,linf,residual,wall_time_s");
    assert_eq!(lines.len(), 2);
    assert!(lines[1].starts_with("runge,fast-leja,2,"));
    let linf: f64 = lines[1].split(',').nth(5).unwrap().parse().unwrap();
    assert_eq!(linf, 1.0 - 1.0 / 26.0);
}

#[test]
fn sweep_is_byte_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    for path in [&a, &b] {
        let out = run(&[
            "sweep",
            "--families",
            "chebyshev-ascending,chebyshev-leja,fast-leja",
            "--degrees",
            "8,16,64,128",
            "--no-timing",
            "--out",
            path.to_str().unwrap(),
        ]);
        assert!(out.status.success());
    }
    let bytes = fs::read(&a).unwrap();
    assert_eq!(bytes, fs::read(&b).unwrap());
    let text = String::from_utf8(bytes).unwrap();
    assert_eq!(text.lines().count(), 1 + 4 * 3 * 4);
    // The unstable baseline is data, not a failure.
    assert!(text.lines().any(|l| l.starts_with("runge,chebyshev-ascending,128,")));
}

#[test]
fn sweep_on_other_interval() {
    let out = run(&[
        "sweep", "--functions", "sqrtabs", "--degrees", "4,8", "--interval", "-1", "3",
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(stdout(&out).lines().count(), 5);
}

#[test]
fn usage_errors_exit_with_one() {
    for args in [
        vec!["sweep", "--functions", "cosine"],
        vec!["sweep", "--families", "leja-ish"],
        vec!["sweep", "--degrees", "16,8"],
        vec!["sweep", "--degrees", "1"],
        vec!["sweep", "--interval", "2", "-2"],
        vec!["nodes", "show", "--n", "1"],
        vec!["frobnicate"],
    ] {
        let out = run(&args);
        assert_eq!(out.status.code(), Some(1), "{args:?}");
    }
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn io_errors_exit_with_two() {
    let dir = tempfile::tempdir().unwrap();
    let missing = dir.path().join("missing.txt");
    let out = run(&["nodes", "show", "--n", "3", "--library", missing.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("missing.txt"));

    let out = run(&["plot", missing.to_str().unwrap(), "--out", "x.gp"]);
    assert_eq!(out.status.code(), Some(2));

    let bad = dir.path().join("bad.txt");
    fs::write(&bad, "not a library\n").unwrap();
    let out = run(&["nodes", "show", "--n", "1", "--library", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains(":1:"));
}

#[test]
fn duplicate_nodes_exit_with_three() {
    let dir = tempfile::tempdir().unwrap();
    let lib = dir.path().join("dup.txt");
    fs::write(&lib, "fastleja v1 lo=-2 hi=2 n=3\n2\n-2\n-2\n").unwrap();
    let out = run(&["nodes", "show", "--n", "3", "--library", lib.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
}

fn show(args: &[&str]) -> Vec<f64> {
    let out = run(args);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    stdout(&out).lines().map(|l| l.parse().unwrap()).collect()
}

#[test]
fn precompute_and_show_library() {
    let dir = tempfile::tempdir().unwrap();
    let lib = dir.path().join("fl.txt");
    let lib_s = lib.to_str().unwrap();
    let out = run(&["nodes", "precompute", "--n", "1000", "--out", lib_s]);
    assert!(out.status.success());
    let text = fs::read_to_string(&lib).unwrap();
    assert!(text.starts_with("fastleja v1 lo=-2 hi=2 n=1000\n"));
    assert_eq!(text.lines().count(), 1001);

    assert_eq!(show(&["nodes", "show", "--n", "2", "--library", lib_s]), vec![2.0, -2.0]);
    assert_eq!(
        show(&["nodes", "show", "--n", "5", "--library", lib_s, "--interval", "0", "4"]),
        vec![4.0, 0.0, 2.0, 3.0, 1.0]
    );
    assert_eq!(
        show(&["nodes", "show", "--n", "1000", "--library", lib_s]),
        fast_leja(Interval::STANDARD, 1000).unwrap().into_values()
    );

    let out = run(&["nodes", "show", "--n", "1001", "--library", lib_s]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("1001") && err.contains("1000"), "{err}");
}

#[test]
fn show_computed_families() {
    assert_eq!(show(&["nodes", "show", "--n", "3"]), vec![2.0, -2.0, 0.0]);
    let cheb = show(&["nodes", "show", "--n", "4", "--family", "chebyshev-leja"]);
    assert_eq!(
        cheb,
        vec![1.8477590650225735, -1.8477590650225735, 0.7653668647301796, -0.7653668647301796]
    );
    let asc = show(&["nodes", "show", "--n", "4", "--family", "chebyshev-ascending"]);
    assert!(asc.windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn plot_writes_gnuplot_script() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("runge.csv");
    let script = dir.path().join("fig.gp");
    let out = run(&[
        "sweep", "--functions", "runge", "--degrees", "8,16", "--out", csv.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let out = run(&["plot", csv.to_str().unwrap(), "--out", script.to_str().unwrap()]);
    assert!(out.status.success());
    let text = fs::read_to_string(&script).unwrap();
    assert!(text.contains(csv.to_str().unwrap()));
    assert_eq!(text.matches("\nplot ").count(), 3);
    assert!(text.contains("set logscale xy"));

    if Command::new("gnuplot").arg("--version").output().is_ok() {
        let status = Command::new("gnuplot").arg(&script).current_dir(dir.path()).status().unwrap();
        assert!(status.success());
        for label in ["linf", "l2", "l1"] {
            assert!(Path::new(&dir.path().join(format!("fig-{label}.png"))).exists());
        }
    }
}

#[test]
fn cost_grows_at_most_quadratically() {
    let time = |n: usize| {
        let config = SweepConfig {
            functions: vec![TestFunction::Runge],
            families: vec![Family::FastLeja],
            degrees: vec![n],
            ..SweepConfig::default()
        };
        let start = Instant::now();
        run_sweep(&config).unwrap();
        start.elapsed().as_secs_f64()
    };
    let (small, large) = (time(1024), time(4096));
    assert!(large / small <= 32.0, "t(1024)={small:.4}s t(4096)={large:.4}s");
}
