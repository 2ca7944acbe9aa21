//! End-to-end runs of the `pentaflow` binary.

use std::f64::consts::PI;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use pentaflow::geometry::Polygon;
use pentaflow::io::{polygon_to_csv, read_polygon};
use tempfile::TempDir;

fn bin() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_pentaflow"));
    cmd.env_remove("PENTAFLOW_OUTPUT_DIR");
    cmd
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn experiment(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("configs/experiments")
        .join(name)
        .display()
        .to_string()
}

fn write_polygon(dir: &Path, name: &str, poly: &Polygon) -> PathBuf {
    let path = dir.join(name);
    fs::write(&path, polygon_to_csv(poly)).unwrap();
    path
}

fn pentagon() -> Polygon {
    Polygon::regular(5, 1.0, PI / 2.0).unwrap()
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn map_shrinks_pentagon_by_golden_ratio_squared() {
    let tmp = TempDir::new().unwrap();
    let input = write_polygon(tmp.path(), "pent.csv", &pentagon());
    let output = tmp.path().join("image.csv");
    let out = run(&["map", "--input", s(&input), "--output", s(&output)]);
    assert_eq!(code(&out), 0, "{out:?}");
    let image = read_polygon(&output).unwrap();
    assert!((image.diameter() / pentagon().diameter() - 0.381966).abs() < 1e-6);
    assert!(tmp.path().join("image.csv.manifest.json").exists());
}

#[test]
fn map_zero_iterations_is_identity() {
    let tmp = TempDir::new().unwrap();
    let input = write_polygon(tmp.path(), "pent.csv", &pentagon());
    let out = run(&["map", "--input", s(&input), "--iterations", "0"]);
    assert_eq!(code(&out), 0);
    assert_eq!(out.stdout, fs::read(&input).unwrap());
}

#[test]
fn map_rejects_square() {
    let tmp = TempDir::new().unwrap();
    let input = tmp.path().join("square.csv");
    fs::write(&input, "0,0\n1,0\n1,1\n0,1\n").unwrap();
    let out = run(&["map", "--input", s(&input)]);
    assert_eq!(code(&out), 1);
    assert!(String::from_utf8_lossy(&out.stderr).contains("n >= 5"));
}

#[test]
fn map_rejects_malformed_csv() {
    let tmp = TempDir::new().unwrap();
    let input = tmp.path().join("bad.csv");
    fs::write(&input, "0,0\n1,zero\n").unwrap();
    assert_eq!(code(&run(&["map", "--input", s(&input)])), 1);
    assert_eq!(code(&run(&["map"])), 1);
    assert_eq!(code(&run(&["map", "--input", "/nonexistent/poly.csv"])), 1);
}

#[test]
fn invariant_holds_on_hexagon_and_random_polygon() {
    let tmp = TempDir::new().unwrap();
    let hex = write_polygon(
        tmp.path(),
        "hex.csv",
        &Polygon::regular(6, 1.0, 0.0).unwrap(),
    );
    let out = run(&["invariant", "--input", s(&hex), "--iterations", "5"]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
    assert!(
        stdout(&out).starts_with("f(V) = 2.44140625"),
        "{}",
        stdout(&out)
    );

    let dir = tmp.path().join("inv");
    let out = run(&[
        "invariant",
        "--random",
        "12",
        "--seed",
        "7",
        "--iterations",
        "10",
        "--output",
        s(&dir),
    ]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
    for f in [
        "invariant_factors.csv",
        "invariant_drift.csv",
        "manifest.json",
    ] {
        assert!(dir.join(f).exists(), "{f}");
    }
}

#[test]
fn invariant_flags_a_perturbed_run() {
    let out = run(&[
        "invariant",
        "--random",
        "9",
        "--seed",
        "3",
        "--iterations",
        "4",
        "--perturb-at",
        "2",
    ]);
    assert_eq!(code(&out), 3, "{}", stdout(&out));
    assert!(stdout(&out).contains("FAIL"));
}

#[test]
fn invariant_rejects_unknown_tolerance() {
    let out = run(&["invariant", "--random", "9", "--tolerance", "bogus=1"]);
    assert_eq!(code(&out), 1);
}

#[test]
fn flow_claims_exit_codes() {
    let tmp = TempDir::new().unwrap();
    let fig3 = experiment("figure3.json");
    let circle = experiment("circle.json");

    let out = run(&[
        "flow",
        "--config",
        &fig3,
        "--claim",
        "lemma34",
        "--output",
        s(tmp.path()),
    ]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
    assert!(tmp.path().join("lemma34_residuals.csv").exists());
    assert!(tmp.path().join("lemma34_fit.csv").exists());

    let out = run(&[
        "flow",
        "--config",
        &circle,
        "--claim",
        "lemma32",
        "--output",
        s(tmp.path()),
    ]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));

    // The stated first-order rate for the limiting flow is not observed.
    let out = run(&[
        "flow",
        "--config",
        &fig3,
        "--claim",
        "theorem31",
        "--output",
        s(tmp.path()),
    ]);
    assert_eq!(code(&out), 3, "{}", stdout(&out));
    assert!(stdout(&out).contains("theorem31: FAIL"));

    let out = run(&["flow", "--config", &fig3, "--claim", "nope"]);
    assert_eq!(code(&out), 1);
}

#[test]
fn flow_tolerance_override_changes_verdict() {
    let tmp = TempDir::new().unwrap();
    let fig3 = experiment("figure3.json");
    let out = run(&[
        "flow",
        "--config",
        &fig3,
        "--claim",
        "lemma34",
        "--tolerance",
        "slope_band=0.01",
        "--output",
        s(tmp.path()),
    ]);
    assert_eq!(code(&out), 3, "{}", stdout(&out));
}

#[test]
fn figures_pass_and_write_data() {
    let tmp = TempDir::new().unwrap();
    let fig3 = experiment("figure3.json");
    for which in ["fig3", "fig4"] {
        let out = run(&[
            "figure",
            "--config",
            &fig3,
            "--which",
            which,
            "--output",
            s(tmp.path()),
        ]);
        assert_eq!(code(&out), 0, "{which}: {}", stdout(&out));
        for n in [20, 30, 40] {
            let text = fs::read_to_string(tmp.path().join(format!("{which}_n{n}.csv"))).unwrap();
            assert!(text.starts_with("x,mapped_norm,predicted_norm\n"));
            assert_eq!(text.lines().count(), n + 1);
        }
        assert!(tmp.path().join(format!("{which}_summary.csv")).exists());
    }
}

#[test]
fn output_dir_falls_back_to_environment() {
    let tmp = TempDir::new().unwrap();
    let out = bin()
        .args([
            "figure",
            "--config",
            &experiment("figure3.json"),
            "--which",
            "fig3",
        ])
        .env("PENTAFLOW_OUTPUT_DIR", tmp.path())
        .output()
        .unwrap();
    assert_eq!(code(&out), 0);
    assert!(tmp.path().join("fig3_summary.csv").exists());
    assert!(tmp.path().join("manifest.json").exists());
}

fn slope_line(text: &str) -> f64 {
    text.lines()
        .find_map(|l| l.strip_prefix("log-diameter slope "))
        .expect("slope line")
        .parse()
        .unwrap()
}

#[test]
fn converge_regular_slopes() {
    let tmp = TempDir::new().unwrap();
    let cases = [
        (pentagon(), ((3.0 - 5f64.sqrt()) / 2.0).ln()),
        (
            Polygon::regular(6, 1.0, 0.0).unwrap(),
            (1.0 / 3f64.sqrt()).ln(),
        ),
    ];
    for (k, (poly, expected)) in cases.into_iter().enumerate() {
        let input = write_polygon(tmp.path(), &format!("p{k}.csv"), &poly);
        let dir = tmp.path().join(format!("c{k}"));
        let out = run(&[
            "converge",
            "--input",
            s(&input),
            "--steps",
            "10",
            "--output",
            s(&dir),
        ]);
        assert_eq!(code(&out), 0, "{}", stdout(&out));
        assert!(
            (slope_line(&stdout(&out)) - expected).abs() < 1e-6,
            "{}",
            stdout(&out)
        );
        let trace = fs::read_to_string(dir.join("trace.csv")).unwrap();
        assert!(trace.starts_with("step,diameter,log_diameter,invariant_drift\n"));
    }
}

#[test]
fn converge_random_polygon() {
    let tmp = TempDir::new().unwrap();
    let out = run(&[
        "converge",
        "--random",
        "10",
        "--seed",
        "10",
        "--steps",
        "30",
        "--output",
        s(tmp.path()),
    ]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
    assert!(slope_line(&stdout(&out)) < 0.0);
}

fn manifest_files(dir: &Path) -> serde_json::Value {
    let text = fs::read_to_string(dir.join("manifest.json")).unwrap();
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    v["files"].clone()
}

#[test]
fn reruns_are_byte_identical() {
    let tmp = TempDir::new().unwrap();
    let (a, b) = (tmp.path().join("a"), tmp.path().join("b"));
    for dir in [&a, &b] {
        let out = run(&[
            "flow",
            "--config",
            &experiment("figure3.json"),
            "--claim",
            "lemma32",
            "--output",
            s(dir),
        ]);
        assert!(matches!(code(&out), 0 | 3));
    }
    for f in ["lemma32_residuals.csv", "lemma32_fit.csv"] {
        assert_eq!(
            fs::read(a.join(f)).unwrap(),
            fs::read(b.join(f)).unwrap(),
            "{f}"
        );
    }
    assert_eq!(manifest_files(&a), manifest_files(&b));
}

#[test]
fn bad_config_is_an_input_error() {
    let tmp = TempDir::new().unwrap();
    let cfg = tmp.path().join("bad.json");
    fs::write(&cfg, r#"{"curve": "../figure3.json", "bogus": 1}"#).unwrap();
    assert_eq!(
        code(&run(&["flow", "--config", s(&cfg), "--claim", "lemma32"])),
        1
    );
    fs::write(&cfg, r#"{"curve": {"type": "theta_fourier", "terms": [{"amp": 0.1, "freq": 0, "phase": 0.0, "kind": "cos"}]}}"#).unwrap();
    assert_eq!(
        code(&run(&["figure", "--config", s(&cfg), "--which", "fig3"])),
        1
    );
    assert_eq!(
        code(&run(&[
            "figure",
            "--config",
            "/nonexistent.json",
            "--which",
            "fig3"
        ])),
        1
    );
}
