//! Reproducible experiment runs behind the `pentaflow` binary.
//!
//! Each `run_*` function computes everything first, then writes its files and
//! a `manifest.json` listing them with SHA-256 checksums. The returned
//! [`Report`] carries the text for standard output and the exit status.
//!
//! Exit statuses: 0 success, 1 input error, 2 geometric degeneracy,
//! 3 claim-check failure.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::time::Instant;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::corpus::seeded_convex_polygon;
use crate::curve::{CurveConfig, CurveConfigError, ThetaFourierCurve};
use crate::error::GeometryError;
use crate::flow::{
    figure_data, figure_table, max_gap, sweep_claim, Claim, FlowRhs, SweepError, DEFAULT_SWEEP,
};
use crate::geometry::{pentagram_map, Point2, Polygon};
use crate::invariant::{invariant_f, iterate_and_measure};
use crate::io::{fmt_real, polygon_to_csv, read_polygon, Cell, CsvError, Table};
use crate::tolerances;

/// Fallback output directory when neither the command line nor the config names one.
pub const OUTPUT_DIR_ENV: &str = "PENTAFLOW_OUTPUT_DIR";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitStatus {
    Success = 0,
    InputError = 1,
    Degenerate = 2,
    ClaimFailed = 3,
}

impl ExitStatus {
    pub fn code(self) -> i32 {
        self as i32
    }
}

#[derive(Debug, Error)]
pub enum RunError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Degenerate(String),
    #[error("cannot write {path}: {source}")]
    Write {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl RunError {
    pub fn status(&self) -> ExitStatus {
        match self {
            RunError::Input(_) | RunError::Write { .. } => ExitStatus::InputError,
            RunError::Degenerate(_) => ExitStatus::Degenerate,
        }
    }
}

impl From<CsvError> for RunError {
    fn from(e: CsvError) -> Self {
        match e {
            CsvError::Geometry(GeometryError::TooFewVertices(_) | GeometryError::NonFinite(_)) => {
                RunError::Input(e.to_string())
            }
            CsvError::Geometry(_) => RunError::Degenerate(e.to_string()),
            other => RunError::Input(other.to_string()),
        }
    }
}

impl From<CurveConfigError> for RunError {
    fn from(e: CurveConfigError) -> Self {
        RunError::Input(e.to_string())
    }
}

impl From<SweepError> for RunError {
    fn from(e: SweepError) -> Self {
        match e {
            SweepError::Geometry(g) => RunError::Degenerate(g.to_string()),
            fit @ SweepError::Fit { .. } => RunError::Degenerate(fit.to_string()),
        }
    }
}

/// What a successful computation has to say.
#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub status: ExitStatus,
    pub stdout: String,
    pub written: Vec<PathBuf>,
}

/// Where the curve comes from: a path (relative to the config file) or inline JSON.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CurveRef {
    Path(String),
    Inline(CurveConfig),
}

/// `"all"` or an explicit index list.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum IndexSelection {
    All(AllMarker),
    List(Vec<usize>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AllMarker {
    All,
}

impl Default for IndexSelection {
    fn default() -> Self {
        IndexSelection::All(AllMarker::All)
    }
}

/// Experiment description read from JSON.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    pub curve: CurveRef,
    #[serde(default)]
    pub n_values: Option<Vec<usize>>,
    /// Figure rows to keep; flow sweeps use `eval_points` instead.
    #[serde(default)]
    pub indices: IndexSelection,
    /// Parameter values at which flow claims are measured.
    #[serde(default = "default_eval_points")]
    pub eval_points: Vec<f64>,
    #[serde(default)]
    pub tolerances: BTreeMap<String, f64>,
    #[serde(default)]
    pub output_dir: Option<PathBuf>,
    #[serde(default)]
    pub seed: u64,
}

fn default_eval_points() -> Vec<f64> {
    vec![crate::flow::EVAL_POINTS[0]]
}

/// A parsed config plus what is needed to resolve relative paths and hash it.
#[derive(Debug, Clone)]
pub struct LoadedConfig {
    pub config: ExperimentConfig,
    pub curve: ThetaFourierCurve,
    pub hash: String,
}

impl ExperimentConfig {
    pub fn load(path: &Path) -> Result<LoadedConfig, RunError> {
        let bytes = std::fs::read(path)
            .map_err(|e| RunError::Input(format!("cannot read config {}: {e}", path.display())))?;
        let config: ExperimentConfig = serde_json::from_slice(&bytes)
            .map_err(|e| RunError::Input(format!("invalid config {}: {e}", path.display())))?;
        let base = path.parent().unwrap_or(Path::new("."));
        let curve = match &config.curve {
            CurveRef::Path(p) => CurveConfig::from_path(&base.join(p))?.build(),
            CurveRef::Inline(c) => {
                c.validate()?;
                c.build()
            }
        };
        if let Some(ns) = &config.n_values {
            if ns.is_empty() || ns.iter().any(|n| *n < Polygon::MIN_VERTICES) {
                return Err(RunError::Input(
                    "n_values must be nonempty with every n >= 5".into(),
                ));
            }
        }
        if config.eval_points.is_empty() {
            return Err(RunError::Input("eval_points must be nonempty".into()));
        }
        for key in config.tolerances.keys() {
            if tolerances::default_for(key).is_none() {
                return Err(RunError::Input(format!("unknown tolerance key {key:?}")));
            }
        }
        Ok(LoadedConfig {
            config,
            curve,
            hash: hex::encode(Sha256::digest(&bytes)),
        })
    }
}

/// Named tolerances: defaults, then config overrides, then command-line overrides.
#[derive(Debug, Clone, PartialEq)]
pub struct Tolerances(BTreeMap<String, f64>);

impl Tolerances {
    pub fn resolve(
        config: Option<&BTreeMap<String, f64>>,
        overrides: &[String],
    ) -> Result<Self, RunError> {
        let mut map: BTreeMap<String, f64> = tolerances::DEFAULTS
            .iter()
            .map(|(k, v)| (k.to_string(), *v))
            .collect();
        if let Some(cfg) = config {
            map.extend(cfg.iter().map(|(k, v)| (k.clone(), *v)));
        }
        for spec in overrides {
            let (key, value) = spec
                .split_once('=')
                .ok_or_else(|| RunError::Input(format!("tolerance {spec:?} is not KEY=VAL")))?;
            if !map.contains_key(key) {
                return Err(RunError::Input(format!("unknown tolerance key {key:?}")));
            }
            let value: f64 = value
                .parse()
                .map_err(|_| RunError::Input(format!("tolerance {key}: bad value {value:?}")))?;
            map.insert(key.to_owned(), value);
        }
        Ok(Self(map))
    }

    pub fn get(&self, key: &str) -> f64 {
        self.0[key]
    }
}

/// Files of one run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ManifestEntry {
    pub file: String,
    pub sha256: String,
    pub bytes: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunManifest {
    pub command: String,
    pub config_hash: String,
    pub tool_version: String,
    pub files: Vec<ManifestEntry>,
    pub wall_clock_seconds: f64,
}

/// Writes `files` into `dir` followed by `manifest_name`.
fn emit(
    dir: &Path,
    files: &[(String, String)],
    command: &str,
    config_hash: &str,
    started: Instant,
    manifest_name: &str,
) -> Result<Vec<PathBuf>, RunError> {
    std::fs::create_dir_all(dir).map_err(|source| RunError::Write {
        path: dir.display().to_string(),
        source,
    })?;
    let mut written = Vec::new();
    let mut entries = Vec::new();
    for (name, contents) in files {
        let path = dir.join(name);
        write_file(&path, contents)?;
        entries.push(ManifestEntry {
            file: name.clone(),
            sha256: hex::encode(Sha256::digest(contents.as_bytes())),
            bytes: contents.len(),
        });
        written.push(path);
    }
    let manifest = RunManifest {
        command: command.to_owned(),
        config_hash: config_hash.to_owned(),
        tool_version: env!("CARGO_PKG_VERSION").to_owned(),
        files: entries,
        wall_clock_seconds: started.elapsed().as_secs_f64(),
    };
    let path = dir.join(manifest_name);
    let json = serde_json::to_string_pretty(&manifest).expect("manifest serializes");
    write_file(&path, &(json + "\n"))?;
    written.push(path);
    Ok(written)
}

fn write_file(path: &Path, contents: &str) -> Result<(), RunError> {
    std::fs::write(path, contents).map_err(|source| RunError::Write {
        path: path.display().to_string(),
        source,
    })
}

fn hash_of(parts: &[&str]) -> String {
    let mut h = Sha256::new();
    for p in parts {
        h.update(p.as_bytes());
        h.update([0u8]);
    }
    hex::encode(h.finalize())
}

/// Resolves the output directory: explicit flag, then config, then environment, then `pentaflow-out`.
pub fn output_dir(flag: Option<&Path>, config: Option<&Path>) -> PathBuf {
    flag.map(Path::to_path_buf)
        .or_else(|| config.map(Path::to_path_buf))
        .or_else(|| std::env::var_os(OUTPUT_DIR_ENV).map(PathBuf::from))
        .unwrap_or_else(|| PathBuf::from("pentaflow-out"))
}

/// Source of the polygon for `map`, `invariant` and `converge`.
#[derive(Debug, Clone, PartialEq)]
pub enum PolygonSource {
    File(PathBuf),
    /// A seeded random convex polygon with this many vertices.
    Random {
        n: usize,
        seed: u64,
    },
}

impl PolygonSource {
    fn load(&self) -> Result<(Polygon, String), RunError> {
        match self {
            PolygonSource::File(path) => {
                let poly = read_polygon(path)?;
                let text = polygon_to_csv(&poly);
                Ok((poly, text))
            }
            PolygonSource::Random { n, seed } => {
                if *n < Polygon::MIN_VERTICES {
                    return Err(RunError::Input(format!(
                        "polygon needs n >= 5 vertices, got {n}"
                    )));
                }
                let poly = seeded_convex_polygon(*seed, *n);
                let text = polygon_to_csv(&poly);
                Ok((poly, text))
            }
        }
    }
}

/// `map`: writes `T^iterations(V)` as polygon CSV (to `output`, or stdout when absent).
pub fn run_map(
    source: &PolygonSource,
    iterations: usize,
    output: Option<&Path>,
) -> Result<Report, RunError> {
    let started = Instant::now();
    let (mut poly, input_text) = source.load()?;
    for k in 1..=iterations {
        poly = pentagram_map(&poly)
            .map_err(|e| RunError::Degenerate(format!("iteration {k}: {e}")))?;
    }
    let csv = polygon_to_csv(&poly);
    match output {
        None => Ok(Report {
            status: ExitStatus::Success,
            stdout: csv,
            written: Vec::new(),
        }),
        Some(path) => {
            let dir = path
                .parent()
                .filter(|p| !p.as_os_str().is_empty())
                .unwrap_or(Path::new("."));
            let name = path
                .file_name()
                .ok_or_else(|| {
                    RunError::Input(format!("output {} is not a file path", path.display()))
                })?
                .to_string_lossy()
                .into_owned();
            let manifest = format!("{name}.manifest.json");
            let hash = hash_of(&["map", &input_text, &iterations.to_string()]);
            let written = emit(dir, &[(name, csv)], "map", &hash, started, &manifest)?;
            Ok(Report {
                status: ExitStatus::Success,
                stdout: format!("wrote {}\n", path.display()),
                written,
            })
        }
    }
}

/// Test hook for `invariant`: displace vertex 0 after the given iteration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Perturbation {
    pub after_iteration: usize,
    /// Displacement as a fraction of the polygon diameter.
    pub size: f64,
}

/// `invariant`: prints `f(V)` and the drift at every iteration.
pub fn run_invariant(
    source: &PolygonSource,
    iterations: usize,
    tolerance_overrides: &[String],
    perturb: Option<Perturbation>,
    output: Option<&Path>,
) -> Result<Report, RunError> {
    let started = Instant::now();
    let tol = Tolerances::resolve(None, tolerance_overrides)?;
    let budget = tol.get("invariant_drift");
    let (mut poly, input_text) = source.load()?;
    let degenerate =
        |k: usize, e: GeometryError| RunError::Degenerate(format!("iteration {k}: {e}"));

    let first = invariant_f(&poly).map_err(|e| degenerate(0, e))?;
    let f0 = first.f_signed;
    let mut table = Table::new(&["step", "f", "drift"]);
    table.push(vec![Cell::Int(0), f0.into(), 0.0.into()]);
    let mut worst = 0.0_f64;
    for k in 1..=iterations {
        poly = pentagram_map(&poly).map_err(|e| degenerate(k, e))?;
        if let Some(p) = perturb.filter(|p| p.after_iteration == k) {
            let shift = poly.diameter() * p.size;
            let mut v = poly.into_vertices();
            v[0] = v[0] + Point2::new(shift, 0.5 * shift);
            poly = Polygon::new(v).map_err(|e| degenerate(k, e))?;
        }
        let f = invariant_f(&poly).map_err(|e| degenerate(k, e))?.f_signed;
        let drift = (f / f0 - 1.0).abs();
        worst = worst.max(drift);
        table.push(vec![k.into(), f.into(), drift.into()]);
    }
    let status = if worst < budget {
        ExitStatus::Success
    } else {
        ExitStatus::ClaimFailed
    };
    let mut stdout = String::new();
    let _ = writeln!(stdout, "f(V) = {}", fmt_real(f0));
    let _ = writeln!(
        stdout,
        "f_signed/f_coeff - 1 = {}",
        fmt_real(first.f_signed / first.f_coeff - 1.0)
    );
    stdout.push_str(&table.to_csv());
    let _ = writeln!(
        stdout,
        "max drift {} vs budget {} -> {}",
        fmt_real(worst),
        fmt_real(budget),
        if status == ExitStatus::Success {
            "ok"
        } else {
            "FAIL"
        }
    );
    let written = match output {
        Some(dir) => {
            let hash = hash_of(&[
                "invariant",
                &input_text,
                &iterations.to_string(),
                &budget.to_string(),
            ]);
            let files = vec![
                (
                    "invariant_factors.csv".to_owned(),
                    first.to_table().to_csv(),
                ),
                ("invariant_drift.csv".to_owned(), table.to_csv()),
            ];
            emit(dir, &files, "invariant", &hash, started, "manifest.json")?
        }
        None => Vec::new(),
    };
    Ok(Report {
        status,
        stdout,
        written,
    })
}

/// `converge`: writes the iteration trace and checks exponential decay.
pub fn run_converge(
    source: &PolygonSource,
    steps: usize,
    tolerance_overrides: &[String],
    output: &Path,
) -> Result<Report, RunError> {
    let started = Instant::now();
    if steps < 2 {
        return Err(RunError::Input("converge needs --steps >= 2".into()));
    }
    let tol = Tolerances::resolve(None, tolerance_overrides)?;
    let (poly, input_text) = source.load()?;
    if !poly.is_convex() {
        return Err(RunError::Input("converge needs a convex polygon".into()));
    }
    let trace =
        iterate_and_measure(&poly, steps).map_err(|e| RunError::Degenerate(e.to_string()))?;
    if trace.completed_steps() < 5.min(steps) {
        let why = trace
            .stopped_by
            .as_ref()
            .map(ToString::to_string)
            .unwrap_or_default();
        return Err(RunError::Degenerate(format!(
            "degenerate after {} completed steps: {why}",
            trace.completed_steps()
        )));
    }
    let min_r2 = tol.get("min_decay_r_squared");
    let status = if trace.r_squared > min_r2 {
        ExitStatus::Success
    } else {
        ExitStatus::ClaimFailed
    };
    let hash = hash_of(&["converge", &input_text, &steps.to_string()]);
    let written = emit(
        output,
        &[("trace.csv".to_owned(), trace.to_table().to_csv())],
        "converge",
        &hash,
        started,
        "manifest.json",
    )?;
    let mut stdout = String::new();
    let _ = writeln!(stdout, "completed steps {}", trace.completed_steps());
    let _ = writeln!(
        stdout,
        "log-diameter slope {}",
        fmt_real(trace.log_diameter_slope)
    );
    let _ = writeln!(stdout, "r_squared {}", fmt_real(trace.r_squared));
    let _ = writeln!(
        stdout,
        "max invariant drift {}",
        fmt_real(trace.max_drift())
    );
    Ok(Report {
        status,
        stdout,
        written,
    })
}

/// `flow`: residual sweep and exponent fit for one claim.
pub fn run_flow(
    config_path: &Path,
    claim: Claim,
    tolerance_overrides: &[String],
    output: Option<&Path>,
) -> Result<Report, RunError> {
    let started = Instant::now();
    let loaded = ExperimentConfig::load(config_path)?;
    let cfg = &loaded.config;
    let tol = Tolerances::resolve(Some(&cfg.tolerances), tolerance_overrides)?;
    let ns = cfg
        .n_values
        .clone()
        .unwrap_or_else(|| DEFAULT_SWEEP.to_vec());
    let (band, min_r2) = (tol.get("slope_band"), tol.get("min_r_squared"));

    let mut residuals = Table::default();
    let mut fits = Table::default();
    let mut pass = true;
    let mut stdout = String::new();
    for &x in &cfg.eval_points {
        let sweep = sweep_claim(&loaded.curve, claim, &ns, x)?;
        pass &= sweep.passes(band, min_r2);
        let mut rt = sweep.to_table();
        let mut ft = sweep.fit_table();
        ft.header.insert(0, "x".into());
        for row in &mut ft.rows {
            row.insert(0, Cell::Real(x));
        }
        for (kind, f) in &sweep.fits {
            let _ = writeln!(
                stdout,
                "{claim} {kind} x={x}: slope {:.4} (claimed {:.1} +- {band}), r^2 {:.6}",
                f.slope,
                claim.expected_slope(),
                f.r_squared
            );
        }
        if residuals.header.is_empty() {
            residuals.header = std::mem::take(&mut rt.header);
            fits.header = std::mem::take(&mut ft.header);
        }
        residuals.rows.append(&mut rt.rows);
        fits.rows.append(&mut ft.rows);
    }
    let status = if pass {
        ExitStatus::Success
    } else {
        ExitStatus::ClaimFailed
    };
    let _ = writeln!(stdout, "{claim}: {}", if pass { "PASS" } else { "FAIL" });
    let dir = output_dir(output, cfg.output_dir.as_deref());
    let files = vec![
        (format!("{claim}_residuals.csv"), residuals.to_csv()),
        (format!("{claim}_fit.csv"), fits.to_csv()),
    ];
    let hash = hash_of(&["flow", &loaded.hash, claim.name(), &format!("{tol:?}")]);
    let written = emit(
        &dir,
        &files,
        &format!("flow {claim}"),
        &hash,
        started,
        "manifest.json",
    )?;
    Ok(Report {
        status,
        stdout,
        written,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Figure {
    Fig3,
    Fig4,
}

impl Figure {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "fig3" => Some(Figure::Fig3),
            "fig4" => Some(Figure::Fig4),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Figure::Fig3 => "fig3",
            Figure::Fig4 => "fig4",
        }
    }

    pub fn rhs(self) -> FlowRhs {
        match self {
            Figure::Fig3 => FlowRhs::Corrected,
            Figure::Fig4 => FlowRhs::Schwartz,
        }
    }
}

/// Default `n` values for figure data.
pub const FIGURE_NS: [usize; 3] = [20, 30, 40];

/// Judges a gap sequence: fig3 needs strictly decreasing gaps, fig4 needs every
/// gap to stay above `fraction` of the first.
pub fn figure_gaps_pass(which: Figure, gaps: &[f64], fraction: f64) -> bool {
    match which {
        Figure::Fig3 => gaps.windows(2).all(|w| w[1] < w[0]),
        Figure::Fig4 => gaps.iter().skip(1).all(|g| *g > fraction * gaps[0]),
    }
}

/// `figure`: one CSV per `n` and a gap summary.
pub fn run_figure(
    config_path: &Path,
    which: Figure,
    tolerance_overrides: &[String],
    output: Option<&Path>,
) -> Result<Report, RunError> {
    let started = Instant::now();
    let loaded = ExperimentConfig::load(config_path)?;
    let cfg = &loaded.config;
    let tol = Tolerances::resolve(Some(&cfg.tolerances), tolerance_overrides)?;
    let ns = cfg.n_values.clone().unwrap_or_else(|| FIGURE_NS.to_vec());

    let mut files = Vec::new();
    let mut gaps = Vec::new();
    let mut summary = Table::new(&["n", "max_gap"]);
    for &n in &ns {
        let mut rows = figure_data(&loaded.curve, n, which.rhs())
            .map_err(|e| RunError::Degenerate(format!("n = {n}: {e}")))?;
        if let IndexSelection::List(keep) = &cfg.indices {
            rows = keep.iter().filter_map(|i| rows.get(*i).copied()).collect();
        }
        let gap = max_gap(&rows);
        gaps.push(gap);
        summary.push(vec![n.into(), gap.into()]);
        files.push((
            format!("{}_n{n}.csv", which.name()),
            figure_table(&rows).to_csv(),
        ));
    }
    files.push((format!("{}_summary.csv", which.name()), summary.to_csv()));
    let pass = figure_gaps_pass(which, &gaps, tol.get("fig4_gap_fraction"));
    let status = if pass {
        ExitStatus::Success
    } else {
        ExitStatus::ClaimFailed
    };
    let dir = output_dir(output, cfg.output_dir.as_deref());
    let hash = hash_of(&["figure", &loaded.hash, which.name(), &format!("{tol:?}")]);
    let written = emit(
        &dir,
        &files,
        &format!("figure {}", which.name()),
        &hash,
        started,
        "manifest.json",
    )?;
    let mut stdout = summary.to_csv();
    let _ = writeln!(
        stdout,
        "{}: {}",
        which.name(),
        if pass { "PASS" } else { "FAIL" }
    );
    Ok(Report {
        status,
        stdout,
        written,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tolerance_overrides() {
        let t = Tolerances::resolve(None, &["slope_band=0.5".into()]).unwrap();
        assert_eq!(t.get("slope_band"), 0.5);
        assert_eq!(t.get("min_r_squared"), tolerances::MIN_R_SQUARED);
        assert!(Tolerances::resolve(None, &["nope=1".into()]).is_err());
        assert!(Tolerances::resolve(None, &["slope_band".into()]).is_err());
        assert!(Tolerances::resolve(None, &["slope_band=abc".into()]).is_err());
        let mut cfg = BTreeMap::new();
        cfg.insert("slope_band".to_owned(), 0.2);
        let t = Tolerances::resolve(Some(&cfg), &[]).unwrap();
        assert_eq!(t.get("slope_band"), 0.2);
    }

    #[test]
    fn config_parses_inline_and_path_curves() {
        let inline: ExperimentConfig = serde_json::from_str(
            r#"{"curve": {"type": "theta_fourier", "terms": []}, "n_values": [40, 80, 160], "indices": "all", "seed": 3}"#,
        )
        .unwrap();
        assert!(matches!(inline.curve, CurveRef::Inline(_)));
        assert_eq!(inline.indices, IndexSelection::default());
        assert_eq!(inline.eval_points, vec![0.25]);
        let by_path: ExperimentConfig =
            serde_json::from_str(r#"{"curve": "figure3.json", "indices": [0, 5]}"#).unwrap();
        assert_eq!(by_path.curve, CurveRef::Path("figure3.json".into()));
        assert_eq!(by_path.indices, IndexSelection::List(vec![0, 5]));
    }

    #[test]
    fn figure_gap_rules() {
        assert!(figure_gaps_pass(Figure::Fig3, &[3.0, 2.0, 1.0], 0.25));
        assert!(!figure_gaps_pass(Figure::Fig3, &[3.0, 3.0, 1.0], 0.25));
        assert!(figure_gaps_pass(Figure::Fig4, &[4.0, 3.9, 3.8], 0.25));
        assert!(!figure_gaps_pass(Figure::Fig4, &[4.0, 2.0, 0.5], 0.25));
    }

    #[test]
    fn explicit_output_dir_wins() {
        let p = output_dir(Some(Path::new("a")), Some(Path::new("b")));
        assert_eq!(p, PathBuf::from("a"));
        let p = output_dir(None, Some(Path::new("b")));
        assert_eq!(p, PathBuf::from("b"));
    }
}
