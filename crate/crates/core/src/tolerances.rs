//! Default numerical tolerances, in one table.
//!
//! Names in [`DEFAULTS`] are the keys accepted by `--tolerance KEY=VAL` and by
//! the `tolerances` map of an experiment config.

/// Relative determinant threshold for degeneracy: `|[u, v]| <= tol * |u| |v|`.
pub const DET_REL_TOL: f64 = 1e-14;

/// Transverse deviation allowed for a point declared to lie on a line,
/// relative to the length of the line's defining segment.
pub const COLLINEAR_REL_TOL: f64 = 1e-9;

/// `|W|` denominator threshold: `|[g', g'']| < tol * |g'|^3`.
pub const CURVATURE_REL_TOL: f64 = 1e-14;

/// Sum rules `A + B = 1`, `C + D = 1`.
pub const SUM_RULE_ABS: f64 = 1e-12;

/// Agreement of the three constructions of an image vertex, relative to diameter.
pub const VERTEX_AGREEMENT_REL: f64 = 1e-10;

/// Single-step invariance of `f` and agreement of its two evaluations.
pub const INVARIANT_REL: f64 = 1e-9;

/// Per-step growth of the invariant drift budget under iteration.
pub const DRIFT_PER_STEP: f64 = 1e-9;

/// Default budget used by the `invariant` subcommand.
pub const INVARIANT_DRIFT_CLI: f64 = 1e-8;

/// Exact algebraic identities (ratio transport, mapped B-weight).
pub const IDENTITY_REL: f64 = 1e-10;

/// Half-width of the accepted band around a claimed convergence exponent.
pub const SLOPE_BAND: f64 = 0.3;

/// Minimum coefficient of determination for a convergence fit.
pub const MIN_R_SQUARED: f64 = 0.98;

/// Minimum coefficient of determination for the diameter-decay fit.
pub const MIN_DECAY_R_SQUARED: f64 = 0.99;

/// `fig4`: every later gap must stay above this fraction of the first (n = 20) gap.
pub const FIG4_GAP_FRACTION: f64 = 0.25;

/// Relative agreement of the measured Schwartz residual with its predicted limit.
pub const SCHWARTZ_LIMIT_REL: f64 = 0.05;

/// Every named default, in display order.
pub const DEFAULTS: &[(&str, f64)] = &[
    ("det_rel", DET_REL_TOL),
    ("collinear_rel", COLLINEAR_REL_TOL),
    ("curvature_rel", CURVATURE_REL_TOL),
    ("sum_rule_abs", SUM_RULE_ABS),
    ("vertex_agreement_rel", VERTEX_AGREEMENT_REL),
    ("invariant_rel", INVARIANT_REL),
    ("drift_per_step", DRIFT_PER_STEP),
    ("invariant_drift", INVARIANT_DRIFT_CLI),
    ("identity_rel", IDENTITY_REL),
    ("slope_band", SLOPE_BAND),
    ("min_r_squared", MIN_R_SQUARED),
    ("min_decay_r_squared", MIN_DECAY_R_SQUARED),
    ("fig4_gap_fraction", FIG4_GAP_FRACTION),
    ("schwartz_limit_rel", SCHWARTZ_LIMIT_REL),
];

/// Looks up a default by key.
pub fn default_for(key: &str) -> Option<f64> {
    DEFAULTS.iter().find(|(k, _)| *k == key).map(|(_, v)| *v)
}
