//! The cross-ratio product `f(V)`, its invariance under the pentagram map,
//! the ratio-transport identities and the diameter decay under iteration.

use serde::{Deserialize, Serialize};

use crate::error::GeometryError;
use crate::fit::linear_fit;
use crate::geometry::{all_coefficients, coefficients, pentagram_map, signed_length, Polygon};
use crate::io::{Cell, Table};
use crate::tolerances::DET_REL_TOL;

/// `f(V)` evaluated from signed lengths and from the weight quads.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InvariantReport {
    pub f_signed: f64,
    pub f_coeff: f64,
    /// Per-vertex factor `X_i`, from signed lengths.
    pub factors: Vec<f64>,
    /// The same factor as `B_{i-1} C_i / (A_{i-1} D_i)`.
    pub coeff_factors: Vec<f64>,
}

impl InvariantReport {
    /// `|f_signed / f_coeff - 1|`.
    pub fn disagreement(&self) -> f64 {
        (self.f_signed / self.f_coeff - 1.0).abs()
    }

    /// Columns `i,factor_signed,factor_coeff`.
    pub fn to_table(&self) -> Table {
        let mut t = Table::new(&["i", "factor_signed", "factor_coeff"]);
        for (i, (s, c)) in self.factors.iter().zip(&self.coeff_factors).enumerate() {
            t.push(vec![i.into(), (*s).into(), (*c).into()]);
        }
        t
    }
}

/// Factor `X_i` on the line `(v_{i-1} v_{i+1})`, through the points
/// `v_{i-1}, u_{i-1}, u_i, v_{i+1}`.
fn signed_factors(poly: &Polygon, image: &Polygon) -> Result<Vec<f64>, GeometryError> {
    (0..poly.len() as isize)
        .map(|i| {
            let (start, end) = (poly.at(i - 1), poly.at(i + 1));
            let (u_prev, u_here) = (image.at(i - 1), image.at(i));
            let len = |a, b| signed_length(start, end, a, b);
            Ok(len(start, u_prev)? * len(u_here, end)? / (len(start, u_here)? * len(u_prev, end)?))
        })
        .collect()
}

fn coefficient_factors(poly: &Polygon) -> Result<Vec<f64>, GeometryError> {
    let quads = all_coefficients(poly)?;
    let n = quads.len();
    Ok((0..n)
        .map(|i| {
            let prev = &quads[(i + n - 1) % n];
            let here = &quads[i];
            prev.b * here.c / (prev.a * here.d)
        })
        .collect())
}

fn report_with_image(poly: &Polygon, image: &Polygon) -> Result<InvariantReport, GeometryError> {
    let factors = signed_factors(poly, image)?;
    let coeff_factors = coefficient_factors(poly)?;
    Ok(InvariantReport {
        f_signed: factors.iter().product(),
        f_coeff: coeff_factors.iter().product(),
        factors,
        coeff_factors,
    })
}

/// Both evaluations of `f(V)`.
///
/// For large `n` the product itself can underflow (each factor is close to
/// 1/9); ratios of invariants are therefore taken factor by factor elsewhere.
pub fn invariant_f(poly: &Polygon) -> Result<InvariantReport, GeometryError> {
    let image = pentagram_map(poly)?;
    report_with_image(poly, &image)
}

/// `f(b) / f(a)` as a product of per-vertex ratios, free of under/overflow.
fn invariant_ratio(a: &InvariantReport, b: &InvariantReport) -> f64 {
    a.factors
        .iter()
        .zip(&b.factors)
        .map(|(x, y)| y / x)
        .product()
}

/// `|f(T(V)) / f(V) - 1|`.
pub fn check_invariance(poly: &Polygon) -> Result<f64, GeometryError> {
    let image = pentagram_map(poly)?;
    let second = pentagram_map(&image)?;
    let before = report_with_image(poly, &image)?;
    let after = report_with_image(&image, &second)?;
    Ok((invariant_ratio(&before, &after) - 1.0).abs())
}

/// Residuals of `T(C_i/A_i) = C_i/A_{i-1}` and `T(B_i/D_i) = B_{i+1}/D_{i+2}`.
pub fn ratio_transport_check(poly: &Polygon, i: isize) -> Result<(f64, f64), GeometryError> {
    let image = pentagram_map(poly)?;
    let mapped = coefficients(&image, i)?;
    let q = |k: isize| coefficients(poly, i + k);
    let (prev, here, next, next2) = (q(-1)?, q(0)?, q(1)?, q(2)?);
    let first = (mapped.c / mapped.a - here.c / prev.a).abs();
    let second = (mapped.b / mapped.d - next.b / next2.d).abs();
    Ok((first, second))
}

/// Residual of the exact expression for the mapped B-weight,
/// `T(B_i) = (D_i - B_{i-1}) B_{i+1} / (A_{i-1} D_{i+2} - B_{i+1} C_i)`.
pub fn mapped_coefficient_identity(poly: &Polygon, i: isize) -> Result<f64, GeometryError> {
    let image = pentagram_map(poly)?;
    let mapped = coefficients(&image, i)?;
    let q = |k: isize| coefficients(poly, i + k);
    let (prev, here, next, next2) = (q(-1)?, q(0)?, q(1)?, q(2)?);
    let left = prev.a * next2.d;
    let right = next.b * here.c;
    let denom = left - right;
    if denom.abs() <= DET_REL_TOL * (left.abs() + right.abs()) {
        return Err(GeometryError::DegeneratePosition {
            index: i.rem_euclid(poly.len() as isize) as usize,
        });
    }
    let predicted = (here.d - prev.b) * next.b / denom;
    Ok((mapped.b - predicted).abs())
}

/// One recorded iterate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TraceStep {
    pub step: usize,
    pub diameter: f64,
    /// `|f(V_k) / f(V_0) - 1|`.
    pub invariant_drift: f64,
}

/// Diameter and invariant drift along `V, T(V), T^2(V), ...`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IterationTrace {
    pub steps: Vec<TraceStep>,
    /// Least-squares slope of `ln diameter` against step.
    pub log_diameter_slope: f64,
    pub r_squared: f64,
    /// Set when a degenerate image cut the trace short.
    #[serde(skip)]
    pub stopped_by: Option<GeometryError>,
}

impl IterationTrace {
    /// Number of map applications recorded after the initial polygon.
    pub fn completed_steps(&self) -> usize {
        self.steps.len().saturating_sub(1)
    }

    pub fn max_drift(&self) -> f64 {
        self.steps
            .iter()
            .map(|s| s.invariant_drift)
            .fold(0.0, f64::max)
    }

    /// Per-step ratios `diameter(k+1) / diameter(k)`.
    pub fn diameter_ratios(&self) -> Vec<f64> {
        self.steps
            .windows(2)
            .map(|w| w[1].diameter / w[0].diameter)
            .collect()
    }

    /// Columns `step,diameter,log_diameter,invariant_drift`.
    pub fn to_table(&self) -> Table {
        let mut t = Table::new(&["step", "diameter", "log_diameter", "invariant_drift"]);
        for s in &self.steps {
            t.push(vec![
                Cell::from(s.step),
                s.diameter.into(),
                s.diameter.ln().into(),
                s.invariant_drift.into(),
            ]);
        }
        t
    }
}

/// Applies the map `steps` times, recording diameter and invariant drift.
///
/// The invariant at step `k` needs `T(V_k)`, so one extra image is computed
/// past the last recorded step. A degenerate image ends the trace early.
///
/// # Panics
/// If `steps < 2`.
pub fn iterate_and_measure(poly: &Polygon, steps: usize) -> Result<IterationTrace, GeometryError> {
    assert!(steps >= 2, "iterate_and_measure needs at least 2 steps");
    let mut current = poly.clone();
    let mut next = pentagram_map(&current)?;
    let mut previous_report = report_with_image(&current, &next)?;
    let mut cumulative = 1.0;
    let mut recorded = vec![TraceStep {
        step: 0,
        diameter: current.diameter(),
        invariant_drift: 0.0,
    }];
    let mut stopped_by = None;

    for step in 1..=steps {
        current = next;
        let outcome = pentagram_map(&current).and_then(|img| {
            let report = report_with_image(&current, &img)?;
            Ok((img, report))
        });
        match outcome {
            Ok((img, report)) => {
                cumulative *= invariant_ratio(&previous_report, &report);
                recorded.push(TraceStep {
                    step,
                    diameter: current.diameter(),
                    invariant_drift: (cumulative - 1.0).abs(),
                });
                previous_report = report;
                next = img;
            }
            Err(e) => {
                stopped_by = Some(e);
                break;
            }
        }
    }

    let xs: Vec<f64> = recorded.iter().map(|s| s.step as f64).collect();
    let ys: Vec<f64> = recorded.iter().map(|s| s.diameter.ln()).collect();
    let fit = if recorded.len() >= 2 {
        linear_fit(&xs, &ys)
    } else {
        crate::fit::ConvergenceFit {
            slope: f64::NAN,
            intercept: f64::NAN,
            r_squared: 0.0,
        }
    };
    Ok(IterationTrace {
        steps: recorded,
        log_diameter_slope: fit.slope,
        r_squared: fit.r_squared,
        stopped_by,
    })
}
