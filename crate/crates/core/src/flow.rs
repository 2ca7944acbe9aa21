//! Polygons sampled from periodic curves and the asymptotic claims about
//! their weights, their images under the map, and the limiting flow.
//!
//! Every claim is measured the same way: sample `v_j = gamma(j/n)`, evaluate
//! the left-hand side at index `i`, compare with the predicted right-hand side
//! built from analytic derivatives at `x = i/n`, and fit the residual against
//! `n` on a log-log scale.

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::curve::PeriodicCurve;
use crate::error::{FitError, GeometryError};
use crate::fit::{fit_convergence, ConvergenceFit};
use crate::geometry::{
    coefficients, det2, iterate_map, line_intersection, pentagram_map, Point2, Polygon, Vector2,
};
use crate::io::{Cell, Table};
use crate::tolerances::CURVATURE_REL_TOL;

/// Default `n` values for exponent fits.
pub const DEFAULT_SWEEP: [usize; 4] = [40, 80, 160, 320];

/// Primary and secondary evaluation points along the curve.
pub const EVAL_POINTS: [f64; 2] = [0.25, 0.7];

/// `v_j = gamma(j / n)` for `j = 0..n`.
pub fn sample_polygon(curve: &dyn PeriodicCurve, n: usize) -> Result<Polygon, GeometryError> {
    if n < Polygon::MIN_VERTICES {
        return Err(GeometryError::TooFewVertices(n));
    }
    Polygon::new((0..n).map(|j| curve.eval(j as f64 / n as f64)).collect())
}

/// `W = [gamma', gamma'''] / [gamma', gamma'']`.
pub fn compute_w(curve: &dyn PeriodicCurve, x: f64) -> Result<f64, GeometryError> {
    let d1 = curve.d1(x);
    let denom = det2(d1, curve.d2(x));
    if denom.abs() < CURVATURE_REL_TOL * d1.norm().powi(3) {
        return Err(GeometryError::VanishingCurvature { x });
    }
    Ok(det2(d1, curve.d3(x)) / denom)
}

/// Local derivative data at one parameter value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Jet {
    pub x: f64,
    pub point: Point2,
    pub d1: Vector2,
    pub d2: Vector2,
    pub w: f64,
}

impl Jet {
    pub fn at(curve: &dyn PeriodicCurve, x: f64) -> Result<Self, GeometryError> {
        Ok(Self {
            x,
            point: curve.eval(x),
            d1: curve.d1(x),
            d2: curve.d2(x),
            w: compute_w(curve, x)?,
        })
    }

    /// `a gamma'' + b W gamma'`.
    pub fn combine(&self, a: f64, b: f64) -> Vector2 {
        self.d2 * a + self.d1 * (b * self.w)
    }

    /// Coordinates `(a, b)` of `v = a gamma'' + b W gamma'`.
    ///
    /// Used to read off which multiples of `gamma''` and `W gamma'` a measured
    /// limit actually contains.
    pub fn decompose(&self, v: Vector2) -> (f64, f64) {
        let wd1 = self.d1 * self.w;
        let det = det2(self.d2, wd1);
        (det2(v, wd1) / det, det2(self.d2, v) / det)
    }
}

/// Right-hand side of the limiting-flow equation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FlowRhs {
    /// `(3/4) gamma'' - (1/8) W gamma'`.
    Corrected,
    /// `gamma'' - (2/3) W gamma'`.
    Schwartz,
}

impl FlowRhs {
    /// Coefficients of `gamma''` and `W gamma'`.
    pub fn coefficients(self) -> (f64, f64) {
        match self {
            FlowRhs::Corrected => (0.75, -0.125),
            FlowRhs::Schwartz => (1.0, -2.0 / 3.0),
        }
    }

    pub fn eval(self, jet: &Jet) -> Vector2 {
        let (a, b) = self.coefficients();
        jet.combine(a, b)
    }
}

/// `(Schwartz - Corrected)(gamma)` should equal `(1/4) gamma'' - (13/24) W gamma'`.
pub fn rhs_gap(jet: &Jet) -> Vector2 {
    jet.combine(0.25, -13.0 / 24.0)
}

/// Which claim a measurement belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RecordKind {
    CoeffB,
    CoeffC,
    TStability,
    Evolution,
    PPoint,
    Corollary35,
}

impl RecordKind {
    pub fn name(self) -> &'static str {
        match self {
            RecordKind::CoeffB => "coeffB",
            RecordKind::CoeffC => "coeffC",
            RecordKind::TStability => "tStability",
            RecordKind::Evolution => "evolution",
            RecordKind::PPoint => "pPoint",
            RecordKind::Corollary35 => "corollary35",
        }
    }
}

impl fmt::Display for RecordKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Scalar or planar measured quantity.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum Measure {
    Scalar(f64),
    Vector(Point2),
}

impl Measure {
    fn components(self) -> (f64, f64) {
        match self {
            Measure::Scalar(s) => (s, f64::NAN),
            Measure::Vector(v) => (v.x, v.y),
        }
    }

    fn distance(self, other: Measure) -> f64 {
        match (self, other) {
            (Measure::Scalar(a), Measure::Scalar(b)) => (a - b).abs(),
            (Measure::Vector(a), Measure::Vector(b)) => a.distance(b),
            _ => panic!("measure arity mismatch"),
        }
    }
}

/// One residual measurement of one claim.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AsymptoticsRecord {
    pub kind: RecordKind,
    pub n: usize,
    pub i: isize,
    pub lhs: Measure,
    pub predicted: Measure,
    pub residual: f64,
}

impl AsymptoticsRecord {
    fn new(kind: RecordKind, n: usize, i: isize, lhs: Measure, predicted: Measure) -> Self {
        Self {
            kind,
            n,
            i,
            lhs,
            predicted,
            residual: lhs.distance(predicted),
        }
    }

    pub fn x(&self) -> f64 {
        self.i as f64 / self.n as f64
    }
}

fn param(n: usize, i: isize) -> f64 {
    i.rem_euclid(n as isize) as f64 / n as f64
}

/// `B_{i+k}` against `1/4 - W/(8n)` and `C_{i+k}` against `1/4 - W/(16n)`,
/// with `W` taken at `i/n`.
pub fn coefficient_asymptotics(
    curve: &dyn PeriodicCurve,
    n: usize,
    i: isize,
    k: isize,
) -> Result<(AsymptoticsRecord, AsymptoticsRecord), GeometryError> {
    let poly = sample_polygon(curve, n)?;
    let q = coefficients(&poly, i + k)?;
    let w = compute_w(curve, param(n, i))?;
    let nf = n as f64;
    let b = AsymptoticsRecord::new(
        RecordKind::CoeffB,
        n,
        i,
        Measure::Scalar(q.b),
        Measure::Scalar(0.25 - w / (8.0 * nf)),
    );
    let c = AsymptoticsRecord::new(
        RecordKind::CoeffC,
        n,
        i,
        Measure::Scalar(q.c),
        Measure::Scalar(0.25 - w / (16.0 * nf)),
    );
    Ok((b, c))
}

/// `T(B_i) - B_i` on the sampled polygon.
pub fn t_stability(
    curve: &dyn PeriodicCurve,
    n: usize,
    i: isize,
) -> Result<AsymptoticsRecord, GeometryError> {
    let poly = sample_polygon(curve, n)?;
    let (before, after) = weights_before_after(&poly, i)?;
    Ok(AsymptoticsRecord::new(
        RecordKind::TStability,
        n,
        i,
        Measure::Scalar(after.b),
        Measure::Scalar(before.b),
    ))
}

/// Quads of `V` and of `T(V)` at index `i`; differences give the A, C, D analogues of [`t_stability`].
pub fn weights_before_after(
    poly: &Polygon,
    i: isize,
) -> Result<
    (
        crate::geometry::CoefficientQuad,
        crate::geometry::CoefficientQuad,
    ),
    GeometryError,
> {
    let image = pentagram_map(poly)?;
    Ok((coefficients(poly, i)?, coefficients(&image, i)?))
}

/// `n^2 (T^2(V)_{i-1} - v_i)`.
pub fn scaled_double_image(poly: &Polygon, i: isize) -> Result<Vector2, GeometryError> {
    let n2 = (poly.len() as f64).powi(2);
    let twice = iterate_map(poly, 2)?;
    Ok((twice.at(i - 1) - poly.at(i)) * n2)
}

/// `n^2 (T^2(V)_{i-1} - v_i)` against the chosen flow right-hand side.
pub fn evolution_residual(
    curve: &dyn PeriodicCurve,
    n: usize,
    i: isize,
    rhs: FlowRhs,
) -> Result<AsymptoticsRecord, GeometryError> {
    let poly = sample_polygon(curve, n)?;
    let jet = Jet::at(curve, param(n, i))?;
    Ok(AsymptoticsRecord::new(
        RecordKind::Evolution,
        n,
        i,
        Measure::Vector(scaled_double_image(&poly, i)?),
        Measure::Vector(rhs.eval(&jet)),
    ))
}

/// Crossing of `(v_{i-2} v_{i+1})` and `(v_{i-1} v_{i+2})`.
pub fn schwartz_p_point(poly: &Polygon, i: isize) -> Result<Point2, GeometryError> {
    line_intersection(
        poly.at(i - 2),
        poly.at(i + 1),
        poly.at(i - 1),
        poly.at(i + 2),
    )
}

/// `n^2 (p_i - gamma(i/n))` against `gamma'' - (2/3) W gamma'`.
pub fn p_point_residual(
    curve: &dyn PeriodicCurve,
    n: usize,
    i: isize,
) -> Result<AsymptoticsRecord, GeometryError> {
    let poly = sample_polygon(curve, n)?;
    let jet = Jet::at(curve, param(n, i))?;
    let p = schwartz_p_point(&poly, i)?;
    Ok(AsymptoticsRecord::new(
        RecordKind::PPoint,
        n,
        i,
        Measure::Vector((p - poly.at(i)) * (n as f64).powi(2)),
        Measure::Vector(FlowRhs::Schwartz.eval(&jet)),
    ))
}

/// `T^2(V)_{i-1}` against `p_i - gamma''/(4n^2) + 13 W gamma' / (24 n^2)`.
pub fn corollary35_residual(
    curve: &dyn PeriodicCurve,
    n: usize,
    i: isize,
) -> Result<AsymptoticsRecord, GeometryError> {
    let poly = sample_polygon(curve, n)?;
    let jet = Jet::at(curve, param(n, i))?;
    let p = schwartz_p_point(&poly, i)?;
    let n2 = (n as f64).powi(2);
    let twice = iterate_map(&poly, 2)?;
    let predicted = p + jet.combine(-0.25, 13.0 / 24.0) * (1.0 / n2);
    Ok(AsymptoticsRecord::new(
        RecordKind::Corollary35,
        n,
        i,
        Measure::Vector(twice.at(i - 1)),
        Measure::Vector(predicted),
    ))
}

/// Index nearest to parameter `x` on an `n`-gon.
pub fn nearest_index(n: usize, x: f64) -> isize {
    ((x * n as f64).round() as isize).rem_euclid(n as isize)
}

/// A claim checked by a convergence sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Claim {
    Lemma32,
    Lemma34,
    Theorem31,
    Eq4,
    Corollary35,
}

impl Claim {
    pub const ALL: [Claim; 5] = [
        Claim::Lemma32,
        Claim::Lemma34,
        Claim::Theorem31,
        Claim::Eq4,
        Claim::Corollary35,
    ];

    /// Claimed exponent of the residual in `n`.
    pub fn expected_slope(self) -> f64 {
        match self {
            Claim::Lemma32 | Claim::Lemma34 => -2.0,
            Claim::Theorem31 | Claim::Eq4 => -1.0,
            Claim::Corollary35 => -3.0,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Claim::Lemma32 => "lemma32",
            Claim::Lemma34 => "lemma34",
            Claim::Theorem31 => "theorem31",
            Claim::Eq4 => "eq4",
            Claim::Corollary35 => "corollary35",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|c| c.name() == s)
    }

    /// Measurements contributed at one `(n, i)`.
    pub fn measure(
        self,
        curve: &dyn PeriodicCurve,
        n: usize,
        i: isize,
    ) -> Result<Vec<AsymptoticsRecord>, GeometryError> {
        Ok(match self {
            Claim::Lemma32 => {
                let (b, c) = coefficient_asymptotics(curve, n, i, 0)?;
                vec![b, c]
            }
            Claim::Lemma34 => vec![t_stability(curve, n, i)?],
            Claim::Theorem31 => vec![evolution_residual(curve, n, i, FlowRhs::Corrected)?],
            Claim::Eq4 => vec![p_point_residual(curve, n, i)?],
            Claim::Corollary35 => vec![corollary35_residual(curve, n, i)?],
        })
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum SweepError {
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error("fit for {kind}: {source}")]
    Fit {
        kind: RecordKind,
        #[source]
        source: FitError,
    },
}

/// Records and per-kind fits of a sweep, sorted by kind, then `n`, then `i`.
#[derive(Debug, Clone, PartialEq)]
pub struct ClaimSweep {
    pub claim: Claim,
    pub x: f64,
    pub records: Vec<AsymptoticsRecord>,
    pub fits: Vec<(RecordKind, ConvergenceFit)>,
}

impl ClaimSweep {
    /// Every fit within `band` of the claimed slope with `r^2 > min_r_squared`.
    pub fn passes(&self, band: f64, min_r_squared: f64) -> bool {
        let expected = self.claim.expected_slope();
        !self.fits.is_empty()
            && self
                .fits
                .iter()
                .all(|(_, f)| f.matches(expected, band, min_r_squared))
    }

    pub fn fit_for(&self, kind: RecordKind) -> Option<ConvergenceFit> {
        self.fits.iter().find(|(k, _)| *k == kind).map(|(_, f)| *f)
    }

    /// Columns `kind,n,i,x,lhs_0,lhs_1,predicted_0,predicted_1,residual`;
    /// scalar measures leave the `_1` columns as `nan`.
    pub fn to_table(&self) -> Table {
        records_table(&self.records)
    }

    /// Columns `kind,expected_slope,slope,intercept,r_squared`.
    pub fn fit_table(&self) -> Table {
        let mut t = Table::new(&["kind", "expected_slope", "slope", "intercept", "r_squared"]);
        for (kind, f) in &self.fits {
            t.push(vec![
                Cell::from(kind.name()),
                self.claim.expected_slope().into(),
                f.slope.into(),
                f.intercept.into(),
                f.r_squared.into(),
            ]);
        }
        t
    }
}

pub fn records_table(records: &[AsymptoticsRecord]) -> Table {
    let mut t = Table::new(&[
        "kind",
        "n",
        "i",
        "x",
        "lhs_0",
        "lhs_1",
        "predicted_0",
        "predicted_1",
        "residual",
    ]);
    for r in records {
        let (l0, l1) = r.lhs.components();
        let (p0, p1) = r.predicted.components();
        t.push(vec![
            Cell::from(r.kind.name()),
            r.n.into(),
            Cell::Int(r.i as i64),
            r.x().into(),
            l0.into(),
            l1.into(),
            p0.into(),
            p1.into(),
            r.residual.into(),
        ]);
    }
    t
}

/// Measures `claim` at the index nearest `x` for each `n`, in parallel, and
/// fits every record kind separately.
pub fn sweep_claim(
    curve: &dyn PeriodicCurve,
    claim: Claim,
    ns: &[usize],
    x: f64,
) -> Result<ClaimSweep, SweepError> {
    let per_n: Vec<Result<Vec<AsymptoticsRecord>, GeometryError>> = ns
        .par_iter()
        .map(|&n| claim.measure(curve, n, nearest_index(n, x)))
        .collect();
    let mut records = Vec::new();
    for batch in per_n {
        records.extend(batch?);
    }
    records.sort_by_key(|r| (r.kind, r.n, r.i));

    let mut kinds: Vec<RecordKind> = records.iter().map(|r| r.kind).collect();
    kinds.dedup();
    let fits = kinds
        .into_iter()
        .map(|kind| {
            let pairs: Vec<(usize, f64)> = records
                .iter()
                .filter(|r| r.kind == kind)
                .map(|r| (r.n, r.residual))
                .collect();
            fit_convergence(&pairs)
                .map(|f| (kind, f))
                .map_err(|source| SweepError::Fit { kind, source })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(ClaimSweep {
        claim,
        x,
        records,
        fits,
    })
}

/// One row of figure data.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FigureRow {
    pub x: f64,
    /// `|n^2 T^2(V)_{i-1}|`.
    pub mapped: f64,
    /// `|n^2 gamma(i/n) + rhs(i/n)|`.
    pub predicted: f64,
}

impl FigureRow {
    pub fn gap(&self) -> f64 {
        (self.mapped - self.predicted).abs()
    }
}

/// The compared curves of the limiting-flow figures at every vertex.
pub fn figure_data(
    curve: &dyn PeriodicCurve,
    n: usize,
    rhs: FlowRhs,
) -> Result<Vec<FigureRow>, GeometryError> {
    let poly = sample_polygon(curve, n)?;
    let twice = iterate_map(&poly, 2)?;
    let n2 = (n as f64).powi(2);
    (0..n as isize)
        .map(|i| {
            let x = param(n, i);
            let jet = Jet::at(curve, x)?;
            Ok(FigureRow {
                x,
                mapped: (twice.at(i - 1) * n2).norm(),
                predicted: (jet.point * n2 + rhs.eval(&jet)).norm(),
            })
        })
        .collect()
}

pub fn max_gap(rows: &[FigureRow]) -> f64 {
    rows.iter().map(FigureRow::gap).fold(0.0, f64::max)
}

/// Columns `x,mapped_norm,predicted_norm`.
pub fn figure_table(rows: &[FigureRow]) -> Table {
    let mut t = Table::new(&["x", "mapped_norm", "predicted_norm"]);
    for r in rows {
        t.push(vec![r.x.into(), r.mapped.into(), r.predicted.into()]);
    }
    t
}
