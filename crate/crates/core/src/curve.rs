//! Period-1 plane curves with analytic derivatives through order three.

use std::f64::consts::TAU;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::geometry::{Point2, Vector2};

/// A smooth curve with `eval(x + 1) = eval(x)`.
pub trait PeriodicCurve: Send + Sync {
    fn eval(&self, x: f64) -> Point2;
    fn d1(&self, x: f64) -> Vector2;
    fn d2(&self, x: f64) -> Vector2;
    fn d3(&self, x: f64) -> Vector2;

    /// Derivative of order 0..=3.
    fn derivative(&self, order: u8, x: f64) -> Vector2 {
        match order {
            0 => self.eval(x),
            1 => self.d1(x),
            2 => self.d2(x),
            3 => self.d3(x),
            _ => panic!("derivatives are available through order 3, asked for {order}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TermKind {
    Cos,
    Sin,
}

/// One harmonic `amp * kind(2 pi freq x + phase)` of the angle function.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ThetaTerm {
    pub amp: f64,
    pub freq: u32,
    pub phase: f64,
    pub kind: TermKind,
}

impl ThetaTerm {
    /// k-th derivative in `x`, k in 0..=3.
    fn derivative(&self, k: u8, x: f64) -> f64 {
        let w = TAU * self.freq as f64;
        let arg = w * x + self.phase;
        let (s, c) = arg.sin_cos();
        let scale = self.amp * w.powi(k as i32);
        match (self.kind, k) {
            (TermKind::Cos, 0) => self.amp * c,
            (TermKind::Cos, 1) => -scale * s,
            (TermKind::Cos, 2) => -scale * c,
            (TermKind::Cos, 3) => scale * s,
            (TermKind::Sin, 0) => self.amp * s,
            (TermKind::Sin, 1) => scale * c,
            (TermKind::Sin, 2) => -scale * s,
            (TermKind::Sin, 3) => -scale * c,
            _ => unreachable!(),
        }
    }
}

/// `gamma(x) = (cos theta(x), sin theta(x))` with
/// `theta(x) = 2 pi x + sum amp * kind(2 pi freq x + phase)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ThetaFourierCurve {
    pub terms: Vec<ThetaTerm>,
}

impl ThetaFourierCurve {
    pub fn new(terms: Vec<ThetaTerm>) -> Self {
        Self { terms }
    }

    /// The unit circle at constant speed.
    pub fn circle() -> Self {
        Self { terms: Vec::new() }
    }

    /// `theta(x) = 2 pi x + 0.1 cos(2 pi x) + 0.07 sin(4 pi x + pi/3) + 0.1 cos(6 pi x + pi/5)`.
    pub fn figure3() -> Self {
        use std::f64::consts::PI;
        Self::new(vec![
            ThetaTerm {
                amp: 0.1,
                freq: 1,
                phase: 0.0,
                kind: TermKind::Cos,
            },
            ThetaTerm {
                amp: 0.07,
                freq: 2,
                phase: PI / 3.0,
                kind: TermKind::Sin,
            },
            ThetaTerm {
                amp: 0.1,
                freq: 3,
                phase: PI / 5.0,
                kind: TermKind::Cos,
            },
        ])
    }

    /// A second test curve, unrelated to the `figure3` harmonics.
    pub fn alternate() -> Self {
        Self::new(vec![
            ThetaTerm {
                amp: 0.12,
                freq: 1,
                phase: 0.4,
                kind: TermKind::Sin,
            },
            ThetaTerm {
                amp: 0.05,
                freq: 2,
                phase: -1.1,
                kind: TermKind::Cos,
            },
            ThetaTerm {
                amp: 0.03,
                freq: 4,
                phase: 2.0,
                kind: TermKind::Sin,
            },
        ])
    }

    /// `theta` and its first three derivatives.
    pub fn theta_jet(&self, x: f64) -> [f64; 4] {
        let mut jet = [TAU * x, TAU, 0.0, 0.0];
        for t in &self.terms {
            for (k, slot) in jet.iter_mut().enumerate() {
                *slot += t.derivative(k as u8, x);
            }
        }
        jet
    }

    fn frame(&self, x: f64) -> ([f64; 4], Vector2, Vector2) {
        let jet = self.theta_jet(x);
        let (s, c) = jet[0].sin_cos();
        (jet, Point2::new(c, s), Point2::new(-s, c))
    }
}

impl PeriodicCurve for ThetaFourierCurve {
    fn eval(&self, x: f64) -> Point2 {
        self.frame(x).1
    }

    fn d1(&self, x: f64) -> Vector2 {
        let ([_, t1, _, _], _, e) = self.frame(x);
        e * t1
    }

    fn d2(&self, x: f64) -> Vector2 {
        let ([_, t1, t2, _], r, e) = self.frame(x);
        e * t2 - r * (t1 * t1)
    }

    fn d3(&self, x: f64) -> Vector2 {
        let ([_, t1, t2, t3], r, e) = self.frame(x);
        e * (t3 - t1 * t1 * t1) - r * (3.0 * t1 * t2)
    }
}

/// `M gamma + offset` for an invertible 2x2 `M` (row-major).
#[derive(Debug, Clone, PartialEq)]
pub struct LinearImage<C> {
    pub curve: C,
    pub matrix: [[f64; 2]; 2],
    pub offset: Point2,
}

impl<C> LinearImage<C> {
    pub fn new(curve: C, matrix: [[f64; 2]; 2], offset: Point2) -> Self {
        Self {
            curve,
            matrix,
            offset,
        }
    }

    fn apply(&self, v: Vector2) -> Vector2 {
        let m = &self.matrix;
        Point2::new(m[0][0] * v.x + m[0][1] * v.y, m[1][0] * v.x + m[1][1] * v.y)
    }
}

impl<C: PeriodicCurve> PeriodicCurve for LinearImage<C> {
    fn eval(&self, x: f64) -> Point2 {
        self.apply(self.curve.eval(x)) + self.offset
    }
    fn d1(&self, x: f64) -> Vector2 {
        self.apply(self.curve.d1(x))
    }
    fn d2(&self, x: f64) -> Vector2 {
        self.apply(self.curve.d2(x))
    }
    fn d3(&self, x: f64) -> Vector2 {
        self.apply(self.curve.d3(x))
    }
}

impl<C: PeriodicCurve + ?Sized> PeriodicCurve for Box<C> {
    fn eval(&self, x: f64) -> Point2 {
        (**self).eval(x)
    }
    fn d1(&self, x: f64) -> Vector2 {
        (**self).d1(x)
    }
    fn d2(&self, x: f64) -> Vector2 {
        (**self).d2(x)
    }
    fn d3(&self, x: f64) -> Vector2 {
        (**self).d3(x)
    }
}

#[derive(Debug, Error)]
pub enum CurveConfigError {
    #[error("cannot read curve config {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("invalid curve config: {0}")]
    Json(#[from] serde_json::Error),
    #[error("term {index}: frequency must be a positive integer")]
    ZeroFrequency { index: usize },
    #[error("term {index}: non-finite amplitude or phase")]
    NonFinite { index: usize },
}

/// On-disk curve description.
///
/// ```json
/// {"type": "theta_fourier", "terms": [{"amp": 0.1, "freq": 1, "phase": 0.0, "kind": "cos"}]}
/// ```
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case", deny_unknown_fields)]
pub enum CurveConfig {
    ThetaFourier { terms: Vec<ThetaTerm> },
}

impl CurveConfig {
    pub fn from_json(text: &str) -> Result<Self, CurveConfigError> {
        let cfg: CurveConfig = serde_json::from_str(text)?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn from_path(path: &Path) -> Result<Self, CurveConfigError> {
        let text = std::fs::read_to_string(path).map_err(|source| CurveConfigError::Io {
            path: path.display().to_string(),
            source,
        })?;
        Self::from_json(&text)
    }

    pub fn validate(&self) -> Result<(), CurveConfigError> {
        let CurveConfig::ThetaFourier { terms } = self;
        for (index, t) in terms.iter().enumerate() {
            if t.freq == 0 {
                return Err(CurveConfigError::ZeroFrequency { index });
            }
            if !t.amp.is_finite() || !t.phase.is_finite() {
                return Err(CurveConfigError::NonFinite { index });
            }
        }
        Ok(())
    }

    pub fn build(&self) -> ThetaFourierCurve {
        let CurveConfig::ThetaFourier { terms } = self;
        ThetaFourierCurve::new(terms.clone())
    }
}

impl From<&ThetaFourierCurve> for CurveConfig {
    fn from(c: &ThetaFourierCurve) -> Self {
        CurveConfig::ThetaFourier {
            terms: c.terms.clone(),
        }
    }
}
