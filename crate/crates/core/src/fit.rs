//! Least-squares lines, used to turn `O(n^-p)` claims into measured exponents.

use serde::{Deserialize, Serialize};

use crate::error::FitError;

/// A fitted line `y = slope x + intercept` with its coefficient of determination.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ConvergenceFit {
    pub slope: f64,
    pub intercept: f64,
    pub r_squared: f64,
}

impl ConvergenceFit {
    /// Slope within `band` of `expected` and `r_squared > min_r_squared`.
    pub fn matches(&self, expected: f64, band: f64, min_r_squared: f64) -> bool {
        (self.slope - expected).abs() <= band && self.r_squared > min_r_squared
    }
}

/// Ordinary least squares on paired samples. Requires at least two distinct `xs`.
///
/// `r_squared` is `1 - SS_res / SS_tot`; when the `ys` are all equal the fit
/// is exact and `r_squared` is reported as 1.
pub fn linear_fit(xs: &[f64], ys: &[f64]) -> ConvergenceFit {
    assert_eq!(xs.len(), ys.len());
    let m = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / m;
    let my = ys.iter().sum::<f64>() / m;
    let sxx: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let ss_tot: f64 = ys.iter().map(|y| (y - my).powi(2)).sum();
    let ss_res: f64 = xs
        .iter()
        .zip(ys)
        .map(|(x, y)| (y - slope * x - intercept).powi(2))
        .sum();
    let r_squared = if ss_tot == 0.0 {
        1.0
    } else {
        (1.0 - ss_res / ss_tot).clamp(0.0, 1.0)
    };
    ConvergenceFit {
        slope,
        intercept,
        r_squared,
    }
}

/// Fits `ln residual = slope ln n + intercept`.
pub fn fit_convergence(pairs: &[(usize, f64)]) -> Result<ConvergenceFit, FitError> {
    let mut ns: Vec<usize> = pairs.iter().map(|(n, _)| *n).collect();
    ns.sort_unstable();
    ns.dedup();
    if pairs.len() < 3 || ns.len() != pairs.len() {
        return Err(FitError::InsufficientData(ns.len()));
    }
    if let Some(&(n, residual)) = pairs.iter().find(|(_, r)| !(*r > 0.0 && r.is_finite())) {
        return Err(FitError::NonPositiveResidual { n, residual });
    }
    let xs: Vec<f64> = pairs.iter().map(|(n, _)| (*n as f64).ln()).collect();
    let ys: Vec<f64> = pairs.iter().map(|(_, r)| r.ln()).collect();
    Ok(linear_fit(&xs, &ys))
}
