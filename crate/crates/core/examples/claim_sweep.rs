//! Fitted convergence exponents for every claim on a curve config
//! (default: the `figure3` curve).
//!
//! ```bash
//! cargo run --release --example claim_sweep -- crates/core/configs/alternate.json
//! ```

use pentaflow::curve::{CurveConfig, ThetaFourierCurve};
use pentaflow::flow::{sweep_claim, Claim, DEFAULT_SWEEP, EVAL_POINTS};
use pentaflow::tolerances::{MIN_R_SQUARED, SLOPE_BAND};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let curve = match std::env::args().nth(1) {
        Some(path) => CurveConfig::from_path(path.as_ref())?.build(),
        None => ThetaFourierCurve::figure3(),
    };
    println!(
        "{:<12} {:<12} {:>5} {:>9} {:>9} {:>10}  verdict",
        "claim", "measure", "x", "claimed", "slope", "r^2"
    );
    for claim in Claim::ALL {
        for x in EVAL_POINTS {
            let sweep = sweep_claim(&curve, claim, &DEFAULT_SWEEP, x)?;
            for (kind, fit) in &sweep.fits {
                let ok = fit.matches(claim.expected_slope(), SLOPE_BAND, MIN_R_SQUARED);
                println!(
                    "{:<12} {:<12} {x:>5} {:>9.1} {:>9.4} {:>10.6}  {}",
                    claim.name(),
                    kind.name(),
                    claim.expected_slope(),
                    fit.slope,
                    fit.r_squared,
                    if ok { "ok" } else { "off" }
                );
            }
        }
    }
    Ok(())
}
