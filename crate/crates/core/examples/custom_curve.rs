//! Builds a curve from JSON, checks that W is unchanged by an affine image,
//! and samples an inscribed polygon.

use pentaflow::curve::{CurveConfig, LinearImage, PeriodicCurve};
use pentaflow::flow::{compute_w, sample_polygon};
use pentaflow::geometry::Point2;
use pentaflow::invariant::invariant_f;

const CONFIG: &str = r#"{
  "type": "theta_fourier",
  "terms": [
    {"amp": 0.15, "freq": 1, "phase": 0.0, "kind": "sin"},
    {"amp": 0.05, "freq": 3, "phase": 0.5, "kind": "cos"}
  ]
}"#;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let curve = CurveConfig::from_json(CONFIG)?.build();
    let sheared = LinearImage::new(
        curve.clone(),
        [[2.0, 0.7], [0.0, 0.5]],
        Point2::new(1.0, -3.0),
    );
    for x in [0.0, 0.25, 0.5, 0.75] {
        println!(
            "x = {x:<4}  gamma = ({:+.4}, {:+.4})  W = {:+.8}  W(affine image) = {:+.8}",
            curve.eval(x).x,
            curve.eval(x).y,
            compute_w(&curve, x)?,
            compute_w(&sheared, x)?
        );
    }
    let poly = sample_polygon(&curve, 64)?;
    println!(
        "\n64-gon: convex {}, f = {:.6e}",
        poly.is_convex(),
        invariant_f(&poly)?.f_signed
    );
    Ok(())
}
