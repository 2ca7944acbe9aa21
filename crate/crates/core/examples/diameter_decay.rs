//! Exponential shrinking under iteration: regular polygons hit a fixed ratio,
//! random ones settle onto a straight line in log(diameter).

use std::f64::consts::PI;

use pentaflow::corpus::seeded_convex_polygon;
use pentaflow::geometry::Polygon;
use pentaflow::invariant::iterate_and_measure;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for n in [5, 6, 8, 12] {
        let trace = iterate_and_measure(&Polygon::regular(n, 1.0, PI / 2.0)?, 10)?;
        let predicted = (2.0 * PI / n as f64).cos() / (PI / n as f64).cos();
        println!(
            "regular {n:>2}-gon: slope {:+.6}, ratio {:.6} (cos(2pi/n)/cos(pi/n) = {:.6})",
            trace.log_diameter_slope,
            trace.diameter_ratios()[0],
            predicted
        );
    }
    for seed in 0..4 {
        let trace = iterate_and_measure(&seeded_convex_polygon(seed, 10), 30)?;
        println!(
            "random 10-gon seed {seed}: slope {:+.4}, r^2 {:.5}, max drift {:.1e}",
            trace.log_diameter_slope,
            trace.r_squared,
            trace.max_drift()
        );
    }
    Ok(())
}
