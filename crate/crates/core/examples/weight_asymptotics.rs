//! B and C on polygons inscribed in a smooth curve, compared with their
//! first-order predictions. B matches `1/4 - W/(8n)`; C does not match
//! `1/4 - W/(16n)` but `1/4 + W/(8n)`.

use pentaflow::curve::ThetaFourierCurve;
use pentaflow::flow::{compute_w, nearest_index, sample_polygon};
use pentaflow::geometry::coefficients;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let curve = ThetaFourierCurve::figure3();
    let x = 0.25;
    let w = compute_w(&curve, x)?;
    println!("W({x}) = {w:.6}");
    println!(
        "{:>5} {:>13} {:>13} {:>13}",
        "n", "n(1/4 - B)", "n(C - 1/4)", "W/8"
    );
    for n in [40, 80, 160, 320, 640, 1280] {
        let i = nearest_index(n, x);
        let q = coefficients(&sample_polygon(&curve, n)?, i)?;
        let nf = n as f64;
        println!(
            "{n:>5} {:>13.6} {:>13.6} {:>13.6}",
            nf * (0.25 - q.b),
            nf * (q.c - 0.25),
            w / 8.0
        );
    }
    Ok(())
}
