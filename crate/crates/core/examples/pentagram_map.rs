//! One step of the map on a regular pentagon and on a random convex heptagon,
//! computed from the coefficients and by direct line intersection.

use std::f64::consts::PI;

use pentaflow::corpus::seeded_convex_polygon;
use pentaflow::geometry::{coefficients, pentagram_map, vertex_two_ways, Polygon};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let pent = Polygon::regular(5, 1.0, PI / 2.0)?;
    let image = pentagram_map(&pent)?;
    println!(
        "pentagon diameter ratio {:.9}",
        image.diameter() / pent.diameter()
    );
    println!("pentagon B = {:.9}", coefficients(&pent, 0)?.b);

    let poly = seeded_convex_polygon(1, 7);
    println!("\nrandom heptagon");
    println!(
        "{:>2} {:>10} {:>10} {:>10} {:>10} {:>9}",
        "i", "A", "B", "C", "D", "spread"
    );
    for i in 0..poly.len() as isize {
        let q = coefficients(&poly, i)?;
        let (a, b, c) = vertex_two_ways(&poly, i)?;
        let spread = a.distance(b).max(a.distance(c));
        println!(
            "{i:>2} {:>10.6} {:>10.6} {:>10.6} {:>10.6} {spread:>9.1e}",
            q.a, q.b, q.c, q.d
        );
    }
    Ok(())
}
