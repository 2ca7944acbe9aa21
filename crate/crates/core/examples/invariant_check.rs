//! The cross-ratio invariant over a random corpus and along one long orbit.

use pentaflow::corpus::{convex_corpus, seeded_convex_polygon};
use pentaflow::geometry::pentagram_map;
use pentaflow::invariant::{check_invariance, invariant_f};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let corpus = convex_corpus(42, 200, 5..=20);
    let mut worst = 0.0_f64;
    for poly in &corpus {
        worst = worst.max(check_invariance(poly)?);
    }
    println!(
        "{} polygons, max |f(TV)/f(V) - 1| = {worst:.2e}",
        corpus.len()
    );

    let mut poly = seeded_convex_polygon(5, 12);
    let f0 = invariant_f(&poly)?;
    println!(
        "\n12-gon: f = {:.12e} (coefficient form {:.12e})",
        f0.f_signed, f0.f_coeff
    );
    for k in 1..=15 {
        poly = pentagram_map(&poly)?;
        let f = invariant_f(&poly)?.f_signed;
        println!("step {k:>2}: drift {:.2e}", (f / f0.f_signed - 1.0).abs());
    }
    Ok(())
}
