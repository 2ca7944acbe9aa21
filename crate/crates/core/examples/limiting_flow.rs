//! Splits `n^2 (T^2(V)_{i-1} - v_i)` into its `gamma''` and `W gamma'` parts.
//! The coefficients settle at (3/4, -1/2).

use pentaflow::curve::ThetaFourierCurve;
use pentaflow::flow::{nearest_index, sample_polygon, scaled_double_image, FlowRhs, Jet};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let curve = ThetaFourierCurve::figure3();
    let x = 0.25;
    for rhs in [FlowRhs::Corrected, FlowRhs::Schwartz] {
        println!(
            "{rhs:?} right-hand side uses coefficients {:?}",
            rhs.coefficients()
        );
    }
    println!(
        "\n{:>5} {:>10} {:>10} {:>12} {:>12}",
        "n", "a", "b", "|res corr|", "|res schw|"
    );
    for n in [40, 80, 160, 320, 640, 1280] {
        let i = nearest_index(n, x);
        let poly = sample_polygon(&curve, n)?;
        let jet = Jet::at(&curve, i as f64 / n as f64)?;
        let v = scaled_double_image(&poly, i)?;
        let (a, b) = jet.decompose(v);
        let corr = (v - FlowRhs::Corrected.eval(&jet)).norm();
        let schw = (v - FlowRhs::Schwartz.eval(&jet)).norm();
        println!("{n:>5} {a:>10.6} {b:>10.6} {corr:>12.6} {schw:>12.6}");
    }
    Ok(())
}
