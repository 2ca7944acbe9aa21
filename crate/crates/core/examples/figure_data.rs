//! Writes the curve-comparison tables for both right-hand sides.
//!
//! ```bash
//! cargo run --example figure_data -- out/
//! ```

use std::path::PathBuf;

use pentaflow::curve::ThetaFourierCurve;
use pentaflow::flow::{figure_data, figure_table, max_gap, FlowRhs};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = PathBuf::from(
        std::env::args()
            .nth(1)
            .unwrap_or_else(|| "figure-out".into()),
    );
    std::fs::create_dir_all(&dir)?;
    let curve = ThetaFourierCurve::figure3();
    for (name, rhs) in [("fig3", FlowRhs::Corrected), ("fig4", FlowRhs::Schwartz)] {
        for n in [20, 30, 40] {
            let rows = figure_data(&curve, n, rhs)?;
            let path = dir.join(format!("{name}_n{n}.csv"));
            std::fs::write(&path, figure_table(&rows).to_csv())?;
            println!(
                "{name} n={n}: max gap {:.4} -> {}",
                max_gap(&rows),
                path.display()
            );
        }
    }
    Ok(())
}
