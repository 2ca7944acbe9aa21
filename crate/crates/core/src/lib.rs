//! Numerical laboratory for the pentagram map.
//!
//! * [`geometry`]: points, cyclic polygons, the map itself and its per-vertex
//!   weights `(A, B, C, D)`.
//! * [`invariant`]: the cross-ratio product `f(V)`, exact identities between
//!   the weights of `V` and of its image, and diameter decay under iteration.
//! * [`curve`] and [`flow`]: polygons sampled from periodic curves and the
//!   asymptotic expansions of the weights and of the limiting flow, measured
//!   as convergence exponents with [`fit`].
//! * [`experiment`]: file-driven runs used by the `pentaflow` binary.
//!
//! Runnable examples, one per capability:
//!
//! ```bash
//! cargo run --example pentagram_map       # one step, weights, three-way vertex check
//! cargo run --example invariant_check     # f(V) over a corpus and along an orbit
//! cargo run --example diameter_decay      # regular ratios and random decay fits
//! cargo run --example weight_asymptotics  # B and C against their first-order terms
//! cargo run --example limiting_flow       # gamma'' / W gamma' split of the double image
//! cargo run --example figure_data -- out/ # curve-comparison tables
//! cargo run --example claim_sweep         # every convergence exponent on one curve
//! cargo run --example custom_curve        # JSON curve, affine invariance of W
//! ```
//!
//! ```
//! use pentaflow::geometry::{pentagram_map, Polygon};
//!
//! let hex = Polygon::regular(6, 1.0, 0.0).unwrap();
//! let image = pentagram_map(&hex).unwrap();
//! assert!((image.at(0).norm() - 3f64.sqrt() / 3.0).abs() < 1e-14);
//! ```

pub mod corpus;
pub mod curve;
pub mod error;
pub mod experiment;
pub mod fit;
pub mod flow;
pub mod geometry;
pub mod invariant;
pub mod io;
pub mod tolerances;

pub use curve::{PeriodicCurve, ThetaFourierCurve};
pub use error::{FitError, GeometryError};
pub use fit::{fit_convergence, ConvergenceFit};
pub use geometry::{
    coefficients, det2, line_intersection, pentagram_map, CoefficientQuad, Point2, Polygon,
};
pub use invariant::{check_invariance, invariant_f, InvariantReport, IterationTrace};
