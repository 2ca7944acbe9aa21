use thiserror::Error;

/// Failures of the planar primitives and of anything built on them.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeometryError {
    #[error("polygon needs n >= 5 vertices, got {0}")]
    TooFewVertices(usize),

    #[error("vertex {0} has a non-finite coordinate")]
    NonFinite(usize),

    #[error("degenerate position at vertex {index}: vanishing determinant")]
    DegeneratePosition { index: usize },

    #[error("pentagram image is degenerate at vertex {index}")]
    DegenerateImage { index: usize },

    #[error("lines are parallel")]
    ParallelLines,

    #[error("points are not collinear with the reference line (deviation {deviation:e})")]
    NotCollinear { deviation: f64 },

    #[error("curvature determinant vanishes at x = {x}")]
    VanishingCurvature { x: f64 },
}

/// Failures of the log-log regression.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum FitError {
    #[error("need at least 3 points with distinct n, got {0}")]
    InsufficientData(usize),

    #[error("residual at n = {n} is not strictly positive ({residual:e})")]
    NonPositiveResidual { n: usize, residual: f64 },
}
