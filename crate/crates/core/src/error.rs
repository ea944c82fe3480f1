use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("degenerate simplex (edge determinant {det:e})")]
    DegenerateSimplex { det: f64 },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("point not in the image of the baryweight map (H at lower bracket = {h_at_lower})")]
    NotInImage { h_at_lower: f64 },

    #[error("node set is not unisolvent (condition estimate {condition:e})")]
    NotUnisolvent { condition: f64 },

    #[error("rational interpolant has a pole near {location:?} (denominator {denominator:e})")]
    Pole { location: Vec<f64>, denominator: f64 },

    #[error("invalid radii: {0}")]
    InvalidRadii(String),

    #[error("density not normalized: integral over [0, 1/2] is {integral}, expected 0.5")]
    NotNormalized { integral: f64 },

    #[error("invalid density: {0}")]
    InvalidDensity(String),

    #[error("optimizer did not converge after {iterations} iterations (best {best:?}, objective {objective})")]
    NoConvergence { iterations: usize, best: Vec<f64>, objective: f64 },

    #[error("property violated: {0}")]
    PropertyViolation(String),

    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
