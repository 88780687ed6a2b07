//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("mean term a0 must be positive and finite, got {0}")]
    InvalidMeanTerm(f64),
    #[error("harmonic order must be >= 1, got {0}")]
    InvalidOrder(i64),
    #[error("duplicate harmonic order {0}")]
    DuplicateOrder(u32),
    #[error("non-finite coefficient on harmonic of order {0}")]
    NonFiniteCoefficient(u32),
    #[error("body is not strictly convex: min(p + p'') = {margin}")]
    NotConvex { margin: f64 },
    #[error("alpha must lie strictly between 0 and pi, got {0}")]
    AlphaOutOfRange(f64),
    #[error("grid size must be at least {min}, got {got}")]
    GridTooSmall { min: usize, got: usize },
    #[error("scale factor must be positive and finite, got {0}")]
    InvalidScale(f64),
    #[error("a circumscribed polygon needs at least 3 sides, got {0}")]
    TooFewSides(u32),
    #[error("harmonic order for the chord system must be at least {min}, got {got}")]
    OrderTooSmall { min: u32, got: u32 },
    #[error("rational angle {numer}/{denom}*pi must satisfy 0 < numer < denom")]
    RationalAngleOutOfRange { numer: u32, denom: u32 },
    #[error("rational angle {numer}/{denom}*pi is not in lowest terms")]
    RationalAngleNotCoprime { numer: u32, denom: u32 },
    #[error("cannot parse angle {0:?}: expected `S/Qpi`, `Xpi`, or a decimal in radians")]
    AngleParse(String),
    #[error(
        "harmonic of order {order} is not admissible at alpha = {alpha_numer}/{alpha_denom}*pi: \
         determinant = {det:.6e} (e1 = {e1:.6e}, e2 = {e2:.6e})"
    )]
    InadmissibleHarmonic {
        order: u32,
        alpha_numer: u32,
        alpha_denom: u32,
        e1: f64,
        e2: f64,
        det: f64,
    },
    #[error("curves carry different sample counts: {0} vs {1}")]
    SampleCountMismatch(usize, usize),
    #[error("homothety fit is degenerate: the first curve has no spread about its centroid")]
    DegenerateFit,
    #[error("statistics over an empty sample list")]
    EmptySamples,
    #[error("invalid spec: {0}")]
    Spec(String),
    #[error("invalid spec JSON: {0}")]
    SpecJson(#[from] serde_json::Error),
    #[error("ellipsoid semi-axes must be positive and finite, got {0:?}")]
    InvalidSemiAxes([f64; 3]),
    #[error("radius must be positive and finite, got {0}")]
    InvalidRadius(f64),
    #[error("perturbed sphere violates the curvature-safe bound: eps*m*(m+1) = {0} must be < 0.1")]
    CurvatureBound(f64),
    #[error(
        "inner body is not strictly contained in the outer body: boundary point \
         ({x}, {y}, {z}) has outer implicit value {value:.6e}"
    )]
    ContainmentViolation { x: f64, y: f64, z: f64, value: f64 },
    #[error("chord root finding failed for sample {index}: {detail}")]
    RootFinding { index: usize, detail: String },
    #[error("support-point Newton iteration stalled for sample {index}: residual {residual:.6e}")]
    NewtonStalled { index: usize, residual: f64 },
    #[error("count must be at least 1")]
    EmptyCount,
}
