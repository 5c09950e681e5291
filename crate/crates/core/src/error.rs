//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by sequence construction, probes, and the pipeline.
#[derive(Error, Debug)]
pub enum Error {
    #[error("sequence is empty")]
    EmptySequence,

    #[error("sequence value at position {index} is zero")]
    ZeroValue { index: usize },

    #[error("sequence values at positions {first} and {second} coincide")]
    DuplicateValue { first: usize, second: usize },

    #[error("operation requires a real-valued sequence, got complex values ({origin})")]
    NonRealSequence { origin: String },

    #[error("operation requires positive real values ({origin})")]
    NonPositiveSequence { origin: String },

    #[error("index {index} out of range for window of length {len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("radius {radius} is degenerate for a log\u{b2} ratio (must exceed 1)")]
    DegenerateRadius { radius: f64 },

    #[error("radius grid must be strictly increasing with at least {min_len} entries")]
    BadRadiusGrid { min_len: usize },

    #[error("matrix size {n} is invalid")]
    BadMatrixSize { n: usize },

    #[error("coefficient ratio lies on the positive real axis; the two spectral branches would collide")]
    BranchCollision,

    #[error("kappa must be nonzero to invert the perturbation")]
    KappaZero,

    #[error("evaluation point hits the pole at position {index}")]
    PoleHit { index: usize },

    #[error("contour failure: {0}")]
    Contour(String),

    #[error("zero set contains a zero at the origin; spectrum recovery undefined")]
    ZeroAtOrigin,

    #[error("alpha sequence must be strictly decreasing and positive")]
    AlphaNotDecreasing,

    #[error("sample grid too coarse: need at least {need} points, got {got}")]
    GridTooCoarse { need: usize, got: usize },

    #[error("no subinterval on the grid attains the required lower bound (precondition violated)")]
    SearchFailure,

    #[error("duplicate zeros in product block")]
    DuplicateZeros,

    #[error("anchor {index} unsuitable: full octave sum {log_sum:.3e} (log) does not exceed 1")]
    AnchorUnsuitable { index: usize, log_sum: f64 },

    #[error("fewer than 2 viable anchors in the window; sequence is not sparse enough")]
    InsufficientSparseness,

    #[error("window precondition violated: {0}")]
    WindowPrecondition(String),

    #[error("eigenvalue computation failed to converge")]
    EigenFailure,

    #[error("singular value computation failed to converge")]
    SvdFailure,

    #[error("scenario schema violation: {0}")]
    Schema(String),

    #[error("assertion failed: {0}")]
    AssertionFailed(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
