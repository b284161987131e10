//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("singular matrix: {0}")]
    SingularMatrix(String),
    #[error("outside regular region: {0}")]
    OutsideRegularRegion(String),
    #[error("no overlap between domains: {0}")]
    NoOverlap(String),
    #[error("transition is not integer: max pre-rounding deviation {deviation:.4} ({context})")]
    NonIntegerTransition { deviation: f64, context: String },
    #[error("transition matrix is not unimodular: det = {det}")]
    NonUnimodular { det: i64 },
    #[error("loop is not closed")]
    OpenLoop,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("empty segment: {0}")]
    EmptySegment(String),
    #[error("lambda = {lambda} too large for alpha = {alpha} (requires lambda <= alpha^2/10)")]
    LambdaTooLarge { lambda: f64, alpha: f64 },
    #[error("regime violation: {0}")]
    RegimeViolation(String),
    #[error("insufficient points: got {got}, need at least {need}")]
    InsufficientPoints { got: usize, need: usize },
    #[error("degenerate lattice basis: {0}")]
    DegenerateBasis(String),
    #[error("label assignment did not converge: {0}")]
    NoConvergence(String),
    #[error("ambiguous chart alignment: {0}")]
    AlignmentAmbiguity(String),
    #[error("anchor chain broken: {0}")]
    ChainBroken(String),
    #[error("point outside pseudo-chart domain: {0}")]
    OutsideDomain(String),
    #[error("inconsistent transition samples: spread {spread:.4}")]
    InconsistentSamples { spread: f64 },
    #[error("cocycle violation on ({i}, {j}, {k})")]
    CocycleViolation { i: String, j: String, k: String },
    #[error("not a loop: {0}")]
    NotALoop(String),
    #[error("missing edge ({0}, {1})")]
    MissingEdge(String, String),
    #[error("degenerate leading term: {0}")]
    DegenerateLeadingTerm(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
