use num_complex::Complex64;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("non-finite value in {0}")]
    NonFinite(&'static str),

    #[error("degree mismatch: expected {expected}, got {got}")]
    DegreeMismatch { expected: usize, got: usize },

    #[error("polynomial is not monic (leading coefficient {0})")]
    NotMonic(Complex64),

    #[error("constant polynomial")]
    ConstantPolynomial,

    /// The root finder hit its iteration cap. Carries the best iterate.
    #[error(
        "root finder did not converge after {iterations} iterations (max residual {residual:e})"
    )]
    NoConvergence {
        iterations: usize,
        best: Vec<Complex64>,
        residual: f64,
    },

    #[error("zeros not simple (min pairwise distance {0:e})")]
    ZerosNotSimple(f64),

    #[error("root outside unit disk: {0}")]
    RootOutsideUnitDisk(Complex64),

    #[error("cannot normalize zero root")]
    ZeroRoot,

    #[error("root index {index} out of range for degree {degree}")]
    IndexOutOfRange { index: usize, degree: usize },

    #[error("degree {0} out of range: {1}")]
    InvalidDegree(usize, &'static str),

    #[error("j = {j} out of range 1..={max}")]
    AlphaIndex { j: usize, max: usize },

    #[error("parameter {name} = {value} out of range: {reason}")]
    OutOfRange {
        name: &'static str,
        value: f64,
        reason: &'static str,
    },

    #[error("small-root regime or root on circle (a = {a}, a_n = {a_n})")]
    FrameRegime { a: f64, a_n: f64 },

    #[error("gap inequality violated: gap {gap:e} <= s^2/6 = {bound:e}")]
    GapViolation { gap: f64, bound: f64 },

    #[error("infinite intersection")]
    InfiniteIntersection,

    #[error("residual {residual:e} exceeds bound {bound:e}")]
    Residual { residual: f64, bound: f64 },

    #[error("call rotate_to_positive_real first (root {0} is not positive real)")]
    NotNormalized(Complex64),

    #[error("zero-constant audit requires p(0)=0 (|p(0)| = {0:e})")]
    NonzeroConstantTerm(f64),

    #[error("separation infeasible: n = {n}, min separation {min_sep} after {attempts} attempts")]
    SeparationInfeasible {
        n: usize,
        min_sep: f64,
        attempts: usize,
    },

    #[error("invalid config: {0}")]
    InvalidConfig(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("I/O error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::InvalidInput(e.to_string())
    }
}

impl From<csv::Error> for Error {
    fn from(e: csv::Error) -> Self {
        Error::Io(e.to_string())
    }
}
