use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },

    /// The listed terms have different total degrees.
    #[error("polynomial is not homogeneous: {}", format_degrees(.terms))]
    NotHomogeneous { terms: Vec<(String, u32)> },

    #[error("the hypersurface is a cone (a degree-0 Jacobian relation exists)")]
    ConeInput,

    #[error("degree {0} input rejected: hyperplanes and constants carry no singularities")]
    DegreeTooLow(u32),

    #[error("need at least 2 variables, got {0}")]
    TooFewVariables(usize),

    #[error("at most 10 variables (x0..x9) are supported, got {0}")]
    TooManyVariables(usize),

    /// Disagreement between the stabilized ER dimension and the Hilbert function of S/J_f.
    #[error(
        "Tjurina routes disagree or fail to stabilize: er_dim(n(d-2))={er_stable}, \
         er_dim(n(d-2)+1)={er_next}, hilbert={hilbert:?} (non-isolated singularities?)"
    )]
    NonIsolatedOrBug {
        er_stable: usize,
        er_next: usize,
        hilbert: Option<usize>,
    },

    #[error("dim ER(f)_{degree} = {found} differs from the stable value {expected}")]
    ErNotStable {
        degree: usize,
        expected: usize,
        found: usize,
    },

    #[error("Hilbert function of S/J_f did not stabilize by degree {cap}")]
    NoStabilization { cap: usize },

    #[error("dim ER(f)_{degree} = {dim}, the witness check needs exactly 1")]
    DimensionNotOne { degree: usize, dim: usize },

    #[error("point ({0}) is not a singular point of V")]
    NotSingular(String),

    #[error("operation needs n = {expected}, input has n = {found}")]
    WrongDimension { expected: usize, found: usize },

    #[error("operation needs d >= {min}, input has d = {found}")]
    DegreeTooSmall { min: u32, found: u32 },

    #[error("parameter out of range: {0}")]
    OutOfRange(String),

    #[error("du Plessis-Wall bound violated: {lower} <= tau={tau} <= {upper} fails")]
    BoundViolation { lower: i64, upper: i64, tau: usize },

    #[error("modulus mismatch: {0} vs {1}")]
    ModulusMismatch(u64, u64),

    /// A mathematically guaranteed identity failed; always a bug, never a data condition.
    #[error("internal assertion failed: {0}")]
    Assertion(String),

    #[error("unknown corpus instance `{0}`")]
    UnknownInstance(String),

    #[error("i/o error: {0}")]
    Io(String),
}

fn format_degrees(terms: &[(String, u32)]) -> String {
    terms
        .iter()
        .map(|(t, d)| format!("{t} (degree {d})"))
        .collect::<Vec<_>>()
        .join(", ")
}

macro_rules! ensure {
    ($cond:expr, $($arg:tt)+) => {
        if !$cond {
            return Err($crate::error::Error::Assertion(format!($($arg)+)));
        }
    };
}
pub(crate) use ensure;
