use std::fmt;

use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus is not irreducible: {0}")]
    NotIrreducible(String),
    #[error("invalid modulus: {0}")]
    InvalidModulus(String),
    #[error("no primitive element found (modulus bug?)")]
    NoPrimitiveFound,
    #[error("field with {0} elements is too large")]
    FieldTooLarge(u128),
    #[error("parameter s = {s} is not coprime to m = {m}")]
    BadParameterS { s: i64, m: usize },
    #[error("the zero element defines the zero functional")]
    ZeroFunctional,
    #[error("elements do not form an F_q-basis")]
    NotABasis,
    #[error("element has nonzero trace, it is not in the image of phi_s")]
    NotInKernel,
    #[error("gamma has zero trace")]
    BadGamma,
    #[error("element is not primitive")]
    NotPrimitive,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("invalid dimensions: {0}")]
    InvalidDimensions(String),
    #[error("matrix {rows}x{cols} is too large for minor enumeration")]
    TooLarge { rows: usize, cols: usize },
    #[error("enumeration of {needed} items exceeds the cap {cap}")]
    CapExceeded { needed: u128, cap: u128 },
    #[error("evaluation points are F_q-linearly dependent")]
    DependentPoints,
    #[error("generator has rank {rank}, expected {rows}")]
    RankDeficient { rank: usize, rows: usize },
    #[error("code has no generator matrix in standard form")]
    NoStandardForm,
    #[error("matrix is not a (q,s)-Cauchy matrix: {0}")]
    NotQCauchy(String),
    #[error("parameter validation failed: {}", join(.0))]
    ValidationFailed(Vec<Violation>),
    #[error("singular linear system")]
    SingularSystem,
    #[error("verification failed: {0}")]
    VerificationFailed(String),
    #[error("matrix is not circulant")]
    NotCirculant,
    #[error("matrix is not {0}")]
    NotStructured(&'static str),
    #[error("matrix has entries outside the base field")]
    NotOverBase,
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

/// A violated condition of a (q,s)-Cauchy parameter set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// `alpha` does not have full q-rank.
    AlphaRank { expected: usize, found: usize },
    /// `beta` does not have full q-rank.
    BetaRank { expected: usize, found: usize },
    /// `Tr(alpha_i * beta_j) != 0`.
    NotTraceOrthogonal { i: usize, j: usize },
    /// `beta_1 != 1`.
    BetaNotNormalized,
    /// `B` has the wrong shape.
    ShapeMismatch { rows: usize, cols: usize },
    /// `B` has an entry outside `F_q`.
    BNotOverBase { i: usize, j: usize },
    /// `s` is not coprime to `m`.
    BadParameterS,
    /// `Tr(gamma) == 0`.
    BadGamma,
    /// `n > m`, no MRD code exists.
    LengthExceedsDegree { n: usize, m: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::AlphaRank { expected, found } => {
                write!(f, "rk_q(alpha) = {found}, expected {expected}")
            }
            Violation::BetaRank { expected, found } => {
                write!(f, "rk_q(beta) = {found}, expected {expected}")
            }
            Violation::NotTraceOrthogonal { i, j } => {
                write!(f, "Tr(alpha_{} * beta_{}) != 0", i + 1, j + 1)
            }
            Violation::BetaNotNormalized => write!(f, "beta_1 != 1"),
            Violation::ShapeMismatch { rows, cols } => {
                write!(f, "B has shape {rows}x{cols}")
            }
            Violation::BNotOverBase { i, j } => {
                write!(f, "B[{}][{}] is not in F_q", i + 1, j + 1)
            }
            Violation::BadParameterS => write!(f, "s not coprime to m"),
            Violation::BadGamma => write!(f, "Tr(gamma) = 0"),
            Violation::LengthExceedsDegree { n, m } => write!(f, "n = {n} > m = {m}"),
        }
    }
}

fn join(v: &[Violation]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("; ")
}
