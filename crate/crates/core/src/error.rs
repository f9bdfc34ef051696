use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MacaulayError {
    #[error("binomial expansion needs n >= 1, got 0")]
    ZeroValue,
    #[error("binomial expansion needs i >= 1, got 0")]
    ZeroIndex,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HilbertError {
    #[error("{0} is not an O-sequence")]
    NotAnOSequence(String),
    #[error("index {index} outside 1..={socle_degree}")]
    IndexOutOfRange { index: usize, socle_degree: usize },
    #[error("cannot parse Hilbert function: {0}")]
    Parse(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("generator `{0}` is not homogeneous")]
    NonHomogeneousGenerator(String),
    #[error("zero polynomial given as generator")]
    ZeroGenerator,
    #[error("{0} is not an O-sequence")]
    NotAnOSequence(String),
    #[error("codimension {codim} exceeds the number of variables {vars}")]
    CodimensionExceedsRing { codim: u64, vars: usize },
    #[error("codimension {codim} differs from the number of variables {vars}")]
    CodimensionMismatch { codim: u64, vars: usize },
    #[error("point {0} appears twice")]
    DuplicatePoint(usize),
    #[error("point {0} is not a valid projective point")]
    InvalidPoint(usize),
    #[error("quotient does not vanish up to degree {0}")]
    NotArtinianByCap(usize),
    #[error("linear form lies in the ideal")]
    LinearFormInIdeal,
    #[error("polynomial `{0}` is not a nonzero linear form")]
    NotLinear(String),
    #[error("ideal is not a stable monomial ideal")]
    NotStable,
    #[error("denominator vanishes modulo {prime}")]
    BadReduction { prime: u32 },
    #[error("ring has {expected} variables, input uses {found}")]
    RingMismatch { expected: usize, found: usize },
    #[error("exactness h = b + c fails in degree {0}")]
    ExactnessViolated(usize),
    #[error("parse error: {0}")]
    Parse(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BettiError {
    #[error("negative Betti number at ({0}, {1})")]
    NegativeEntry(usize, usize),
    #[error("tables live over rings with {0} and {1} variables")]
    RingMismatch(usize, usize),
    #[error("cannot parse Betti table: {0}")]
    Parse(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("estimated {estimate} ideals exceeds the limit of {limit}; pass --force to run anyway")]
    Guard { estimate: u64, limit: u64 },
    #[error("codimension must be at least 1")]
    ZeroCodimension,
    #[error(transparent)]
    Hilbert(#[from] HilbertError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}
