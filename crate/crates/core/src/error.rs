use thiserror::Error;

/// Every failure the calculus can report.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division is not exact: nonzero remainder")]
    DivisionNotExact,
    #[error("division by zero")]
    ZeroDivisor,
    #[error("symbol `{0}` has no value in the witness")]
    UnassignedSymbol(String),
    #[error("polynomial is identically zero")]
    ZeroPolynomial,
    #[error("polynomial has parameter-dependent coefficients: {0}")]
    NotConstant(String),
    #[error("witness `{id}` violates constraint {constraint}")]
    WitnessViolation { id: String, constraint: String },

    #[error("operator is not left divisible: x^{degree} coefficient has a nonzero remainder")]
    NotLeftDivisible { degree: usize },
    #[error("operator is zero")]
    ZeroOperator,
    #[error("point {0} is not a singular point of the operator")]
    NotSingular(String),
    #[error("at {point}: only {found} of {expected} exponents are rational")]
    IrrationalExponent {
        point: String,
        found: usize,
        expected: usize,
    },
    #[error("claimed exponent {exponent} at {point} does not divide the indicial polynomial")]
    UncertifiedExponent { point: String, exponent: String },
    #[error("operator has no x^0 term")]
    MissingConstantTerm,

    #[error("point sets differ: {0}")]
    PointSetMismatch(String),
    #[error("middle convolution with the trivial class is not defined")]
    NotApplicable,
    #[error("rank mismatch: {0}")]
    RankMismatch(String),
    #[error("missing preimage labels for point `{0}`")]
    MissingPreimageLabels(String),
    #[error("invalid monodromy tuple: {0}")]
    InvalidTuple(String),

    #[error("inconsistent Hodge profile: {0}")]
    InconsistentProfile(String),
    #[error("profile has no global degrees")]
    MissingDelta,
    #[error("a parameter witness is required: {0}")]
    WitnessRequired(String),
    #[error("negative count {count} at p = {p}")]
    NegativeCount { p: i64, count: i64 },
    #[error("no Hodge vector satisfies the constraints")]
    NoSolution,
    #[error("{0} Hodge vectors satisfy the constraints")]
    Ambiguous(usize),
    #[error("eigenvalue 1 at infinity (class {0})")]
    TrivialEigenvalueAtInfinity(String),

    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),
    #[error("fixture `{id}` has kind {found}, expected {expected}")]
    FixtureKind {
        id: String,
        expected: &'static str,
        found: &'static str,
    },
    #[error("syntax error at {pos}: {msg}")]
    SyntaxError { pos: usize, msg: String },
    #[error("exponent at {pos} must be a non-negative integer")]
    NonIntegerExponent { pos: usize },
    #[error("invalid input: {0}")]
    Input(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
