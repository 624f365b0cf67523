use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("odd generator degree: `{name}` has degree {degree}")]
    OddGeneratorDegree { name: String, degree: u32 },

    #[error("generator `{name}` has non-positive degree")]
    ZeroGeneratorDegree { name: String },

    #[error("duplicate generator name `{0}`")]
    DuplicateGenerator(String),

    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),

    #[error("mismatched generator basis: [{left}] vs [{right}]")]
    MismatchedBasis { left: String, right: String },

    #[error("cannot parse monomial `{0}`")]
    BadMonomial(String),

    #[error("cannot parse rational `{0}`")]
    BadRational(String),

    #[error("polynomial is not symmetric under the transposition ({0} {1})")]
    NotSymmetric(String, String),

    #[error("root basis must consist of {expected} generators of a single degree")]
    NotRootBasis { expected: usize },

    #[error("expected {expected} class names, got {got}")]
    ClassNameCount { expected: usize, got: usize },

    #[error("series constant term must be 1, found {0}")]
    NonUnitConstant(String),

    #[error("series has order {have}, need at least {need}")]
    SeriesTooShort { have: usize, need: usize },

    #[error("series must be even to be regrouped over squared roots")]
    OddSeries,

    #[error("degree mismatch for {what}: expected pure degree {expected}")]
    DegreeMismatch { what: String, expected: u32 },

    #[error("argument out of range: {0}")]
    OutOfRange(String),

    #[error("inverse period must be positive, got beta = {0}")]
    NonPositiveBeta(f64),

    #[error("determinant is singular: eigenvalue of mode {mode} vanishes")]
    SingularDeterminant { mode: i64 },

    #[error("monomial `{monomial}` is missing from the evaluation table of {manifold}")]
    MissingMonomial { manifold: String, monomial: String },

    #[error("index {kind} on {manifold} evaluated to non-integer {value}; descriptor is inconsistent")]
    NonIntegral { kind: String, manifold: String, value: String },

    #[error("{0}")]
    Unsupported(String),

    #[error("invalid descriptor field `{field}`: {reason}")]
    InvalidField { field: String, reason: String },

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },

    #[error("unsupported schema version {0}")]
    SchemaVersion(u32),

    #[error("unknown manifold `{0}`")]
    UnknownManifold(String),

    #[error("unknown bundle `{bundle}` on {manifold}")]
    UnknownBundle { manifold: String, bundle: String },

    #[error("i/o error on {path}: {message}")]
    Io { path: String, message: String },
}
