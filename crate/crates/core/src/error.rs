use alloc::string::String;

/// Errors raised by the algebra, construction and verification routines.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("operands are defined over different variable tables")]
    MismatchedTables,
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("duplicate variable `{0}`")]
    DuplicateVariable(String),
    #[error("invalid variable name `{0}`")]
    InvalidVariableName(String),
    #[error("no value assigned to variable `{0}`")]
    MissingAssignment(String),
    #[error("exponent overflow in variable `{0}`")]
    ExponentOverflow(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("degree data ({d1}, {d2}, {d3}) with r = {r} violates d1 + d2 + d3 = r + 3")]
    InvalidDegreeSpec { d1: u32, d2: u32, d3: u32, r: u32 },
    #[error("expected {expected} factor triples, found {found}")]
    WrongFactorCount { expected: usize, found: usize },
    #[error("factor triple {index} has a negative entry")]
    NegativeFactorEntry { index: usize },
    #[error("polynomial is not a ternary cubic in x1, x2, x3")]
    NotACubic,
    /// An exact division that must succeed did not; this always indicates a
    /// normalisation bug rather than bad input.
    #[error("exact division by {divisor} failed in {context}")]
    NotDivisible { divisor: String, context: &'static str },
    #[error("Hessian determinant vanishes at the point; the metric is degenerate")]
    DegenerateMetric,
    #[error("Hessian matrix is singular at the point (index cone boundary)")]
    SingularHessian,
    #[error("the evaluation point is zero")]
    ZeroPoint,
    #[error("exponent matrix is not allowable: {0}")]
    InvalidMatrix(String),
    #[error("parameters violate the parity condition of the requested case")]
    ParityMismatch,
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
