use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NonPrime(u64),
    #[error("too large: {0}")]
    TooLarge(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("operands live over different fields")]
    FieldMismatch,
    #[error("polynomial is not squarefree")]
    NotSquarefree,
    #[error("invalid curve: {0}")]
    InvalidCurve(String),
    #[error("degenerate quotient: {0}")]
    DegenerateQuotient(String),
    #[error("unsupported presentation: {0}")]
    UnsupportedPresentation(String),
    #[error("genus is zero")]
    ZeroGenus,
    #[error("degree mismatch: {0}")]
    DegreeMismatch(String),
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("degenerate parameters: {0}")]
    DegenerateParameters(String),
    #[error("slopes are not symmetric under s -> 1 - s")]
    NotSymmetric,
    #[error("breakpoint at x = {0} has non-integral height")]
    NonIntegralBreakpoint(usize),
    #[error("out of range: {0}")]
    OutOfRange(String),
    #[error("polygons are not comparable")]
    NotComparable,
    #[error("tuple product is not the identity")]
    NotProductOne,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid input: {0}")]
    Invalid(String),
}
