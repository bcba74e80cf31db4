use thiserror::Error;

/// Errors raised by the polynomial, grammar, enumeration and analysis layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree {degree} exceeds declared bound {bound}")]
    DegreeTooLarge { degree: usize, bound: usize },
    #[error("not divisible")]
    NotDivisible,
    #[error("no rule for letter {0}")]
    MissingRule(char),
    #[error("unknown grammar {0}")]
    UnknownGrammar(String),
    #[error("division by zero while binding {0}")]
    DivisionByZero(char),
    #[error("residual letters remain")]
    ResidualLetters,
    #[error("non-integral coefficient {0}")]
    NonIntegral(String),
    #[error("negative coefficient {0}")]
    NegativeCoefficient(String),
    #[error("{what} of size {size} exceeds enumeration cap {cap}")]
    CapExceeded { what: String, size: u128, cap: u128 },
    #[error("not symmetric about center {0}")]
    NotSymmetric(usize),
    #[error("nonzero residual after gamma peeling")]
    NonzeroResidual,
    #[error("negative entry {value} in {table} row {row}, index {k}")]
    NegativeEntry {
        table: &'static str,
        row: usize,
        k: usize,
        value: String,
    },
    #[error("degree mismatch: deg p = {p}, deg q = {q}")]
    DegreeMismatch { p: usize, q: usize },
    #[error("common root")]
    CommonRoot,
    #[error("multiple root")]
    MultipleRoot,
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("invalid argument: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
