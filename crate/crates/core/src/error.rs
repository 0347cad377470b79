use thiserror::Error;

/// Errors raised by the exact-arithmetic layer and the constructions built on it.
///
/// Offending values are carried as decimal strings so the error type does not
/// depend on the integer backend.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("division by zero")]
    DivisionByZero,
    #[error("gcd({a}, {b}) != 1")]
    NotCoprime { a: String, b: String },
    #[error("{value} has no inverse modulo {modulus}")]
    NotInvertible { value: String, modulus: String },
    #[error("modulus must be at least 2, got {0}")]
    ModulusTooSmall(String),
    #[error("q=1 trivial case: S({a},{b}) is an integer")]
    TrivialValue { a: String, b: String },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("invariant violated: {0}")]
    Invariant(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// True for failures that indicate a broken identity rather than bad input.
    pub fn is_invariant(&self) -> bool {
        matches!(self, Error::Invariant(_))
    }

    pub(crate) fn not_coprime(a: &impl ToString, b: &impl ToString) -> Self {
        Error::NotCoprime {
            a: a.to_string(),
            b: b.to_string(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
