use thiserror::Error;

/// Errors raised by the library. The CLI maps every variant to exit code 2
/// except [`Error::Internal`], which signals a broken invariant.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("field size {p}^{s} exceeds the cap of {cap}")]
    FieldTooLarge { p: u64, s: u32, cap: u64 },
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("operands belong to different fields ({0} vs {1})")]
    FieldMismatch(String, String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0} does not divide the order of the multiplicative group ({1})")]
    NotADivisor(u64, u64),
    #[error("invalid element encoding {0:?}")]
    BadElement(String),
    #[error("invalid polynomial encoding {0:?}")]
    BadPoly(String),
    #[error("characteristic polynomial must be monic")]
    NotMonic,
    #[error("the zero polynomial has no root multiplicity")]
    ZeroPolynomial,
    #[error("root must be nonzero")]
    ZeroRoot,
    #[error("empty range: {u} > {v}")]
    EmptyRange { u: i64, v: i64 },
    #[error("index {0} outside the stored range")]
    OutOfRange(i64),
    #[error("falling factorial length must be nonnegative, got {0}")]
    NegativeLength(i64),
    #[error("closed form does not apply to (k={k}, h={h}, r={r})")]
    FormulaInapplicable { k: i64, h: usize, r: i64 },
    #[error("division is not exact")]
    InexactDivision,
    #[error("invalid curve parameters: {0}")]
    BadCurve(String),
    #[error("enumeration cap exceeded: {0}")]
    CapExceeded(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
