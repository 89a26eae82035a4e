use thiserror::Error;

/// Errors raised while building fields, groups, quotients and tables.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u32),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("field of order {p}^{m} is too large for table-driven arithmetic")]
    FieldTooLarge { p: u32, m: u32 },
    #[error("invalid modulus: {0}")]
    InvalidModulus(String),
    #[error("{d} does not divide {m}")]
    NotDivisor { d: u32, m: u32 },
    #[error("element is not in the subfield of degree {0}")]
    NotInSubfield(u32),
    #[error("operation requires p = 2")]
    RequiresCharTwo,
    #[error("operation requires odd p")]
    RequiresOddChar,
    #[error("target must be non-zero")]
    ZeroTarget,
    #[error("no solution: {0}")]
    NoSolution(String),
    #[error("invalid group parameters: {0}")]
    InvalidParams(String),
    #[error("invalid element: {0}")]
    InvalidElement(String),
    #[error("group is not abelian")]
    NotAbelian,
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("case mismatch: {0}")]
    CaseMismatch(String),
    #[error("invalid table: {0}")]
    InvalidTable(String),
}

pub type Result<T> = std::result::Result<T, Error>;
