use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("exponent too large")]
    ExponentOverflow,
    #[error("gauss binomial requires 0 <= k <= n (got n={n}, k={k})")]
    BinomialRange { n: u32, k: u32 },
    #[error("cyclotomic index must be at least 2 (got {0})")]
    CyclotomicIndex(u32),
    #[error("symbol {symbol} is not in the alphabet of {system}")]
    ForeignSymbol { symbol: String, system: String },
    #[error("jet order {found} exceeds the ambient order {max}")]
    JetOrderOverflow { found: u32, max: u32 },
    #[error("jet orders differ ({left} vs {right})")]
    OrderMismatch { left: u32, right: u32 },
    #[error("derivation input must live in order {max_allowed} or below (found {found})")]
    DerivationDomain { found: u32, max_allowed: i64 },
    #[error("expected a bi-homogeneous polynomial, found support of size {0}")]
    NotBihomogeneous(usize),
    #[error("target bi-degree ({0}, {1}) is not in the support")]
    TargetNotInSupport(u32, u32),
    #[error("zero polynomial has no bi-homogeneous part to extract")]
    ZeroInput,
    #[error("Groebner basis budget exhausted after {0} S-polynomial reductions")]
    BudgetExhausted(usize),
    #[error("inverse-determinant degree {found} exceeds the budget {budget}")]
    DinvBudget { found: usize, budget: usize },
    #[error("operation not supported: {0}")]
    Unsupported(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at byte {pos}: {msg}")]
pub struct ParseError {
    pub pos: usize,
    pub msg: String,
}

/// Errors surfaced by the expression and ideal-file front end.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InputError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}
