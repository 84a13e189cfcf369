use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("interval [{lo}, {hi}] does not bracket a sign change")]
    BracketInvalid { lo: String, hi: String },

    #[error("invalid order: requires m > n (got m = {m}, n = {n})")]
    InvalidOrder { m: u64, n: u64 },

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("truncation {k} too small: must exceed n + m = {offset}")]
    TruncationTooSmall { k: usize, offset: usize },

    #[error("exact evaluation requires finite rational parameters: {0}")]
    Mode(String),

    #[error("window configuration violates the margin inequality: {0}")]
    ConfigViolatesEpsdef(String),

    #[error("budget exhausted: {0}")]
    BudgetExhausted(String),

    #[error("quartic coefficient {name} is not positive for (m, n) = ({m}, {n})")]
    CoefficientSign { name: &'static str, m: u64, n: u64 },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
