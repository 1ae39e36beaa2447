use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("dimension mismatch: expected (n={expected_n}, m={expected_m}), got (n={got_n}, m={got_m})")]
    DimensionMismatch {
        expected_n: u32,
        expected_m: u32,
        got_n: u32,
        got_m: u32,
    },

    #[error("arithmetic overflow computing {0}")]
    Overflow(String),

    #[error("budget exceeded: {what} needs {needed}, limit is {limit}{hint}")]
    BudgetExceeded {
        what: String,
        needed: u64,
        limit: u64,
        /// Number of items produced before the limit was hit.
        partial: u64,
        hint: String,
    },

    /// An invariant that the theory guarantees was observed to fail.
    #[error("defect: {0}")]
    Defect(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn param(msg: impl Into<String>) -> Self {
        Error::Parameter(msg.into())
    }

    pub(crate) fn budget(what: impl Into<String>, needed: u64, limit: u64, partial: u64) -> Self {
        Error::BudgetExceeded {
            what: what.into(),
            needed,
            limit,
            partial,
            hint: String::new(),
        }
    }
}
