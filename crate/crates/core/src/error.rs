use thiserror::Error;

/// Errors raised by library operations.
#[derive(Debug, Error)]
pub enum CoxError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unsupported group family: {0}")]
    Unsupported(String),
    #[error("group order {order} exceeds the configured cap {cap}")]
    GroupCapExceeded { order: usize, cap: usize },
    #[error("memory budget exceeded: need about {needed_mb} MB, budget {budget_mb} MB")]
    BudgetExceeded { needed_mb: u64, budget_mb: u64 },
    #[error("subset budget exceeded: {count} subsets, cap {cap}")]
    SubsetCapExceeded { count: u64, cap: u64 },
    #[error("arrangement has {count} hyperplanes, lattice cap is {cap}")]
    LatticeCapExceeded { count: usize, cap: usize },
    #[error("malformed tower: {0}")]
    InvalidTower(String),
    #[error("weight system is not constant on reflecting hyperplanes")]
    NotHyperplaneConstant,
    #[error("regularity check failed: {0}")]
    RegularityFailed(String),
    #[error("non-integer eigenvalue detected: {0}")]
    NonIntegerEigenvalue(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, CoxError>;
