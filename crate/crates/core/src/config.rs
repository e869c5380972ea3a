//! Resource limits, read from the environment with documented defaults.

/// Default cap on enumerated group orders.
pub const DEFAULT_GROUP_CAP: usize = 50_000;
/// Default memory budget for convolution states, in MiB.
pub const DEFAULT_BUDGET_MB: u64 = 2048;
/// Default cap on the number of subsets visited by the Shephard sum.
pub const DEFAULT_SUBSET_CAP: u64 = 10_000_000;

/// Limits applied by the enumerating operations.
#[derive(Clone, Debug)]
pub struct Limits {
    pub group_cap: usize,
    pub budget_mb: u64,
    pub subset_cap: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            group_cap: DEFAULT_GROUP_CAP,
            budget_mb: DEFAULT_BUDGET_MB,
            subset_cap: DEFAULT_SUBSET_CAP,
        }
    }
}

impl Limits {
    /// Defaults overridden by `COXLAB_GROUP_CAP` and `COXLAB_BUDGET_MB` when set.
    pub fn from_env() -> Self {
        let mut l = Limits::default();
        if let Some(v) = std::env::var("COXLAB_GROUP_CAP").ok().and_then(|s| s.parse().ok()) {
            l.group_cap = v;
        }
        if let Some(v) = std::env::var("COXLAB_BUDGET_MB").ok().and_then(|s| s.parse().ok()) {
            l.budget_mb = v;
        }
        l
    }
}
