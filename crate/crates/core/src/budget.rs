//! Enumeration budget guard.
//!
//! Several operations enumerate spaces of size `(n!)^(k-1)` or worse. A
//! [`Budget`] converts a runaway request into a clean error before any work
//! is done, by comparing a cost estimate against a configured step limit.

use thiserror::Error;

/// Upper bound on enumeration steps a single operation may take.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    steps: u64,
}

pub const DEFAULT_BUDGET_STEPS: u64 = 100_000_000;

impl Default for Budget {
    fn default() -> Self {
        Budget::new(DEFAULT_BUDGET_STEPS)
    }
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
#[error("enumeration budget exceeded: {what} needs {required} steps, budget is {allowed}")]
pub struct BudgetError {
    pub what: String,
    pub required: u128,
    pub allowed: u64,
}

impl Budget {
    /// `steps` must be positive.
    pub fn new(steps: u64) -> Self {
        assert!(steps > 0, "budget must be positive");
        Budget { steps }
    }

    pub fn steps(&self) -> u64 {
        self.steps
    }

    /// Checks an up-front cost estimate against the limit.
    pub fn check(&self, required: u128, what: &str) -> Result<(), BudgetError> {
        if required > self.steps as u128 {
            return Err(BudgetError {
                what: what.to_string(),
                required,
                allowed: self.steps,
            });
        }
        Ok(())
    }
}

/// `n!` as a `u128`; panics for `n > 33` where it would overflow.
pub fn factorial(n: usize) -> u128 {
    assert!(n <= 33, "factorial({n}) does not fit in u128");
    (1..=n as u128).product()
}

/// `(n!)^e` saturating at `u128::MAX`, the usual tuple-enumeration cost.
pub fn factorial_power(n: usize, e: u32) -> u128 {
    let f = factorial(n);
    let mut acc: u128 = 1;
    for _ in 0..e {
        acc = acc.saturating_mul(f);
    }
    acc
}
