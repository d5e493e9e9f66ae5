//! Work accounting for the exponential-time solvers.
//!
//! A budget combines a deterministic work cap (counted in solver-specific
//! units such as search nodes) with an optional wall-clock deadline. The
//! deadline is only consulted every 4096 ticks to keep the hot loops cheap.
//! With no deadline set, behavior is a pure function of the inputs, which the
//! reproducibility guarantees rely on.

use std::time::Instant;

use crate::error::{EckError, Result};

#[derive(Debug, Clone)]
pub struct WorkBudget {
    work: u64,
    cap: u64,
    deadline: Option<Instant>,
}

impl WorkBudget {
    pub fn new(cap: u64, deadline: Option<Instant>) -> Self {
        WorkBudget { work: 0, cap, deadline }
    }

    /// No work cap and no deadline.
    pub fn unlimited() -> Self {
        WorkBudget::new(u64::MAX, None)
    }

    /// Work units consumed so far.
    pub fn used(&self) -> u64 {
        self.work
    }

    /// Records one unit of work; fails once the cap or deadline is exceeded.
    #[inline]
    pub fn tick(&mut self, what: &str) -> Result<()> {
        self.work += 1;
        if self.work > self.cap {
            return Err(EckError::Budget(format!(
                "{what}: work cap of {} exceeded",
                self.cap
            )));
        }
        if self.work & 0xFFF == 0 {
            if let Some(d) = self.deadline {
                if Instant::now() >= d {
                    return Err(EckError::Budget(format!("{what}: deadline exceeded")));
                }
            }
        }
        Ok(())
    }
}

impl Default for WorkBudget {
    fn default() -> Self {
        WorkBudget::unlimited()
    }
}
