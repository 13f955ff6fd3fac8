//! Process-wide counters for the Groebner kernel.
//!
//! The counters aggregate across all computations since the last
//! [`reset`]; the bench command resets them around each timed run.

use std::sync::atomic::{AtomicU64, Ordering};

static S_PAIRS: AtomicU64 = AtomicU64::new(0);
static REDUCTION_STEPS: AtomicU64 = AtomicU64::new(0);

/// Snapshot of the kernel counters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KernelStats {
    /// S-polynomials actually reduced (pairs skipped by the Buchberger
    /// criteria are not counted).
    pub s_pairs: u64,
    /// Single division steps performed across all normal forms.
    pub reduction_steps: u64,
}

pub fn reset() {
    S_PAIRS.store(0, Ordering::Relaxed);
    REDUCTION_STEPS.store(0, Ordering::Relaxed);
}

pub fn snapshot() -> KernelStats {
    KernelStats {
        s_pairs: S_PAIRS.load(Ordering::Relaxed),
        reduction_steps: REDUCTION_STEPS.load(Ordering::Relaxed),
    }
}

pub(crate) fn count_s_pair() {
    S_PAIRS.fetch_add(1, Ordering::Relaxed);
}

pub(crate) fn count_reduction_step() {
    REDUCTION_STEPS.fetch_add(1, Ordering::Relaxed);
}
