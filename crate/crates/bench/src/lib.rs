//! Shared fixtures for the benchmarks.

use sierpinski_eip::oracle::SearchBudget;

/// `(n, m)` pairs for the profile builders, smallest first.
pub const PROFILE_SIZES: &[(u32, u32)] = &[(4, 3), (6, 3), (8, 3), (5, 4), (4, 6)];

/// `(n, m)` pairs small enough for a full subset sweep.
pub const SWEEP_SIZES: &[(u32, u32)] = &[(2, 3), (2, 4), (3, 3)];

/// Single-threaded budget, so timings do not depend on the machine's core count.
pub fn serial_budget() -> SearchBudget {
    SearchBudget::default().with_width(1)
}
