//! Exhaustive solvers and claim checks.

mod cases;
mod claims;
mod gray;
mod nested;
mod report;
mod solve;
mod steiner_suite;
mod subadditive;

pub use cases::{enumerate_cases, CaseGrid, CaseRow};
pub use claims::{
    check_bound, solve_decorated, verify_conjecture, verify_connectivity_bound, verify_gasket_bound,
    verify_hypercube, verify_nested, verify_nested_detailed, SolveMethod,
};
pub use gray::audit_gray_checkpoints;
pub use nested::{nested_solutions_exists, NestedOutcome, Refutation};
pub use report::{Scope, SearchBudget, Status, VerificationReport, Witness};
pub use solve::{exact_profile, exact_profile_decorated, exact_profile_ideals, ExactProfile};
pub use steiner_suite::*;
pub use subadditive::*;
