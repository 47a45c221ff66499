//! Fixed-point algebras of `Z(D)`, witness elements and the verification
//! suite over the group catalog.

mod checks;
mod fixed_point;
mod instance;
mod report;
mod suite;

pub use checks::{
    check_block_invariants, check_character_bound, check_cyclic_defect, check_defect_zero_complement,
    check_exponent_bound, check_fixed_point_bound, check_frobenius_counts, check_loewy_upper_bound,
    check_modular_group, check_sqrt_scan, check_sufficient_conditions, check_uniserial_center, run_checks,
};
pub use fixed_point::{lambda_of_abelian_type, witness_element, FixedPointAlgebra, WitnessElement, DIRECT_LAMBDA_LIMIT};
pub use instance::{InstanceAnalysis, ROOT_BASE};
pub use report::{
    BlockSummary, CheckCounts, Claim, InstanceReport, RunConfig, Severity, SuiteReport, VerificationReport, Verdict,
};
pub use suite::{analyze_instance, run_instances, run_suite, suite_instances, TOOL_VERSION};
