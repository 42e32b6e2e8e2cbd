//! Jacobian dual matrices and the instance checks built on them.

pub mod checks;
pub mod dual;
pub mod identities;

pub use checks::{
    check_linear_resolution_conjecture, check_radical_eq, check_saturation_eq, check_truncation_conjecture,
    corollary_membership_check, lemma_identities_check, Border, ClauseResults, SubmatrixContext, Verdict,
};
pub use dual::{
    build_jacobian_dual, check_hypotheses, check_m_primary, maximal_minors, subsets, target_ring, Hypotheses, JacobianDual,
    Minors,
};
