//! Sparse multivariate polynomials, rational functions, and the symbolic
//! derivation checks built on them.

mod derivation;
mod multipoly;
mod ratfun;

pub use derivation::{
    counterpart_equation_terms, cubic_counterpart_relation, duality_lhs, expanded_identity,
    fermat_gap, first_equation_terms, flt_poly_symbolic, geometric_sum, operator_step,
    operator_target_terms, substituted_terms, term_match_report, verify_duality,
    verify_expansion_identity, verify_reduction_identity, vieta_second_root_check,
    vieta_sum_condition, DualityOutcome, TermMatchReport, VietaCheck,
};
pub use multipoly::{Division, Monomial, MultiPoly, Var};
pub use ratfun::{RationalFunction, RationalFunctionText};
