//! Univariate polynomials and the degree `n - 1` family `P_n(g, h)`.

mod flt;
mod intpoly;
mod rational_roots;
mod roots;
mod unipoly;

pub use flt::{build_flt_poly, eval_flt, flt_poly_in_h};
pub use rational_roots::{primitive_integer_coeffs, rational_root_test, simplest_rational_in};
pub use roots::{
    cauchy_bound, isolate_positive_roots, isolate_real_roots, refine, sturm_count, RootEnclosure,
    SturmSequence,
};
pub use unipoly::UniPoly;

/// Default refinement precision in bits.
pub const DEFAULT_PRECISION_BITS: u32 = 128;
