//! Numeric counterpart evidence for real solutions, reported next to the
//! syntactic term-match verdict for the same exponent.
//!
//! Nothing here decides whether a proof is right; a report records what the
//! interval computation and the symbolic comparison each found.

use std::fmt::Write;

use rayon::prelude::*;
use serde::Serialize;

use crate::arith::{ExactRational, RationalInterval};
use crate::error::{invalid, Error, Result};
use crate::identity::term_match_report;
use crate::param::{from_params, ParamTriple};
use crate::poly::{
    build_flt_poly, flt_poly_in_h, isolate_positive_roots, rational_root_test, refine,
    RootEnclosure,
};

pub use crate::poly::DEFAULT_PRECISION_BITS;

/// Default `h1` sample set: `3/2, 2, 5/2, 3`.
pub fn default_samples() -> Vec<ExactRational> {
    [(3, 2), (2, 1), (5, 2), (3, 1)]
        .into_iter()
        .map(|(n, d)| ExactRational::new(n, d).expect("nonzero"))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AuditReport {
    pub n: u32,
    pub h1: ExactRational,
    /// The unique positive root of `P_n(., h1)`.
    pub g1: RootEnclosure,
    /// `1/(h1 - 1)`.
    pub g2: ExactRational,
    /// `1 + 1/g1`.
    pub h2: RationalInterval,
    /// `P_n(g2, .)` evaluated over `h2`.
    pub counterpart_residual: RationalInterval,
    /// Root of `P_n(g2, .)` in `h` whose enclosure meets `h2`, if any.
    pub counterpart_root: Option<RootEnclosure>,
    pub counterpart_found: bool,
    /// `a^n + b^n - c^n` for `(a, b, c) = (g1 h1, g1 + 1, g1 h1 + 1)`.
    pub fermat_residual: RationalInterval,
    pub syntactic_match: bool,
    pub precision_bits: u32,
}

fn check_inputs(n: u32, h1: &ExactRational) -> Result<()> {
    if n < 2 {
        return invalid(format!("exponent n = {n}, need n >= 2"));
    }
    if *h1 <= 1 {
        return invalid(format!("h1 = {h1}, need h1 > 1"));
    }
    Ok(())
}

/// Isolates and refines the unique positive root of `P_n(., h1)`.
///
/// A rational root is returned as an exact point enclosure.
pub fn positive_root(n: u32, h1: &ExactRational, precision_bits: u32) -> Result<RootEnclosure> {
    check_inputs(n, h1)?;
    let p = build_flt_poly(n, h1)?;
    let roots = isolate_positive_roots(&p)?;
    match roots.as_slice() {
        [only] => {
            let exact = rational_root_test(&p)?
                .into_iter()
                .find(|r| only.interval.contains(r));
            match exact {
                Some(r) => Ok(RootEnclosure {
                    interval: RationalInterval::point(r),
                    sign_lo: 0,
                    sign_hi: 0,
                    multiplicity_hint: only.multiplicity_hint,
                }),
                None => refine(&p, only, precision_bits),
            }
        }
        _ => Err(Error::InternalConsistency(format!(
            "P_{n}(., {h1}) has {} positive roots, expected exactly one",
            roots.len()
        ))),
    }
}

fn fermat_residual_of(n: u32, h1: &ExactRational, g1: &RationalInterval) -> RationalInterval {
    let params = ParamTriple::new(
        RationalInterval::point(ExactRational::one()),
        g1.clone(),
        RationalInterval::point(h1.clone()),
    );
    from_params(&params).fermat_gap(n)
}

/// Interval value of `a^n + b^n - c^n` at the real solution reconstructed
/// from the positive root `g1` with `d = 1`.
pub fn fermat_residual_check(
    n: u32,
    h1: &ExactRational,
    precision_bits: u32,
) -> Result<RationalInterval> {
    let g1 = positive_root(n, h1, precision_bits)?;
    Ok(fermat_residual_of(n, h1, &g1.interval))
}

pub fn counterpart_existence_audit(
    n: u32,
    h1: &ExactRational,
    precision_bits: u32,
) -> Result<AuditReport> {
    let syntactic_match = term_match_report(n)?.all_match;
    audit_with_syntactic(n, h1, precision_bits, syntactic_match)
}

fn audit_with_syntactic(
    n: u32,
    h1: &ExactRational,
    precision_bits: u32,
    syntactic_match: bool,
) -> Result<AuditReport> {
    let g1 = positive_root(n, h1, precision_bits)?;
    let one = ExactRational::one();
    let h2 = g1.interval.recip()?.add_scalar(&one);
    let g2 = (h1 - &one).recip()?;

    let in_h = flt_poly_in_h(n, &g2)?;
    let counterpart_residual = in_h.eval_interval(&h2);
    let mut counterpart_root = None;
    for e in isolate_positive_roots(&in_h)? {
        let e = refine(&in_h, &e, precision_bits)?;
        if e.interval.overlaps(&h2) {
            counterpart_root = Some(e);
            break;
        }
    }
    let counterpart_found = counterpart_residual.contains_zero() && counterpart_root.is_some();

    Ok(AuditReport {
        n,
        h1: h1.clone(),
        fermat_residual: fermat_residual_of(n, h1, &g1.interval),
        g1,
        g2,
        h2,
        counterpart_residual,
        counterpart_root,
        counterpart_found,
        syntactic_match,
        precision_bits,
    })
}

impl AuditReport {
    /// `g1 (h2 - 1)` contains 1 and `g2 (h1 - 1) = 1` exactly.
    pub fn swap_relations(&self) -> [bool; 2] {
        let one = ExactRational::one();
        let first = self
            .g1
            .interval
            .mul(&self.h2.add_scalar(&-&one))
            .contains(&one);
        let second = &self.g2 * &(&self.h1 - &one) == one;
        [first, second]
    }

    pub fn render_text(&self) -> String {
        let mut s = String::new();
        let iv = |x: &RationalInterval| {
            format!("[{}, {}]", x.lo().to_decimal(12), x.hi().to_decimal(12))
        };
        let _ = writeln!(
            s,
            "n = {}, h1 = {}, precision = {} bits",
            self.n, self.h1, self.precision_bits
        );
        let _ = writeln!(s, "  g1 in {}", iv(&self.g1.interval));
        let _ = writeln!(s, "  g2 = {}", self.g2);
        let _ = writeln!(s, "  h2 in {}", iv(&self.h2));
        let _ = writeln!(
            s,
            "  counterpart residual contains 0: {}",
            self.counterpart_residual.contains_zero()
        );
        let _ = writeln!(
            s,
            "  numeric counterpart evidence: {}",
            self.counterpart_found
        );
        let _ = writeln!(
            s,
            "  fermat residual contains 0: {}",
            self.fermat_residual.contains_zero()
        );
        let _ = writeln!(s, "  syntactic term match: {}", self.syntactic_match);
        s
    }
}

/// Syntactic and numeric verdicts for one exponent, side by side.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClaimComparison {
    pub n: u32,
    pub syntactic_match: bool,
    pub samples: Vec<AuditReport>,
    pub precision_bits: u32,
}

impl ClaimComparison {
    pub fn counterpart_found_everywhere(&self) -> bool {
        self.samples.iter().all(|r| r.counterpart_found)
    }

    pub fn render_text(&self) -> String {
        let mut s = format!(
            "n = {}: syntactic term match = {}, numeric counterpart evidence at all samples = {}\n",
            self.n,
            self.syntactic_match,
            self.counterpart_found_everywhere()
        );
        for r in &self.samples {
            s.push_str(&r.render_text());
        }
        s
    }
}

pub fn claim_comparison(
    n: u32,
    sample_h1: &[ExactRational],
    precision_bits: u32,
) -> Result<ClaimComparison> {
    for h1 in sample_h1 {
        check_inputs(n, h1)?;
    }
    let syntactic_match = term_match_report(n)?.all_match;
    let samples = sample_h1
        .par_iter()
        .map(|h1| audit_with_syntactic(n, h1, precision_bits, syntactic_match))
        .collect::<Result<Vec<_>>>()?;
    Ok(ClaimComparison {
        n,
        syntactic_match,
        samples,
        precision_bits,
    })
}
