//! Real root counting and isolation by Sturm sequences, with bisection
//! refinement over exact rational endpoints.

use serde::{Deserialize, Serialize};

use super::intpoly::IntPoly;
use super::unipoly::{count_variations, UniPoly};
use crate::arith::{ExactRational, RationalInterval};
use crate::error::{invalid, Error, Result};

/// An interval holding exactly one distinct real root of a polynomial.
///
/// A degenerate interval `[r, r]` marks an exactly located (rational) root.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootEnclosure {
    pub interval: RationalInterval,
    pub sign_lo: i8,
    pub sign_hi: i8,
    pub multiplicity_hint: u32,
}

impl RootEnclosure {
    pub fn is_exact(&self) -> bool {
        self.interval.is_point()
    }

    pub fn width(&self) -> ExactRational {
        self.interval.width()
    }
}

/// Sturm sequence `p0 = p, p1 = p', p(k+1) = -rem(p(k-1), p(k))`.
///
/// Members are kept as primitive integer polynomials; each differs from the
/// textbook member by a positive factor, which leaves every sign unchanged.
#[derive(Clone, Debug)]
pub struct SturmSequence {
    seq: Vec<IntPoly>,
}

impl SturmSequence {
    pub fn new(p: &UniPoly) -> Result<Self> {
        if p.is_zero() {
            return invalid("Sturm sequence of the zero polynomial");
        }
        Ok(Self::from_int(IntPoly::from_uni(p)))
    }

    fn from_int(p: IntPoly) -> Self {
        let mut seq = vec![p];
        let d = seq[0].derivative();
        if !d.is_zero() {
            seq.push(d);
            loop {
                let n = seq.len();
                let next = seq[n - 2].neg_rem(&seq[n - 1]);
                if next.is_zero() {
                    break;
                }
                seq.push(next);
            }
        }
        Self { seq }
    }

    pub fn len(&self) -> usize {
        self.seq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seq.is_empty()
    }

    /// The sequence members as rational polynomials.
    pub fn polys(&self) -> Vec<UniPoly> {
        self.seq.iter().map(IntPoly::to_uni).collect()
    }

    fn first_sign_at(&self, x: &ExactRational) -> i8 {
        self.seq[0].sign_at(x)
    }

    pub fn variations_at(&self, x: &ExactRational) -> usize {
        count_variations(self.seq.iter().map(|p| p.sign_at(x)))
    }

    /// Distinct roots in the half-open interval `(a, b]`. Valid when the
    /// first member is squarefree, including when `a` or `b` is a root.
    pub fn count_half_open(&self, a: &ExactRational, b: &ExactRational) -> usize {
        self.variations_at(a).saturating_sub(self.variations_at(b))
    }

    /// Distinct roots strictly inside `(a, b)`.
    pub fn count_open(&self, a: &ExactRational, b: &ExactRational) -> usize {
        let n = self.count_half_open(a, b);
        if a < b && self.first_sign_at(b) == 0 {
            n - 1
        } else {
            n
        }
    }
}

fn squarefree_sturm(p: &UniPoly) -> Result<SturmSequence> {
    if p.is_zero() {
        return invalid("Sturm sequence of the zero polynomial");
    }
    Ok(SturmSequence::from_int(
        IntPoly::from_uni(p).squarefree_part(),
    ))
}

/// Number of distinct real roots of `p` strictly inside `interval`.
///
/// Roots on the endpoints are excluded exactly rather than by perturbing the
/// endpoints.
pub fn sturm_count(p: &UniPoly, interval: &RationalInterval) -> Result<usize> {
    if p.is_zero() {
        return invalid("sturm_count of the zero polynomial");
    }
    let seq = squarefree_sturm(p)?;
    Ok(seq.count_open(interval.lo(), interval.hi()))
}

/// Cauchy bound: every complex root has modulus below `1 + max |a_i / a_n|`.
pub fn cauchy_bound(p: &UniPoly) -> ExactRational {
    let lead = p.leading().abs();
    let max = p.coeffs()[..p.degree()]
        .iter()
        .map(|c| c.abs() / &lead)
        .max()
        .unwrap_or_else(ExactRational::zero);
    max + ExactRational::one()
}

/// Per-polynomial data for isolation: the squarefree Sturm sequence and the
/// chain `g(k+1) = gcd(g(k), g(k)')` used to estimate root multiplicity.
struct Isolator {
    p: IntPoly,
    sturm: SturmSequence,
    multiplicity_chain: Vec<SturmSequence>,
}

impl Isolator {
    fn new(p: &UniPoly) -> Result<Self> {
        if p.is_zero() {
            return invalid("root isolation of the zero polynomial");
        }
        let p = IntPoly::from_uni(p);
        let sturm = SturmSequence::from_int(p.squarefree_part());
        let mut multiplicity_chain = Vec::new();
        let mut g = p.gcd(&p.derivative());
        while !g.is_constant() {
            multiplicity_chain.push(SturmSequence::from_int(g.squarefree_part()));
            g = g.gcd(&g.derivative());
        }
        Ok(Self {
            p,
            sturm,
            multiplicity_chain,
        })
    }

    fn multiplicity(&self, iv: &RationalInterval) -> u32 {
        let has_root = |s: &SturmSequence| {
            if iv.is_point() {
                s.first_sign_at(iv.lo()) == 0
            } else {
                s.count_open(iv.lo(), iv.hi()) > 0
            }
        };
        1 + self
            .multiplicity_chain
            .iter()
            .take_while(|s| has_root(s))
            .count() as u32
    }

    fn enclosure(&self, iv: RationalInterval) -> RootEnclosure {
        RootEnclosure {
            sign_lo: self.p.sign_at(iv.lo()),
            sign_hi: self.p.sign_at(iv.hi()),
            multiplicity_hint: self.multiplicity(&iv),
            interval: iv,
        }
    }

    /// Isolates the roots inside the open interval `(lo, hi)`, ascending.
    fn isolate(&self, lo: ExactRational, hi: ExactRational, out: &mut Vec<RootEnclosure>) {
        let mut stack = vec![(lo, hi)];
        // Depth-first with the right half pushed first keeps output ascending.
        // Enclosures whose endpoint is itself a root are split further.
        while let Some((a, b)) = stack.pop() {
            if a == b {
                // Exact root found at an earlier split point.
                out.push(self.enclosure(RationalInterval::point(a)));
                continue;
            }
            let clean_ends = self.sturm.first_sign_at(&a) != 0 && self.sturm.first_sign_at(&b) != 0;
            match self.sturm.count_open(&a, &b) {
                0 => {}
                1 if clean_ends => {
                    out.push(self.enclosure(RationalInterval::new(a, b).expect("a < b")))
                }
                _ => {
                    let mid = a.midpoint(&b);
                    stack.push((mid.clone(), b));
                    if self.sturm.first_sign_at(&mid) == 0 {
                        stack.push((mid.clone(), mid.clone()));
                    }
                    stack.push((a, mid));
                }
            }
        }
    }
}

/// Isolates every real root of `p`, ascending.
pub fn isolate_real_roots(p: &UniPoly) -> Result<Vec<RootEnclosure>> {
    let iso = Isolator::new(p)?;
    let mut out = Vec::new();
    if p.is_constant() {
        return Ok(out);
    }
    let b = cauchy_bound(p);
    let neg_b = -&b;
    iso.isolate(neg_b, b, &mut out);
    Ok(out)
}

/// Isolates the positive real roots of `p`, ascending.
pub fn isolate_positive_roots(p: &UniPoly) -> Result<Vec<RootEnclosure>> {
    let iso = Isolator::new(p)?;
    let mut out = Vec::new();
    if p.is_constant() {
        return Ok(out);
    }
    iso.isolate(ExactRational::zero(), cauchy_bound(p), &mut out);
    Ok(out)
}

/// Bisects `e` until its width is at most `2^(-precision_bits)`.
///
/// Bisection is deterministic, so refining the same enclosure to more bits
/// yields a nested interval.
pub fn refine(p: &UniPoly, e: &RootEnclosure, precision_bits: u32) -> Result<RootEnclosure> {
    if p.is_zero() {
        return invalid("refine on the zero polynomial");
    }
    if e.is_exact() {
        if p.sign_at(e.interval.lo()) != 0 {
            return Err(Error::InconsistentEnclosure(format!(
                "{} is not a root",
                e.interval.lo()
            )));
        }
        return Ok(e.clone());
    }
    let ip = IntPoly::from_uni(p);
    let mut lo = e.interval.lo().clone();
    let mut hi = e.interval.hi().clone();
    let s_lo = ip.sign_at(&lo);
    let s_hi = ip.sign_at(&hi);
    let target = ExactRational::pow2_neg(precision_bits);
    let sign_change = s_lo != 0 && s_hi != 0 && s_lo != s_hi;

    if e.multiplicity_hint <= 1 && !sign_change {
        return Err(Error::InconsistentEnclosure(format!(
            "no sign change over {} for a simple root",
            e.interval
        )));
    }

    if sign_change {
        while &hi - &lo > target {
            let mid = lo.midpoint(&hi);
            let s = ip.sign_at(&mid);
            if s == 0 {
                return Ok(exact_enclosure(mid, e.multiplicity_hint));
            }
            if s == s_lo {
                lo = mid;
            } else {
                hi = mid;
            }
        }
    } else {
        // Even multiplicity: steer by Sturm counts on the squarefree part.
        let seq = squarefree_sturm(p)?;
        if seq.count_open(&lo, &hi) != 1 {
            return Err(Error::InconsistentEnclosure(format!(
                "{} does not hold exactly one root",
                e.interval
            )));
        }
        while &hi - &lo > target {
            let mid = lo.midpoint(&hi);
            if ip.sign_at(&mid) == 0 {
                return Ok(exact_enclosure(mid, e.multiplicity_hint));
            }
            if seq.count_open(&lo, &mid) == 1 {
                hi = mid;
            } else {
                lo = mid;
            }
        }
    }
    Ok(RootEnclosure {
        sign_lo: ip.sign_at(&lo),
        sign_hi: ip.sign_at(&hi),
        multiplicity_hint: e.multiplicity_hint,
        interval: RationalInterval::new(lo, hi)?,
    })
}

fn exact_enclosure(r: ExactRational, multiplicity_hint: u32) -> RootEnclosure {
    RootEnclosure {
        interval: RationalInterval::point(r),
        sign_lo: 0,
        sign_hi: 0,
        multiplicity_hint,
    }
}
