use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::roots::{isolate_real_roots, refine};
use super::UniPoly;
use crate::arith::ExactRational;
use crate::error::{invalid, Result};

/// Scales `p` to a primitive integer polynomial with the same roots.
pub fn primitive_integer_coeffs(p: &UniPoly) -> Vec<BigInt> {
    let lcm = p
        .coeffs()
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = p
        .coeffs()
        .iter()
        .map(|c| c.numer() * (&lcm / c.denom()))
        .collect();
    let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if content.is_zero() {
        return ints;
    }
    ints.into_iter().map(|c| c / &content).collect()
}

/// The fraction with the smallest denominator in `[lo, hi]`.
pub fn simplest_rational_in(lo: &ExactRational, hi: &ExactRational) -> ExactRational {
    debug_assert!(lo <= hi);
    if !lo.is_positive() && !hi.is_negative() {
        return ExactRational::zero();
    }
    if hi.is_negative() {
        return -simplest_rational_in(&-hi, &-lo);
    }
    let fl = ExactRational::from(lo.floor());
    if &fl == lo {
        return fl;
    }
    let ceil = &fl + &ExactRational::one();
    if &ceil <= hi {
        return ceil;
    }
    // lo and hi share the integer part; recurse on reciprocals of the tails.
    let inner_lo = (hi - &fl).recip().expect("hi > fl");
    let inner_hi = (lo - &fl).recip().expect("lo > fl");
    fl + simplest_rational_in(&inner_lo, &inner_hi)
        .recip()
        .expect("positive")
}

/// Every rational root of `p`, ascending and without repetition.
///
/// By the rational root theorem a root `r/s` in lowest terms of the cleared
/// integer polynomial has `s | a_n` and `r | a_0`. Instead of enumerating
/// divisors of possibly huge coefficients, each real root is isolated and
/// narrowed below `1/a_n^2`, which leaves room for at most one fraction with
/// denominator dividing `a_n`: the simplest fraction in the enclosure. That
/// candidate is checked against both divisibility conditions and then by
/// exact evaluation.
pub fn rational_root_test(p: &UniPoly) -> Result<Vec<ExactRational>> {
    if p.is_zero() {
        return invalid("rational_root_test of the zero polynomial");
    }
    let mut ints = primitive_integer_coeffs(p);
    let mut roots = Vec::new();
    if ints[0].is_zero() {
        roots.push(ExactRational::zero());
        let k = ints.iter().take_while(|c| c.is_zero()).count();
        ints.drain(..k);
    }
    if ints.len() > 1 {
        let q = UniPoly::new(ints.iter().cloned().map(ExactRational::from).collect());
        let lead = ints.last().expect("nonempty").abs();
        let constant = ints[0].abs();
        let bits = 2 * lead.bits() as u32 + 2;
        for enclosure in isolate_real_roots(&q)? {
            let narrowed = refine(&q, &enclosure, bits)?;
            let candidate = simplest_rational_in(narrowed.interval.lo(), narrowed.interval.hi());
            // zero was split off above
            if candidate.is_zero() {
                continue;
            }
            let divides =
                (&lead % candidate.denom()).is_zero() && (&constant % candidate.numer()).is_zero();
            if divides && q.eval(&candidate).is_zero() {
                roots.push(candidate);
            }
        }
    }
    roots.sort();
    roots.dedup();
    Ok(roots)
}
