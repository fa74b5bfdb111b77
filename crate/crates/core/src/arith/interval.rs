use std::fmt;

use serde::{Deserialize, Serialize};

use super::ExactRational;
use crate::error::{invalid, Result};

/// A closed interval `[lo, hi]` with exact rational endpoints.
///
/// Every operation returns an interval containing all pointwise results.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RationalInterval {
    lo: ExactRational,
    hi: ExactRational,
}

impl RationalInterval {
    pub fn new(lo: ExactRational, hi: ExactRational) -> Result<Self> {
        if lo > hi {
            return invalid(format!("interval [{lo}, {hi}] has lo > hi"));
        }
        Ok(Self { lo, hi })
    }

    pub fn point(x: ExactRational) -> Self {
        Self {
            lo: x.clone(),
            hi: x,
        }
    }

    pub fn lo(&self) -> &ExactRational {
        &self.lo
    }

    pub fn hi(&self) -> &ExactRational {
        &self.hi
    }

    pub fn width(&self) -> ExactRational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> ExactRational {
        self.lo.midpoint(&self.hi)
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, x: &ExactRational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    pub fn contains_interval(&self, other: &Self) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    /// Closed intervals sharing at least one point.
    pub fn overlaps(&self, other: &Self) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    pub fn intersect(&self, other: &Self) -> Option<Self> {
        let lo = self.lo.clone().max(other.lo.clone());
        let hi = self.hi.clone().min(other.hi.clone());
        (lo <= hi).then_some(Self { lo, hi })
    }

    pub fn is_strictly_positive(&self) -> bool {
        self.lo.is_positive()
    }

    pub fn add(&self, other: &Self) -> Self {
        Self {
            lo: &self.lo + &other.lo,
            hi: &self.hi + &other.hi,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self {
            lo: &self.lo - &other.hi,
            hi: &self.hi - &other.lo,
        }
    }

    pub fn neg(&self) -> Self {
        Self {
            lo: -&self.hi,
            hi: -&self.lo,
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let products = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let lo = products.iter().min().expect("nonempty").clone();
        let hi = products.iter().max().expect("nonempty").clone();
        Self { lo, hi }
    }

    pub fn scale(&self, k: &ExactRational) -> Self {
        let a = &self.lo * k;
        let b = &self.hi * k;
        if k.is_negative() {
            Self { lo: b, hi: a }
        } else {
            Self { lo: a, hi: b }
        }
    }

    pub fn add_scalar(&self, k: &ExactRational) -> Self {
        Self {
            lo: &self.lo + k,
            hi: &self.hi + k,
        }
    }

    /// `1/x` for an interval not containing zero.
    pub fn recip(&self) -> Result<Self> {
        if self.contains_zero() {
            return invalid(format!("reciprocal of {self}, which contains zero"));
        }
        Ok(Self {
            lo: self.hi.recip()?,
            hi: self.lo.recip()?,
        })
    }

    /// Integer power by sign-case analysis, so `[-1, 1]^2 = [0, 1]`.
    pub fn powu(&self, exp: u32) -> Self {
        if exp == 0 {
            return Self::point(ExactRational::one());
        }
        let lo_p = self.lo.powu(exp);
        let hi_p = self.hi.powu(exp);
        if exp % 2 == 1 || !self.lo.is_negative() {
            // Monotone increasing on the whole interval.
            Self { lo: lo_p, hi: hi_p }
        } else if !self.hi.is_positive() {
            Self { lo: hi_p, hi: lo_p }
        } else {
            Self {
                lo: ExactRational::zero(),
                hi: lo_p.max(hi_p),
            }
        }
    }
}

impl From<ExactRational> for RationalInterval {
    fn from(x: ExactRational) -> Self {
        Self::point(x)
    }
}

impl fmt::Display for RationalInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

impl fmt::Debug for RationalInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::q;
    use proptest::prelude::*;

    fn iv(a: ExactRational, b: ExactRational) -> RationalInterval {
        RationalInterval::new(a, b).unwrap()
    }

    #[test]
    fn examples() {
        let x = iv(q(1, 2), q(1, 1));
        let y = iv(q(2, 1), q(3, 1));
        assert_eq!(x.mul(&y), iv(q(1, 1), q(3, 1)));
        assert_eq!(iv(q(-1, 1), q(1, 1)).powu(2), iv(q(0, 1), q(1, 1)));
        assert_eq!(iv(q(9, 4), q(5, 2)).width(), q(1, 4));
    }

    #[test]
    fn power_sign_cases() {
        assert_eq!(iv(q(-3, 1), q(-2, 1)).powu(2), iv(q(4, 1), q(9, 1)));
        assert_eq!(iv(q(-3, 1), q(-2, 1)).powu(3), iv(q(-27, 1), q(-8, 1)));
        assert_eq!(iv(q(-1, 1), q(2, 1)).powu(2), iv(q(0, 1), q(4, 1)));
        assert_eq!(iv(q(-2, 1), q(1, 1)).powu(3), iv(q(-8, 1), q(1, 1)));
        assert_eq!(
            iv(q(-2, 1), q(1, 1)).powu(0),
            RationalInterval::point(q(1, 1))
        );
    }

    #[test]
    fn rejects_reversed_and_zero_recip() {
        assert!(RationalInterval::new(q(2, 1), q(1, 1)).is_err());
        assert!(iv(q(-1, 1), q(1, 1)).recip().is_err());
        assert_eq!(iv(q(2, 1), q(4, 1)).recip().unwrap(), iv(q(1, 4), q(1, 2)));
    }

    #[test]
    fn overlap_and_intersection() {
        let a = iv(q(0, 1), q(1, 1));
        let b = iv(q(1, 1), q(2, 1));
        let c = iv(q(3, 1), q(4, 1));
        assert!(a.overlaps(&b));
        assert_eq!(a.intersect(&b), Some(RationalInterval::point(q(1, 1))));
        assert!(!a.overlaps(&c));
        assert_eq!(a.intersect(&c), None);
    }

    fn arb_interval() -> impl Strategy<Value = (RationalInterval, ExactRational)> {
        (-200i64..200, 1i64..50, 0i64..400, 0i64..=1000).prop_map(|(n, d, w, t)| {
            let lo = q(n, d);
            let hi = &lo + &q(w, d);
            // t/1000 of the way from lo to hi
            let x = &lo + &((&hi - &lo) * q(t, 1000));
            (iv(lo, hi), x)
        })
    }

    proptest! {
        // E(x) = (x*y - z)^3 + y^2 * x, checked pointwise against E over intervals.
        #[test]
        fn containment((xi, x) in arb_interval(), (yi, y) in arb_interval(), (zi, z) in arb_interval()) {
            let point = (&x * &y - &z).powu(3) + y.powu(2) * &x;
            let enclosure = xi.mul(&yi).sub(&zi).powu(3).add(&yi.powu(2).mul(&xi));
            prop_assert!(enclosure.contains(&point));
            prop_assert!(xi.neg().contains(&-&x));
            if !xi.contains_zero() {
                prop_assert!(xi.recip().unwrap().contains(&x.recip().unwrap()));
            }
        }
    }
}
