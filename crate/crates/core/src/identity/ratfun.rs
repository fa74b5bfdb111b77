use std::fmt;

use serde::{Deserialize, Serialize};

use super::multipoly::{Division, MultiPoly};
use crate::error::{invalid, Result};

/// A quotient `num / den` of sparse polynomials.
///
/// Normalized so the denominator's leading coefficient is 1, and collapsed to
/// a polynomial whenever the denominator divides the numerator exactly.
/// Equality is semantic (cross-multiplication), not structural.
#[derive(Clone)]
pub struct RationalFunction {
    num: MultiPoly,
    den: MultiPoly,
}

impl RationalFunction {
    pub fn new(num: MultiPoly, den: MultiPoly) -> Result<Self> {
        if den.is_zero() {
            return invalid("rational function with zero denominator");
        }
        let mut out = Self { num, den };
        out.normalize();
        Ok(out)
    }

    pub fn from_poly(p: MultiPoly) -> Self {
        Self {
            num: p,
            den: MultiPoly::one(),
        }
    }

    pub fn zero() -> Self {
        Self::from_poly(MultiPoly::zero())
    }

    pub fn num(&self) -> &MultiPoly {
        &self.num
    }

    pub fn den(&self) -> &MultiPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn normalize(&mut self) {
        if self.num.is_zero() {
            self.den = MultiPoly::one();
            return;
        }
        if let Ok(Division::Exact(q)) = self.num.exact_divide(&self.den) {
            self.num = q;
            self.den = MultiPoly::one();
            return;
        }
        let lc = self.den.leading_term().expect("nonzero").1.clone();
        if !lc.is_one() {
            let inv = lc.recip().expect("nonzero");
            self.num = self.num.scale(&inv);
            self.den = self.den.scale(&inv);
        }
    }

    /// Divides numerator and denominator by `factor` as long as both are
    /// exactly divisible.
    pub fn cancel_factor(&self, factor: &MultiPoly) -> Self {
        let mut num = self.num.clone();
        let mut den = self.den.clone();
        loop {
            let qn = num.exact_divide(factor).ok().and_then(Division::exact);
            let qd = den.exact_divide(factor).ok().and_then(Division::exact);
            match (qn, qd) {
                (Some(a), Some(b)) if !b.is_zero() => {
                    num = a;
                    den = b;
                }
                _ => break,
            }
        }
        Self::new(num, den).expect("nonzero denominator")
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.den == other.den {
            return Self::new(&self.num + &other.num, self.den.clone()).expect("nonzero");
        }
        Self::new(
            &(&self.num * &other.den) + &(&other.num * &self.den),
            &self.den * &other.den,
        )
        .expect("nonzero")
    }

    pub fn neg(&self) -> Self {
        Self {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(&self.num * &other.num, &self.den * &other.den).expect("nonzero")
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return invalid("rational function division by zero");
        }
        Self::new(&self.num * &other.den, &self.den * &other.num)
    }

    pub fn pow(&self, exp: u32) -> Self {
        Self::new(self.num.pow(exp), self.den.pow(exp)).expect("nonzero")
    }
}

impl PartialEq for RationalFunction {
    fn eq(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == MultiPoly::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Text form used in reports: numerator and denominator strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalFunctionText {
    pub num: String,
    pub den: String,
}

impl From<&RationalFunction> for RationalFunctionText {
    fn from(r: &RationalFunction) -> Self {
        Self {
            num: r.num.to_string(),
            den: r.den.to_string(),
        }
    }
}

impl Serialize for RationalFunction {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        RationalFunctionText::from(self).serialize(serializer)
    }
}
