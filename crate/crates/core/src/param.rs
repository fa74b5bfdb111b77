//! The `(a, b, c) <-> (d, g, h)` maps and the counterpart transformation
//! obtained by swapping `a` and `b`.
//!
//! Everything is generic over [`Scalar`] so the same formulas run on exact
//! rationals and on interval enclosures of real roots.

use std::fmt::Debug;

use serde::{Deserialize, Serialize};

use crate::arith::{ExactRational, RationalInterval};
use crate::error::{invalid, Result};
use crate::poly::eval_flt;

/// Number-like values the parametrization formulas run on.
pub trait Scalar: Clone + Debug {
    fn from_rational(x: ExactRational) -> Self;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn recip(&self) -> Result<Self>;
    fn powu(&self, exp: u32) -> Self;
    /// Certainly greater than `x`.
    fn exceeds(&self, x: &ExactRational) -> bool;
    /// Equal for exact values; overlapping for enclosures.
    fn agrees(&self, other: &Self) -> bool;
}

impl Scalar for ExactRational {
    fn from_rational(x: ExactRational) -> Self {
        x
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn recip(&self) -> Result<Self> {
        ExactRational::recip(self)
    }
    fn powu(&self, exp: u32) -> Self {
        ExactRational::powu(self, exp)
    }
    fn exceeds(&self, x: &ExactRational) -> bool {
        self > x
    }
    fn agrees(&self, other: &Self) -> bool {
        self == other
    }
}

impl Scalar for RationalInterval {
    fn from_rational(x: ExactRational) -> Self {
        RationalInterval::point(x)
    }
    fn add(&self, other: &Self) -> Self {
        RationalInterval::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        RationalInterval::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        RationalInterval::mul(self, other)
    }
    fn recip(&self) -> Result<Self> {
        RationalInterval::recip(self)
    }
    fn powu(&self, exp: u32) -> Self {
        RationalInterval::powu(self, exp)
    }
    fn exceeds(&self, x: &ExactRational) -> bool {
        self.lo() > x
    }
    fn agrees(&self, other: &Self) -> bool {
        self.overlaps(other)
    }
}

/// `(a, b, c)` with `a^n + b^n` compared against `c^n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Triple<T> {
    pub a: T,
    pub b: T,
    pub c: T,
}

pub type RationalTriple = Triple<ExactRational>;

impl<T: Scalar> Triple<T> {
    pub fn new(a: T, b: T, c: T) -> Self {
        Self { a, b, c }
    }

    pub fn swap_ab(&self) -> Self {
        Self {
            a: self.b.clone(),
            b: self.a.clone(),
            c: self.c.clone(),
        }
    }

    /// `a^n + b^n - c^n`.
    pub fn fermat_gap(&self, n: u32) -> T {
        self.a.powu(n).add(&self.b.powu(n)).sub(&self.c.powu(n))
    }
}

impl RationalTriple {
    pub fn from_ints(a: i64, b: i64, c: i64) -> Self {
        Self::new(a.into(), b.into(), c.into())
    }

    /// `a > 0`, `b > 0`, `c > a`, `c > b` and `a + b > c`.
    pub fn check_admissible(&self) -> Result<()> {
        let Self { a, b, c } = self;
        if !a.is_positive() || !b.is_positive() {
            return invalid(format!("({a}, {b}, {c}): a and b must be positive"));
        }
        if c <= a || c <= b {
            return invalid(format!("({a}, {b}, {c}): c must exceed both a and b"));
        }
        if &(a + b) <= c {
            return invalid(format!("({a}, {b}, {c}): need a + b > c so that f > 0"));
        }
        Ok(())
    }
}

/// Parameters with `c = a + d`, `f = a + b - c = g d`, `a = g h d`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParamTriple<T> {
    pub d: T,
    pub g: T,
    pub h: T,
}

impl<T: Scalar> ParamTriple<T> {
    pub fn new(d: T, g: T, h: T) -> Self {
        Self { d, g, h }
    }

    /// Requires `d > 0`, `g > 0` and `h > 1` (certainly, for enclosures).
    pub fn check_admissible(&self) -> Result<()> {
        let zero = ExactRational::zero();
        if !self.d.exceeds(&zero) || !self.g.exceeds(&zero) {
            return invalid(format!("{self:?}: need d > 0 and g > 0"));
        }
        if !self.h.exceeds(&ExactRational::one()) {
            return invalid(format!("{self:?}: need h > 1"));
        }
        Ok(())
    }

    pub fn f(&self) -> T {
        self.g.mul(&self.d)
    }
}

pub type RationalParams = ParamTriple<ExactRational>;

/// Two parameter triples describing `(a, b, c)` and `(b, a, c)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CounterpartPair<T> {
    pub first: ParamTriple<T>,
    pub second: ParamTriple<T>,
}

impl<T: Scalar> CounterpartPair<T> {
    pub fn from_first(first: ParamTriple<T>) -> Result<Self> {
        let second = counterpart(&first)?;
        Ok(Self { first, second })
    }

    /// `g1 (h2 - 1) = 1` and `g2 (h1 - 1) = 1`.
    pub fn reciprocal_relations(&self) -> [bool; 2] {
        let one = T::from_rational(ExactRational::one());
        let (p, s) = (&self.first, &self.second);
        [
            p.g.mul(&s.h.sub(&one)).agrees(&one),
            s.g.mul(&p.h.sub(&one)).agrees(&one),
        ]
    }
}

/// `d = c - a`, `f = a + b - c`, `g = f/d`, `h = a/(g d)`.
pub fn to_params(t: &RationalTriple) -> Result<RationalParams> {
    t.check_admissible()?;
    let d = &t.c - &t.a;
    let f = &(&t.a + &t.b) - &t.c;
    let g = &f / &d;
    let h = &t.a / &f;
    Ok(ParamTriple { d, g, h })
}

/// `a = g h d`, `b = (g + 1) d`, `c = (g h + 1) d`.
pub fn from_params<T: Scalar>(p: &ParamTriple<T>) -> Triple<T> {
    let one = T::from_rational(ExactRational::one());
    let gh = p.g.mul(&p.h);
    Triple {
        a: gh.mul(&p.d),
        b: p.g.add(&one).mul(&p.d),
        c: gh.add(&one).mul(&p.d),
    }
}

/// `P_n(g, h)`; the Fermat gap of `from_params(p)` is `g d^n` times this.
pub fn residual(p: &RationalParams, n: u32) -> Result<ExactRational> {
    eval_flt(n, &p.g, &p.h)
}

/// Parameters of the swapped triple `(b, a, c)`:
/// `d2 = g (h - 1) d`, `g2 = 1/(h - 1)`, `h2 = 1 + 1/g`.
pub fn counterpart<T: Scalar>(p: &ParamTriple<T>) -> Result<ParamTriple<T>> {
    let one = T::from_rational(ExactRational::one());
    if !p.h.exceeds(&ExactRational::one()) {
        return invalid(format!("counterpart needs h > 1, got {:?}", p.h));
    }
    if !p.g.exceeds(&ExactRational::zero()) {
        return invalid(format!("counterpart needs g > 0, got {:?}", p.g));
    }
    let h_minus_1 = p.h.sub(&one);
    Ok(ParamTriple {
        d: p.g.mul(&h_minus_1).mul(&p.d),
        g: h_minus_1.recip()?,
        h: one.add(&p.g.recip()?),
    })
}

/// The three reconstruction equalities linking a pair:
/// `g1 h1 d1 = (g2 + 1) d2`, `(g1 + 1) d1 = g2 h2 d2`,
/// `(g1 h1 + 1) d1 = (g2 h2 + 1) d2`.
pub fn reconstruction_equalities<T: Scalar>(pair: &CounterpartPair<T>) -> [bool; 3] {
    let first = from_params(&pair.first);
    let second = from_params(&pair.second);
    [
        first.a.agrees(&second.b),
        first.b.agrees(&second.a),
        first.c.agrees(&second.c),
    ]
}

pub fn check_reconstruction<T: Scalar>(pair: &CounterpartPair<T>) -> bool {
    reconstruction_equalities(pair).iter().all(|&ok| ok)
}
