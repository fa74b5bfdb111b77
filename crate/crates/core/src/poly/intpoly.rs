//! Primitive integer polynomials used internally for sign evaluation and
//! remainder sequences, avoiding a gcd per rational operation.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rational_roots::primitive_integer_coeffs;
use super::UniPoly;
use crate::arith::ExactRational;

/// Integer coefficients, lowest degree first, with positive content removed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct IntPoly {
    c: Vec<BigInt>,
}

impl IntPoly {
    pub fn from_uni(p: &UniPoly) -> Self {
        Self::from_vec(primitive_integer_coeffs(p))
    }

    /// Trims and divides by the (positive) content. Signs are unchanged.
    pub fn from_vec(mut c: Vec<BigInt>) -> Self {
        while c.len() > 1 && c.last().is_some_and(Zero::is_zero) {
            c.pop();
        }
        if c.is_empty() {
            c.push(BigInt::zero());
        }
        let content = c.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
        if !content.is_zero() && !content.is_one() {
            for x in &mut c {
                *x /= &content;
            }
        }
        Self { c }
    }

    pub fn to_uni(&self) -> UniPoly {
        UniPoly::new(self.c.iter().cloned().map(ExactRational::from).collect())
    }

    pub fn degree(&self) -> usize {
        self.c.len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.c.len() == 1 && self.c[0].is_zero()
    }

    pub fn is_constant(&self) -> bool {
        self.c.len() == 1
    }

    fn lc(&self) -> &BigInt {
        self.c.last().expect("never empty")
    }

    pub fn derivative(&self) -> Self {
        Self::from_vec(
            self.c
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, x)| x * BigInt::from(i))
                .collect(),
        )
    }

    /// Sign of `p(x)`, computed as `sum c_i a^i b^(d-i)` for `x = a/b`.
    pub fn sign_at(&self, x: &ExactRational) -> i8 {
        let (a, b) = (x.numer(), x.denom());
        let mut acc = self.lc().clone();
        let mut bpow = BigInt::one();
        for ci in self.c.iter().rev().skip(1) {
            bpow *= b;
            acc = acc * a + ci * &bpow;
        }
        if acc.is_positive() {
            1
        } else if acc.is_negative() {
            -1
        } else {
            0
        }
    }

    /// Remainder of `self` by `divisor` up to a nonzero integer factor, and
    /// whether that factor is positive.
    fn pseudo_rem(&self, divisor: &Self) -> (Vec<BigInt>, bool) {
        let mut r = self.c.clone();
        let db = divisor.degree();
        let lb = divisor.lc();
        let mut steps = 0u32;
        while r.len() > db && !(r.len() == 1 && r[0].is_zero()) {
            let lr = r.last().expect("nonempty").clone();
            let shift = r.len() - 1 - db;
            for x in r.iter_mut() {
                *x *= lb;
            }
            for (j, bj) in divisor.c.iter().enumerate() {
                r[shift + j] -= &lr * bj;
            }
            steps += 1;
            while r.len() > 1 && r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
            if r.len() == 1 {
                break;
            }
        }
        let positive = !lb.is_negative() || steps.is_multiple_of(2);
        (r, positive)
    }

    /// Sturm successor `-rem(self, divisor)` up to a positive factor.
    pub fn neg_rem(&self, divisor: &Self) -> Self {
        let (mut r, positive) = self.pseudo_rem(divisor);
        if positive {
            for x in &mut r {
                *x = -&*x;
            }
        }
        Self::from_vec(r)
    }

    /// Primitive gcd with positive leading coefficient.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let (r, _) = a.pseudo_rem(&b);
            a = b;
            b = Self::from_vec(r);
        }
        if a.lc().is_negative() {
            for x in &mut a.c {
                *x = -&*x;
            }
        }
        a
    }

    /// `self / gcd(self, self')`.
    pub fn squarefree_part(&self) -> Self {
        if self.is_constant() {
            return self.clone();
        }
        let g = self.gcd(&self.derivative());
        if g.is_constant() {
            return self.clone();
        }
        let (q, _) = self.to_uni().div_rem(&g.to_uni()).expect("gcd is nonzero");
        Self::from_uni(&q)
    }
}
