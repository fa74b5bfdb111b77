use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::ser::SerializeSeq;
use serde::{Deserialize, Serialize, Serializer};

use crate::arith::{ExactRational, RationalInterval};
use crate::error::{invalid, Error, Result};
use crate::poly::UniPoly;

/// Indeterminates of the symbolic engine, in monomial-order priority.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Var {
    A,
    D,
    F,
    G,
    H,
    H1,
    H2,
}

impl Var {
    pub const ALL: [Var; 7] = [Var::A, Var::D, Var::F, Var::G, Var::H, Var::H1, Var::H2];

    pub fn name(self) -> &'static str {
        match self {
            Var::A => "a",
            Var::D => "d",
            Var::F => "f",
            Var::G => "g",
            Var::H => "h",
            Var::H1 => "h1",
            Var::H2 => "h2",
        }
    }

    fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

const NVARS: usize = Var::ALL.len();

/// Exponent vector, ordered graded-lexicographically with `a > d > ... > h2`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial([u32; NVARS]);

impl Monomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn var(v: Var, exp: u32) -> Self {
        let mut e = [0; NVARS];
        e[v.index()] = exp;
        Self(e)
    }

    pub fn exp(&self, v: Var) -> u32 {
        self.0[v.index()]
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut e = self.0;
        for (x, y) in e.iter_mut().zip(other.0) {
            *x += y;
        }
        Self(e)
    }

    /// `self / other` when every exponent of `other` is at most ours.
    pub fn checked_div(&self, other: &Self) -> Option<Self> {
        let mut e = self.0;
        for (x, y) in e.iter_mut().zip(other.0) {
            *x = x.checked_sub(y)?;
        }
        Some(Self(e))
    }

    fn with_exp(&self, v: Var, exp: u32) -> Self {
        let mut e = self.0;
        e[v.index()] = exp;
        Self(e)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in Var::ALL {
            let e = self.exp(v);
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Sparse polynomial over the rationals in the variables of [`Var`].
///
/// Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, ExactRational>,
}

/// Outcome of [`MultiPoly::exact_divide`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Division {
    Exact(MultiPoly),
    Inexact {
        quotient: MultiPoly,
        remainder: MultiPoly,
    },
}

impl Division {
    pub fn exact(self) -> Option<MultiPoly> {
        match self {
            Division::Exact(q) => Some(q),
            Division::Inexact { .. } => None,
        }
    }
}

impl MultiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(ExactRational::one())
    }

    pub fn constant(c: ExactRational) -> Self {
        Self::term(c, Monomial::one())
    }

    pub fn int(c: i64) -> Self {
        Self::constant(ExactRational::from(c))
    }

    pub fn var(v: Var) -> Self {
        Self::term(ExactRational::one(), Monomial::var(v, 1))
    }

    pub fn term(c: ExactRational, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Self { terms }
    }

    /// `v - c`, a convenient linear factor.
    pub fn var_minus(v: Var, c: i64) -> Self {
        &Self::var(v) - &Self::int(c)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    /// Terms in descending monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &ExactRational)> {
        self.terms.iter().rev()
    }

    pub fn coeff(&self, m: &Monomial) -> ExactRational {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &ExactRational)> {
        self.terms.iter().next_back()
    }

    pub fn as_constant(&self) -> Option<ExactRational> {
        match self.terms.len() {
            0 => Some(ExactRational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().expect("one term");
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms.keys().map(|m| m.exp(v)).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(Monomial::total_degree)
            .max()
            .unwrap_or(0)
    }

    pub fn variables(&self) -> Vec<Var> {
        Var::ALL
            .into_iter()
            .filter(|&v| self.degree_in(v) > 0)
            .collect()
    }

    fn add_term(&mut self, m: Monomial, c: &ExactRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_insert_with(ExactRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn scale(&self, k: &ExactRational) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(m, c)| (*m, c * k)).collect(),
        }
    }

    pub fn mul_term(&self, c: &ExactRational, mono: &Monomial) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self
                .terms
                .iter()
                .map(|(m, x)| (m.mul(mono), x * c))
                .collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Replaces `v` by `replacement`. A ring homomorphism in the other
    /// variables.
    pub fn substitute(&self, v: Var, replacement: &MultiPoly) -> Self {
        let max = self.degree_in(v);
        let mut powers = Vec::with_capacity(max as usize + 1);
        powers.push(Self::one());
        for k in 1..=max as usize {
            let next = &powers[k - 1] * replacement;
            powers.push(next);
        }
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let e = m.exp(v);
            let rest = m.with_exp(v, 0);
            out = &out + &powers[e as usize].mul_term(c, &rest);
        }
        out
    }

    /// Simultaneous substitution `v -> num_v / den_v`, with denominators
    /// cleared by multiplying through by `den_v^(deg_v(self))` for each
    /// substituted variable.
    pub fn substitute_fractions(&self, subs: &[(Var, MultiPoly, MultiPoly)]) -> Result<Self> {
        for (v, _, den) in subs {
            if den.is_zero() {
                return invalid(format!("zero denominator substituted for {v}"));
            }
        }
        let degrees: Vec<u32> = subs.iter().map(|(v, _, _)| self.degree_in(*v)).collect();
        let powers = |base: &MultiPoly, max: u32| -> Vec<MultiPoly> {
            let mut out = vec![MultiPoly::one()];
            for k in 1..=max as usize {
                let next = &out[k - 1] * base;
                out.push(next);
            }
            out
        };
        let num_pows: Vec<_> = subs
            .iter()
            .zip(&degrees)
            .map(|((_, n, _), &d)| powers(n, d))
            .collect();
        let den_pows: Vec<_> = subs
            .iter()
            .zip(&degrees)
            .map(|((_, _, q), &d)| powers(q, d))
            .collect();

        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let mut rest = *m;
            let mut factor = Self::one();
            for (k, (v, _, _)) in subs.iter().enumerate() {
                let e = m.exp(*v);
                rest = rest.with_exp(*v, 0);
                factor = &factor * &num_pows[k][e as usize];
                factor = &factor * &den_pows[k][(degrees[k] - e) as usize];
            }
            out = &out + &factor.mul_term(c, &rest);
        }
        Ok(out)
    }

    /// Multivariate division by a single divisor under the graded-lex order.
    pub fn exact_divide(&self, divisor: &MultiPoly) -> Result<Division> {
        let Some((lm, lc)) = divisor.leading_term() else {
            return invalid("division by the zero polynomial");
        };
        let (lm, lc_inv) = (*lm, lc.recip()?);
        let mut rest = self.clone();
        let mut quotient = Self::zero();
        let mut remainder = Self::zero();
        while let Some((m, c)) = rest.leading_term() {
            let (m, c) = (*m, c.clone());
            match m.checked_div(&lm) {
                Some(shift) => {
                    let t = &c * &lc_inv;
                    quotient.add_term(shift, &t);
                    for (dm, dc) in &divisor.terms {
                        rest.add_term(dm.mul(&shift), &-(dc * &t));
                    }
                }
                None => {
                    remainder.add_term(m, &c);
                    rest.terms.remove(&m);
                }
            }
        }
        Ok(if remainder.is_zero() {
            Division::Exact(quotient)
        } else {
            Division::Inexact {
                quotient,
                remainder,
            }
        })
    }

    /// Exact quotient, or a derivation-mismatch error naming `what`.
    pub fn divide_or_mismatch(&self, divisor: &MultiPoly, what: &str) -> Result<MultiPoly> {
        self.exact_divide(divisor)?.exact().ok_or_else(|| {
            Error::DerivationMismatch(format!("{what}: ({divisor}) does not divide exactly"))
        })
    }

    pub fn eval(&self, point: &[(Var, ExactRational)]) -> Result<ExactRational> {
        let lookup = |v: Var| point.iter().find(|(w, _)| *w == v).map(|(_, x)| x);
        let mut acc = ExactRational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for v in Var::ALL {
                let e = m.exp(v);
                if e > 0 {
                    let x = lookup(v)
                        .ok_or_else(|| Error::InvalidInput(format!("no value for {v}")))?;
                    t *= &x.powu(e);
                }
            }
            acc += &t;
        }
        Ok(acc)
    }

    pub fn eval_interval(&self, point: &[(Var, RationalInterval)]) -> Result<RationalInterval> {
        let lookup = |v: Var| point.iter().find(|(w, _)| *w == v).map(|(_, x)| x);
        let mut acc = RationalInterval::point(ExactRational::zero());
        for (m, c) in &self.terms {
            let mut t = RationalInterval::point(c.clone());
            for v in Var::ALL {
                let e = m.exp(v);
                if e > 0 {
                    let x = lookup(v)
                        .ok_or_else(|| Error::InvalidInput(format!("no value for {v}")))?;
                    t = t.mul(&x.powu(e));
                }
            }
            acc = acc.add(&t);
        }
        Ok(acc)
    }

    /// Converts to a univariate polynomial in `v`; fails if any other
    /// variable occurs.
    pub fn to_univariate(&self, v: Var) -> Result<UniPoly> {
        let mut coeffs = vec![ExactRational::zero(); self.degree_in(v) as usize + 1];
        for (m, c) in &self.terms {
            if m.with_exp(v, 0) != Monomial::one() {
                return invalid(format!("{self} is not univariate in {v}"));
            }
            coeffs[m.exp(v) as usize] = c.clone();
        }
        Ok(UniPoly::new(coeffs))
    }

    pub fn from_univariate(p: &UniPoly, v: Var) -> Self {
        let mut out = Self::zero();
        for (i, c) in p.coeffs().iter().enumerate() {
            out.add_term(Monomial::var(v, i as u32), c);
        }
        out
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c);
        }
        out
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, &-c);
        }
        out
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), &(c1 * c2));
            }
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.scale(&-ExactRational::one())
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms().enumerate() {
            let mag = c.abs();
            match (k, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Serialize, Deserialize)]
struct TermRecord {
    exponents: BTreeMap<Var, u32>,
    coefficient: ExactRational,
}

/// Serialized as a list of `{exponents, coefficient}` records in descending
/// graded-lex order; exponent maps omit zero exponents.
impl Serialize for MultiPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for (m, c) in self.terms() {
            let exponents = Var::ALL
                .into_iter()
                .filter(|&v| m.exp(v) > 0)
                .map(|v| (v, m.exp(v)))
                .collect();
            seq.serialize_element(&TermRecord {
                exponents,
                coefficient: c.clone(),
            })?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for MultiPoly {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        let records = Vec::<TermRecord>::deserialize(deserializer)?;
        let mut out = MultiPoly::zero();
        for r in records {
            let mut m = Monomial::one();
            for (v, e) in r.exponents {
                m = m.with_exp(v, e);
            }
            out.add_term(m, &r.coefficient);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::q;
    use proptest::prelude::*;

    fn v(x: Var) -> MultiPoly {
        MultiPoly::var(x)
    }

    #[test]
    fn binomial_square() {
        let s = (&v(Var::A) + &v(Var::D)).pow(2);
        let expected =
            &(&v(Var::A).pow(2) + &(&v(Var::A) * &v(Var::D)).scale(&q(2, 1))) + &v(Var::D).pow(2);
        assert_eq!(s, expected);
        assert_eq!(s.to_string(), "a^2 + 2*a*d + d^2");
    }

    #[test]
    fn substitution() {
        let fd = &v(Var::F) * &v(Var::D);
        let gd = &v(Var::G) * &v(Var::D);
        assert_eq!(fd.substitute(Var::F, &gd), &v(Var::G) * &v(Var::D).pow(2));
    }

    #[test]
    fn exact_division() {
        let g = v(Var::G);
        let d = v(Var::D);
        let p = &(&g.pow(2) * &d) + &(&g * &d);
        assert_eq!(
            p.exact_divide(&g).unwrap(),
            Division::Exact(&(&g * &d) + &d)
        );
        assert!(matches!(
            p.exact_divide(&v(Var::H)).unwrap(),
            Division::Inexact { .. }
        ));
        assert!(p.exact_divide(&MultiPoly::zero()).is_err());
        // h^3 - 1 = (h - 1)(h^2 + h + 1)
        let cube = &v(Var::H).pow(3) - &MultiPoly::one();
        let quot = cube
            .exact_divide(&MultiPoly::var_minus(Var::H, 1))
            .unwrap()
            .exact()
            .unwrap();
        assert_eq!(quot.to_string(), "h^2 + h + 1");
    }

    #[test]
    fn fraction_substitution_clears_denominators() {
        // g^2 + h at g = 1/(h - 1): times (h - 1)^2 gives 1 + h (h - 1)^2
        let p = &v(Var::G).pow(2) + &v(Var::H);
        let hm1 = MultiPoly::var_minus(Var::H, 1);
        let out = p
            .substitute_fractions(&[(Var::G, MultiPoly::one(), hm1.clone())])
            .unwrap();
        assert_eq!(out, &MultiPoly::one() + &(&v(Var::H) * &hm1.pow(2)));
    }

    #[test]
    fn json_shape() {
        let p = &(&v(Var::H1).pow(2) * &v(Var::H2)).scale(&q(3, 2)) - &MultiPoly::int(1);
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(
            json,
            r#"[{"exponents":{"h1":2,"h2":1},"coefficient":"3/2"},{"exponents":{},"coefficient":"-1"}]"#
        );
        let back: MultiPoly = serde_json::from_str(&json).unwrap();
        assert_eq!(back, p);
    }

    fn arb_poly() -> impl Strategy<Value = MultiPoly> {
        proptest::collection::vec((-5i64..6, 0u32..3, 0u32..3, 0u32..3), 0..6).prop_map(|ts| {
            ts.into_iter()
                .fold(MultiPoly::zero(), |acc, (c, eg, eh, ed)| {
                    let m = Monomial::var(Var::G, eg)
                        .mul(&Monomial::var(Var::H, eh))
                        .mul(&Monomial::var(Var::D, ed));
                    &acc + &MultiPoly::term(q(c, 1), m)
                })
        })
    }

    proptest! {
        #[test]
        fn substitute_is_a_homomorphism(p in arb_poly(), r in arb_poly(), s in arb_poly()) {
            let lhs = (&p * &r).substitute(Var::G, &s);
            let rhs = &p.substitute(Var::G, &s) * &r.substitute(Var::G, &s);
            prop_assert_eq!(lhs, rhs);
            let lhs = (&p + &r).substitute(Var::H, &s);
            let rhs = &p.substitute(Var::H, &s) + &r.substitute(Var::H, &s);
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn product_divides_exactly(p in arb_poly(), r in arb_poly()) {
            prop_assume!(!r.is_zero());
            let prod = &p * &r;
            prop_assert_eq!(prod.exact_divide(&r).unwrap(), Division::Exact(p));
        }

        #[test]
        fn ring_axioms(p in arb_poly(), r in arb_poly(), s in arb_poly()) {
            prop_assert_eq!(&(&p + &r) * &s, &(&p * &s) + &(&r * &s));
            prop_assert_eq!(&(&p * &r) * &s, &p * &(&r * &s));
            prop_assert_eq!(&(&p - &r) + &r, p.clone());
        }
    }
}
