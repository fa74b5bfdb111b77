//! Mechanical checks of the derivation chain from `a^n + b^n = c^n` to
//! `P_n(g, h) = 0`, the counterpart duality, and the term-by-term comparison
//! of the transformed equations in `h1`, `h2`.

use serde::Serialize;

use super::multipoly::{Division, MultiPoly, Var};
use super::ratfun::RationalFunction;
use crate::arith::{binomial_row, ExactRational};
use crate::error::{invalid, Error, Result};

fn check_degree(n: u32) -> Result<()> {
    if n < 2 {
        return invalid(format!("exponent n = {n}, need n >= 2"));
    }
    Ok(())
}

fn c(n: &num_bigint::BigInt) -> ExactRational {
    ExactRational::from(n.clone())
}

/// `v^(k-1) + ... + v + 1`, the cofactor in `v^k - 1 = (v - 1)(...)`.
pub fn geometric_sum(v: Var, k: u32) -> MultiPoly {
    (0..k).fold(MultiPoly::zero(), |acc, e| &acc + &MultiPoly::var(v).pow(e))
}

/// `P_n` with `g_var` as the unknown and `h_var` as the parameter.
pub fn flt_poly_symbolic(n: u32, g_var: Var, h_var: Var) -> Result<MultiPoly> {
    check_degree(n)?;
    let row = binomial_row(n);
    let g = MultiPoly::var(g_var);
    let mut out = g.pow(n - 1);
    for i in 1..n {
        let hk = &MultiPoly::var(h_var).pow(n - i) - &MultiPoly::one();
        let t = &hk * &g.pow(n - 1 - i);
        out = &out - &t.scale(&c(&row[i as usize]));
    }
    Ok(out)
}

/// `a^n + (d + f)^n - (a + d)^n`, expanded by repeated squaring.
pub fn fermat_gap(n: u32) -> MultiPoly {
    let a = MultiPoly::var(Var::A);
    let d = MultiPoly::var(Var::D);
    let f = MultiPoly::var(Var::F);
    &(&a.pow(n) + &(&d + &f).pow(n)) - &(&a + &d).pow(n)
}

/// Same expansion, built by multiplying one linear factor at a time.
fn fermat_gap_sequential(n: u32) -> MultiPoly {
    let a = MultiPoly::var(Var::A);
    let df = &MultiPoly::var(Var::D) + &MultiPoly::var(Var::F);
    let ad = &a + &MultiPoly::var(Var::D);
    let mut an = MultiPoly::one();
    let mut dfn = MultiPoly::one();
    let mut adn = MultiPoly::one();
    for _ in 0..n {
        an = &an * &a;
        dfn = &dfn * &df;
        adn = &adn * &ad;
    }
    &(&an + &dfn) - &adn
}

/// `sum_{i=0}^{n-1} C(n,i) f^(n-i) d^i - sum_{i=1}^{n-1} C(n,i) a^(n-i) d^i`.
pub fn expanded_identity(n: u32) -> Result<MultiPoly> {
    check_degree(n)?;
    let row = binomial_row(n);
    let a = MultiPoly::var(Var::A);
    let d = MultiPoly::var(Var::D);
    let f = MultiPoly::var(Var::F);
    let mut out = MultiPoly::zero();
    for i in 0..n {
        let k = c(&row[i as usize]);
        out = &out + &(&f.pow(n - i) * &d.pow(i)).scale(&k);
        if i >= 1 {
            out = &out - &(&a.pow(n - i) * &d.pow(i)).scale(&k);
        }
    }
    Ok(out)
}

/// The expanded Fermat gap has the displayed binomial pattern, with the
/// `d^n` terms cancelled. Two expansion orders must agree with it.
pub fn verify_expansion_identity(n: u32) -> Result<bool> {
    let pattern = expanded_identity(n)?;
    Ok(fermat_gap(n) == pattern && fermat_gap_sequential(n) == pattern)
}

/// Substituting `f = g d`, `a = g h d` into the expanded identity yields
/// exactly `g d^n P_n(g, h)`.
pub fn verify_reduction_identity(n: u32) -> Result<bool> {
    let g = MultiPoly::var(Var::G);
    let d = MultiPoly::var(Var::D);
    let h = MultiPoly::var(Var::H);
    let substituted = expanded_identity(n)?
        .substitute(Var::F, &(&g * &d))
        .substitute(Var::A, &(&(&g * &h) * &d));
    let divisor = &g * &d.pow(n);
    let quotient =
        substituted.divide_or_mismatch(&divisor, &format!("n = {n}, division by g*d^n"))?;
    Ok(quotient == flt_poly_symbolic(n, Var::G, Var::H)?)
}

/// Result of testing `(g (h - 1))^(n-1) P_n(1/(h-1), (g+1)/g) = P_n(g, h)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum DualityOutcome {
    Identity,
    /// The cleared left side is `cofactor * P_n(g, h)`.
    Cofactor {
        cofactor: MultiPoly,
    },
    /// Neither equal nor divisible; `difference` is left minus right.
    Mismatch {
        difference: MultiPoly,
    },
}

impl DualityOutcome {
    pub fn is_identity(&self) -> bool {
        matches!(self, DualityOutcome::Identity)
    }
}

/// The left side of the duality identity with all denominators cleared.
pub fn duality_lhs(n: u32) -> Result<MultiPoly> {
    let p = flt_poly_symbolic(n, Var::G, Var::H)?;
    let g = MultiPoly::var(Var::G);
    // Degrees of P_n in g and h are both n - 1, so the clearing factor
    // (h - 1)^(n-1) g^(n-1) is exactly (g (h - 1))^(n-1).
    debug_assert_eq!(p.degree_in(Var::G), n - 1);
    debug_assert_eq!(p.degree_in(Var::H), n - 1);
    p.substitute_fractions(&[
        (Var::G, MultiPoly::one(), MultiPoly::var_minus(Var::H, 1)),
        (Var::H, &g + &MultiPoly::one(), g.clone()),
    ])
}

pub fn verify_duality(n: u32) -> Result<DualityOutcome> {
    let lhs = duality_lhs(n)?;
    let rhs = flt_poly_symbolic(n, Var::G, Var::H)?;
    if lhs == rhs {
        return Ok(DualityOutcome::Identity);
    }
    Ok(match lhs.exact_divide(&rhs)? {
        Division::Exact(cofactor) => DualityOutcome::Cofactor { cofactor },
        Division::Inexact { .. } => DualityOutcome::Mismatch {
            difference: &lhs - &rhs,
        },
    })
}

fn rf(num: MultiPoly, den: MultiPoly) -> RationalFunction {
    RationalFunction::new(num, den).expect("denominators here are nonzero powers of (h - 1)")
}

/// Right-hand terms of `P_n(g1, h1) = 0` rewritten with `g1 = 1/(h2 - 1)`:
/// term `i` is `C(n,i) (h1^(n-i) - 1) / (h2 - 1)^(n-1-i)` for `i = 1..n-1`.
pub fn substituted_terms(n: u32, own: Var, other: Var) -> Result<Vec<RationalFunction>> {
    check_degree(n)?;
    let row = binomial_row(n);
    let other_m1 = MultiPoly::var_minus(other, 1);
    Ok((1..n)
        .map(|i| {
            let num =
                (&MultiPoly::var(own).pow(n - i) - &MultiPoly::one()).scale(&c(&row[i as usize]));
            rf(num, other_m1.pow(n - 1 - i))
        })
        .collect())
}

/// Right-hand terms of the first transformed equation (in `h1`, over powers
/// of `h2 - 1`).
pub fn first_equation_terms(n: u32) -> Result<Vec<RationalFunction>> {
    substituted_terms(n, Var::H1, Var::H2)
}

/// Right-hand terms of the counterpart equation (in `h2`, over powers of
/// `h1 - 1`).
pub fn counterpart_equation_terms(n: u32) -> Result<Vec<RationalFunction>> {
    substituted_terms(n, Var::H2, Var::H1)
}

/// The displayed simplified form after applying the multiplicative operator:
/// term `i` is `C(n,i) (h1^(n-i-1) + ... + 1) (h2 - 1)^i / (h1 - 1)^(n-2)`.
pub fn operator_target_terms(n: u32) -> Result<Vec<(MultiPoly, MultiPoly)>> {
    check_degree(n)?;
    let row = binomial_row(n);
    let h1m1 = MultiPoly::var_minus(Var::H1, 1);
    let h2m1 = MultiPoly::var_minus(Var::H2, 1);
    Ok((1..n)
        .map(|i| {
            let num = (&geometric_sum(Var::H1, n - i) * &h2m1.pow(i)).scale(&c(&row[i as usize]));
            (num, h1m1.pow(n - 2))
        })
        .collect())
}

/// Multiplies each right-hand term of the first equation by
/// `((h2 - 1)/(h1 - 1))^(n-1)` and simplifies with
/// `h^k - 1 = (h - 1)(h^(k-1) + ... + 1)`.
///
/// Fails with a derivation mismatch unless every simplified term equals the
/// displayed target form both structurally and as a rational function.
pub fn operator_step(n: u32) -> Result<Vec<RationalFunction>> {
    check_degree(n)?;
    let row = binomial_row(n);
    let h1m1 = MultiPoly::var_minus(Var::H1, 1);
    let h2m1 = MultiPoly::var_minus(Var::H2, 1);
    let operator = rf(h2m1.pow(n - 1), h1m1.pow(n - 1));
    let originals = first_equation_terms(n)?;
    let targets = operator_target_terms(n)?;

    let mut out = Vec::with_capacity(originals.len());
    for (idx, i) in (1..n).enumerate() {
        let what = format!("n = {n}, term {i}");
        let raw_num = (&(&MultiPoly::var(Var::H1).pow(n - i) - &MultiPoly::one())
            * &h2m1.pow(n - 1))
            .scale(&c(&row[i as usize]));
        let num = raw_num
            .divide_or_mismatch(&h2m1.pow(n - 1 - i), &what)?
            .divide_or_mismatch(&h1m1, &what)?;
        let den = h1m1.pow(n - 2);
        let (target_num, target_den) = &targets[idx];
        if &num != target_num || &den != target_den {
            return Err(Error::DerivationMismatch(format!(
                "{what}: got ({num})/({den}), expected ({target_num})/({target_den})"
            )));
        }
        let simplified = rf(num, den);
        if simplified != originals[idx].mul(&operator) {
            return Err(Error::DerivationMismatch(format!(
                "{what}: simplified form is not equal to the operator product"
            )));
        }
        out.push(simplified);
    }
    Ok(out)
}

/// Term-by-term comparison of the operator-transformed equation with the
/// counterpart equation, with `h1` and `h2` independent.
#[derive(Clone, Debug, Serialize)]
pub struct TermMatchReport {
    pub n: u32,
    /// The operator maps `1/(h2-1)^(n-1)` onto `1/(h1-1)^(n-1)`.
    pub lhs_match: bool,
    pub per_term_differences: Vec<RationalFunction>,
    pub all_match: bool,
}

pub fn term_match_report(n: u32) -> Result<TermMatchReport> {
    let transformed = operator_step(n)?;
    let counterpart = counterpart_equation_terms(n)?;
    let h1m1 = MultiPoly::var_minus(Var::H1, 1);
    let h2m1 = MultiPoly::var_minus(Var::H2, 1);
    let per_term_differences: Vec<RationalFunction> = transformed
        .iter()
        .zip(&counterpart)
        .map(|(t, c)| t.sub(c).cancel_factor(&h1m1).cancel_factor(&h2m1))
        .collect();
    let all_match = per_term_differences.iter().all(RationalFunction::is_zero);

    let lhs = rf(MultiPoly::one(), h2m1.pow(n - 1));
    let operator = rf(h2m1.pow(n - 1), h1m1.pow(n - 1));
    let lhs_match = lhs.mul(&operator) == rf(MultiPoly::one(), h1m1.pow(n - 1));

    Ok(TermMatchReport {
        n,
        lhs_match,
        per_term_differences,
        all_match,
    })
}

/// Outcome of the second-root check on the quadratic in `g` at `h = h1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct VietaCheck {
    /// `(1/(h2-1)) * (-3(h1-1)(h2-1)) = -3(h1-1)` identically.
    pub product_identity: bool,
    /// The cleared sum condition is the cleared quadratic relation in
    /// `h1`, `h2`, up to sign.
    pub sum_is_rearrangement: bool,
}

/// `(h2 - 1)^2` times (left minus right) of the `n = 3` relation between
/// `h1` and `h2`: `1 - 3(h1^2 - 1)(h2 - 1) - 3(h1 - 1)(h2 - 1)^2`.
pub fn cubic_counterpart_relation() -> MultiPoly {
    let h2m1 = MultiPoly::var_minus(Var::H2, 1);
    let lhs = rf(MultiPoly::one(), h2m1.pow(2));
    let rhs = first_equation_terms(3)
        .expect("n = 3 is valid")
        .into_iter()
        .fold(RationalFunction::zero(), |acc, t| acc.add(&t));
    let cleared = lhs.sub(&rhs).mul(&RationalFunction::from_poly(h2m1.pow(2)));
    debug_assert_eq!(cleared.den(), &MultiPoly::one());
    cleared.num().clone()
}

/// `(h2 - 1)` times the Vieta sum condition
/// `1/(h2-1) - 3(h1-1)(h2-1) - 3(h1^2-1)`.
pub fn vieta_sum_condition() -> MultiPoly {
    let h1 = MultiPoly::var(Var::H1);
    let h1m1 = MultiPoly::var_minus(Var::H1, 1);
    let h2m1 = MultiPoly::var_minus(Var::H2, 1);
    let first = rf(MultiPoly::one(), h2m1.clone());
    let second = RationalFunction::from_poly((&h1m1 * &h2m1).scale(&ExactRational::from(-3)));
    let sum_of_roots = RationalFunction::from_poly(
        (&h1.pow(2) - &MultiPoly::one()).scale(&ExactRational::from(3)),
    );
    let cleared = first
        .add(&second)
        .sub(&sum_of_roots)
        .mul(&RationalFunction::from_poly(h2m1));
    cleared.num().clone()
}

pub fn vieta_second_root_check() -> VietaCheck {
    let h1m1 = MultiPoly::var_minus(Var::H1, 1);
    let h2m1 = MultiPoly::var_minus(Var::H2, 1);
    let three = ExactRational::from(3);
    let first_root = rf(MultiPoly::one(), h2m1.clone());
    let second_root = RationalFunction::from_poly((&h1m1 * &h2m1).scale(&-three.clone()));
    let vieta_product = RationalFunction::from_poly(h1m1.scale(&-three));
    let product_identity = first_root.mul(&second_root) == vieta_product;

    let sum = vieta_sum_condition();
    let relation = cubic_counterpart_relation();
    let sum_is_rearrangement = sum == relation || sum == -&relation;
    VietaCheck {
        product_identity,
        sum_is_rearrangement,
    }
}
