use crate::arith::{binomial_row, ExactRational};
use crate::error::{invalid, Result};

use super::UniPoly;

fn check_degree(n: u32) -> Result<()> {
    if n < 2 {
        return invalid(format!("exponent n = {n}, need n >= 2"));
    }
    Ok(())
}

/// `P_n(g, h)` as a polynomial in `g` for fixed `h`:
///
/// `g^(n-1) - sum_{i=1}^{n-1} C(n,i) (h^(n-i) - 1) g^(n-1-i)`.
///
/// Any rational `h` is accepted; `h <= 1` only changes coefficient signs.
pub fn build_flt_poly(n: u32, h: &ExactRational) -> Result<UniPoly> {
    check_degree(n)?;
    let row = binomial_row(n);
    let one = ExactRational::one();
    let mut coeffs = vec![ExactRational::zero(); n as usize];
    coeffs[n as usize - 1] = one.clone();
    for i in 1..n {
        let c = ExactRational::from(row[i as usize].clone());
        coeffs[(n - 1 - i) as usize] = -(c * (h.powu(n - i) - &one));
    }
    Ok(UniPoly::new(coeffs))
}

/// The same `P_n(g, h)` viewed as a polynomial in `h` for fixed `g`.
pub fn flt_poly_in_h(n: u32, g: &ExactRational) -> Result<UniPoly> {
    check_degree(n)?;
    let row = binomial_row(n);
    let mut coeffs = vec![ExactRational::zero(); n as usize];
    // constant: g^(n-1) + sum C(n,i) g^(n-1-i)
    let mut constant = g.powu(n - 1);
    for i in 1..n {
        let c = ExactRational::from(row[i as usize].clone());
        let gp = g.powu(n - 1 - i);
        constant += &(&c * &gp);
        coeffs[(n - i) as usize] = -(c * gp);
    }
    coeffs[0] = constant;
    Ok(UniPoly::new(coeffs))
}

/// Evaluates `P_n(g, h)` at a rational point.
pub fn eval_flt(n: u32, g: &ExactRational, h: &ExactRational) -> Result<ExactRational> {
    Ok(build_flt_poly(n, h)?.eval(g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::q;
    use crate::poly::isolate_positive_roots;

    #[test]
    fn known_members() {
        // n = 2: g - 2(h - 1) at h = 3/2
        assert_eq!(
            build_flt_poly(2, &q(3, 2)).unwrap(),
            UniPoly::from_ints(&[-1, 1])
        );
        // n = 3 at h = 2: g^2 - 3(4 - 1) g - 3(2 - 1)
        assert_eq!(
            build_flt_poly(3, &q(2, 1)).unwrap(),
            UniPoly::from_ints(&[-3, -9, 1])
        );
        assert_eq!(
            build_flt_poly(4, &q(1, 1)).unwrap(),
            UniPoly::from_ints(&[0, 0, 0, 1])
        );
        assert!(build_flt_poly(1, &q(2, 1)).is_err());
    }

    #[test]
    fn h_form_agrees_with_g_form() {
        for n in 2..9 {
            for (gn, gd) in [(1, 1), (3, 7), (-5, 2), (9, 4)] {
                let g = q(gn, gd);
                let in_h = flt_poly_in_h(n, &g).unwrap();
                for (hn, hd) in [(3, 2), (2, 1), (-1, 3), (11, 5)] {
                    let h = q(hn, hd);
                    assert_eq!(in_h.eval(&h), build_flt_poly(n, &h).unwrap().eval(&g));
                }
            }
        }
    }

    #[test]
    fn degree_five_single_positive_root() {
        let p = build_flt_poly(5, &q(3, 2)).unwrap();
        // Descartes oracle on the exact coefficients: one variation, so one root.
        assert_eq!(p.sign_variations(), 1);
        assert_eq!(isolate_positive_roots(&p).unwrap().len(), 1);
    }
}
