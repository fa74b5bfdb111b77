use num_bigint::BigInt;
use num_traits::One;

use crate::error::{invalid, Result};

/// Exact binomial coefficient `C(n, i)`.
pub fn binomial(n: u32, i: u32) -> Result<BigInt> {
    if i > n {
        return invalid(format!("binomial({n}, {i}) requires i <= n"));
    }
    let i = i.min(n - i);
    let mut acc = BigInt::one();
    for j in 0..i {
        // acc * (n - j) is divisible by (j + 1) at every step.
        acc = acc * BigInt::from(n - j) / BigInt::from(j + 1);
    }
    Ok(acc)
}

/// Row `n` of Pascal's triangle, `[C(n,0), ..., C(n,n)]`.
pub fn binomial_row(n: u32) -> Vec<BigInt> {
    let mut row = Vec::with_capacity(n as usize + 1);
    let mut acc = BigInt::one();
    row.push(acc.clone());
    for j in 0..n {
        acc = acc * BigInt::from(n - j) / BigInt::from(j + 1);
        row.push(acc.clone());
    }
    row
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pascal(n: usize) -> Vec<Vec<BigInt>> {
        let mut rows: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
        for r in 1..=n {
            let prev = &rows[r - 1];
            let mut row = vec![BigInt::one(); r + 1];
            for i in 1..r {
                row[i] = &prev[i - 1] + &prev[i];
            }
            rows.push(row);
        }
        rows
    }

    #[test]
    fn small_values() {
        assert_eq!(binomial(5, 2).unwrap(), BigInt::from(10));
        for n in 0..10 {
            assert_eq!(binomial(n, 0).unwrap(), BigInt::one());
            assert_eq!(binomial(n, n).unwrap(), BigInt::one());
        }
    }

    #[test]
    fn rejects_i_above_n() {
        assert!(matches!(binomial(3, 4), Err(crate::Error::InvalidInput(_))));
    }

    #[test]
    fn matches_pascal_recurrence_up_to_64() {
        let tri = pascal(64);
        for n in 0..=64u32 {
            let row = binomial_row(n);
            for i in 0..=n {
                let expected = &tri[n as usize][i as usize];
                assert_eq!(&binomial(n, i).unwrap(), expected);
                assert_eq!(&row[i as usize], expected);
            }
        }
        // C(64, 32) = 1832624140942590534
        assert_eq!(
            binomial(64, 32).unwrap(),
            "1832624140942590534".parse::<BigInt>().unwrap()
        );
    }
}
