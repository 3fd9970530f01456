//! Exact and float scalars, polynomials in `s`, deformed integers.

mod deformed;
mod poly;
mod scalar;

pub use deformed::{deformed_factorial, deformed_integer, deformed_integer_poly};
pub use poly::{poly_eval, SPolynomial};
pub use scalar::{big_ratio_to_f64, ln_abs_big, rational_to_f64, Scalar};

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

/// Binomial coefficient `C(n, k)` as an arbitrary-size integer.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc = acc.div_floor(&BigInt::from(i + 1));
    }
    acc
}

/// Row-wise table of `C(n, k)` for `n <= max`.
pub fn binomial_table(max: usize) -> Vec<Vec<BigInt>> {
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(max + 1);
    for n in 0..=max {
        let mut row = vec![BigInt::one(); n + 1];
        for k in 1..n {
            row[k] = &rows[n - 1][k - 1] + &rows[n - 1][k];
        }
        rows.push(row);
    }
    rows
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    #[allow(clippy::needless_range_loop)]
    fn binomials_agree() {
        let t = binomial_table(30);
        for n in 0..=30 {
            for k in 0..=n {
                assert_eq!(t[n][k], binomial(n, k));
            }
        }
        assert_eq!(binomial(3, 5), BigInt::zero());
    }
}
