//! Numerator polynomials `p_n(s)` with `a_n(s) = p_n(s) / ((s-1)² [n]_s!)`.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::algebra::{binomial_table, deformed_integer_poly, SPolynomial};
use crate::error::{Error, Result};

/// `p_0..=p_N`, where `p_0 = (s-1)²` carries the `a_0 = 1` normalization.
///
/// Each step forms the bracketed combination and divides it by `(1 - s)`;
/// a nonzero remainder is reported as [`Error::CancellationFailure`].
pub fn p_polynomials(n_max: usize) -> Result<Vec<SPolynomial>> {
    let one_minus_s = SPolynomial::from_ints(&[1, -1]);
    let mut p = vec![
        SPolynomial::from_ints(&[1, -2, 1]),
        SPolynomial::from_ints(&[2, -2]),
        SPolynomial::from_ints(&[5, -3]),
    ];
    let binom = binomial_table(n_max + 3);
    let deformed: Vec<SPolynomial> = (0..=n_max + 1).map(deformed_integer_poly).collect();
    let four = BigRational::from_integer(4.into());

    for n in 1..n_max.saturating_sub(1) {
        let jmin = 1 + (n - 1) / 2;
        let mut acc = SPolynomial::zero();
        for j in jmin..=n + 1 {
            if j > jmin {
                acc = &acc * &deformed[j];
            }
            let mut c: BigInt = binom[j + 2][n + 2 - j].clone();
            if (n + 1 - j) % 2 == 0 {
                c = -c;
            }
            acc = &acc + &p[j].shift(j).scale_int(&c);
        }
        let bracket = &(&p[n + 1].scale(&four) - &(&deformed[n + 1] * &p[n]).scale(&four)) + &acc;
        let (quot, rem) = bracket.div_rem(&one_minus_s);
        if !rem.is_zero() {
            return Err(Error::CancellationFailure { index: n + 2 });
        }
        p.push(quot);
    }
    p.truncate(n_max.max(1) + 1);
    Ok(p)
}

/// `1 + (n-2)(n-1)/2`, the degree of `p_n` for `n >= 2`.
pub fn expected_degree(n: usize) -> usize {
    1 + (n - 2) * (n - 1) / 2
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{deformed_factorial, Scalar};
    use crate::series::u_coefficients;

    #[test]
    fn seeds_and_degrees() {
        let p = p_polynomials(12).unwrap();
        assert_eq!(p[1], SPolynomial::from_ints(&[2, -2]));
        assert_eq!(p[2], SPolynomial::from_ints(&[5, -3]));
        for (n, pn) in p.iter().enumerate().skip(2) {
            assert_eq!(pn.degree(), Some(expected_degree(n)), "n = {n}");
            assert!(pn.is_integral());
        }
    }

    #[test]
    fn matches_u_series() {
        let p = p_polynomials(12).unwrap();
        for s in [Scalar::ratio(5, 2), Scalar::int(3), Scalar::ratio(10, 3)] {
            let u = u_coefficients(&s, 12).unwrap();
            let sm1 = &s - &Scalar::int(1);
            for n in 1..=12u32 {
                let lhs = u.coeff(n as usize + 2) * &(&sm1 * &sm1) * deformed_factorial(n, &s);
                assert_eq!(lhs, p[n as usize].eval(&s), "n = {n}, s = {s}");
            }
        }
    }
}
