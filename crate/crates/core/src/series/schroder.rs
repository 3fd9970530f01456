//! Schröder `Ψ` and Poincaré `Φ` series for `h(z) = λz + μz²` about `z = 0`.
//!
//! Matching powers in `Ψ(h(z)) = λΨ(z)` gives
//! `(λ - λⁿ) b_n = Σ_{k=⌈n/2⌉}^{n-1} b_k C(k, n-k) λ^{2k-n} μ^{n-k}`,
//! and matching `Φ(λz) = λΦ(z) + μΦ(z)²` gives
//! `(λⁿ - λ) d_n = μ Σ_{i=1}^{n-1} d_i d_{n-i}`.
//! The logistic map is `λ = s, μ = -s`.

use alloc::vec;
use alloc::vec::Vec;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::power_series::PowerSeries;
use super::u::exact_parameter;
use crate::algebra::{binomial_table, Scalar};
use crate::error::{Error, Result};

fn check_multiplier(lambda: &BigRational, n_max: usize) -> Result<Vec<BigRational>> {
    if lambda.is_zero() {
        return Err(Error::DomainError("multiplier must be nonzero"));
    }
    let mut pow = vec![BigRational::one()];
    for k in 1..=n_max.max(1) {
        pow.push(&pow[k - 1] * lambda);
        if k < n_max && pow[k].is_one() {
            return Err(Error::DegenerateParameter { power: k });
        }
    }
    Ok(pow)
}

/// Exact `b_0..=b_N` of `Ψ` with `b_0 = 0`, `b_1 = 1`.
pub fn schroder_coefficients(lambda: &BigRational, mu: &BigRational, n_max: usize) -> Result<Vec<BigRational>> {
    let lp = check_multiplier(lambda, n_max)?;
    let mut mp = vec![BigRational::one()];
    for k in 1..=n_max {
        mp.push(&mp[k - 1] * mu);
    }
    let binom = binomial_table(n_max);
    let mut b = vec![BigRational::zero(), BigRational::one()];
    for n in 2..=n_max {
        let mut sum = BigRational::zero();
        for k in n.div_ceil(2)..n {
            if b[k].is_zero() {
                continue;
            }
            let c = BigRational::from_integer(binom[k][n - k].clone());
            sum += &b[k] * c * &lp[2 * k - n] * &mp[n - k];
        }
        b.push(sum / (lambda - &lp[n]));
    }
    b.truncate(n_max + 1);
    Ok(b)
}

/// Exact `d_0..=d_N` of `Φ = Ψ⁻¹` with `d_0 = 0`, `d_1 = 1`.
pub fn poincare_coefficients(lambda: &BigRational, mu: &BigRational, n_max: usize) -> Result<Vec<BigRational>> {
    let lp = check_multiplier(lambda, n_max)?;
    let mut d = vec![BigRational::zero(), BigRational::one()];
    for n in 2..=n_max {
        let mut conv = BigRational::zero();
        for i in 1..n {
            conv += &d[i] * &d[n - i];
        }
        d.push(mu * conv / (&lp[n] - lambda));
    }
    d.truncate(n_max + 1);
    Ok(d)
}

fn to_series(s: &Scalar, coeffs: Vec<BigRational>) -> PowerSeries {
    let coefficients = if s.is_exact() {
        coeffs.into_iter().map(Scalar::Exact).collect()
    } else {
        coeffs.into_iter().map(|c| Scalar::Exact(c).to_float()).collect()
    };
    PowerSeries::new(s.zero_like(), s.clone(), coefficients)
}

/// Ψ-series of the logistic map about 0.
pub fn psi_coefficients(s: &Scalar, n: usize) -> Result<PowerSeries> {
    let r = exact_parameter(s)?;
    Ok(to_series(s, schroder_coefficients(&r, &-&r, n)?))
}

/// Φ-series of the logistic map about 0.
pub fn phi_coefficients(s: &Scalar, n: usize) -> Result<PowerSeries> {
    let r = exact_parameter(s)?;
    Ok(to_series(s, poincare_coefficients(&r, &-&r, n)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(p: i64, d: i64) -> BigRational {
        BigRational::new(p.into(), d.into())
    }

    #[test]
    fn second_coefficients() {
        let s = q(5, 2);
        let b = schroder_coefficients(&s, &-&s, 4).unwrap();
        let d = poincare_coefficients(&s, &-&s, 4).unwrap();
        assert_eq!(b[2], q(2, 3));
        assert_eq!(d[2], q(-2, 3));
    }

    #[test]
    fn s_equal_two_is_a_logarithm() {
        // -½ ln(1 - 2x) = Σ 2^{n-1} xⁿ / n,  ½(1 - e^{-2x}) = Σ (-1)^{n+1} 2^{n-1} xⁿ / n!
        let two = q(2, 1);
        let b = schroder_coefficients(&two, &-&two, 12).unwrap();
        let d = poincare_coefficients(&two, &-&two, 12).unwrap();
        let mut fact = BigRational::one();
        for n in 1..=12usize {
            fact *= q(n as i64, 1);
            let pow = q(1i64 << (n - 1), 1);
            assert_eq!(b[n], &pow / q(n as i64, 1));
            let sign = if n % 2 == 1 { q(1, 1) } else { q(-1, 1) };
            assert_eq!(d[n], sign * pow / &fact);
        }
    }

    #[test]
    fn roots_of_unity_are_rejected() {
        let m1 = q(-1, 1);
        assert_eq!(
            schroder_coefficients(&m1, &q(1, 1), 5).unwrap_err(),
            Error::DegenerateParameter { power: 2 }
        );
        assert_eq!(
            psi_coefficients(&Scalar::int(1), 5).unwrap_err(),
            Error::DegenerateParameter { power: 1 }
        );
    }
}
