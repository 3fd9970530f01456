//! Coefficients of `U(x,s) = x²(1 + Σ a_n xⁿ)`.
//!
//! With `s = P/Q` and `F_k = P^k - Q^k`, every `a_n` has the form
//! `α_n / Δ_n` with `Δ_n = F_1 F_2 … F_n` and integer `α_n`. The recursion
//! is carried out on the `α_n` alone, so no gcd is ever taken and the
//! float coefficients are correctly rounded quotients of exact integers.
//! Running the recursion in `f64` directly is useless for `s > 1`: the
//! cancellation in the alternating sum loses all digits well before n = 200.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::power_series::PowerSeries;
use crate::algebra::{big_ratio_to_f64, binomial_table, ln_abs_big, Scalar};
use crate::error::{Error, Result};

/// Integer numerators `α_n` and factors `F_k` of the U-series at `s = P/Q`.
#[derive(Clone, Debug)]
pub struct UIntegerForm {
    pub p: BigInt,
    pub q: BigInt,
    /// `alpha[n] = a_n Δ_n`, `alpha[0] = 1`.
    pub alpha: Vec<BigInt>,
    /// `factors[k] = P^k - Q^k`; `factors[0]` is unused and zero.
    pub factors: Vec<BigInt>,
}

impl UIntegerForm {
    pub fn order(&self) -> usize {
        self.alpha.len() - 1
    }

    /// `Δ_n` for `n = 0..=order`.
    pub fn deltas(&self) -> Vec<BigInt> {
        let mut out = Vec::with_capacity(self.alpha.len());
        let mut d = BigInt::one();
        out.push(d.clone());
        for f in &self.factors[1..self.alpha.len()] {
            d *= f;
            out.push(d.clone());
        }
        out
    }

    /// Exact reduced `a_n`, `n = 0..=order`.
    pub fn rationals(&self) -> Vec<BigRational> {
        self.alpha
            .iter()
            .zip(self.deltas())
            .map(|(a, d)| BigRational::new(a.clone(), d))
            .collect()
    }

    /// Correctly rounded `a_n`, `n = 0..=order`.
    pub fn floats(&self) -> Vec<f64> {
        self.alpha
            .iter()
            .zip(self.deltas())
            .map(|(a, d)| big_ratio_to_f64(a, &d))
            .collect()
    }

    /// `ln |a_n|`, `None` where `a_n = 0`.
    pub fn ln_abs(&self) -> Vec<Option<f64>> {
        let mut ln_delta = 0.0;
        let mut out = Vec::with_capacity(self.alpha.len());
        for (n, a) in self.alpha.iter().enumerate() {
            if n > 0 {
                ln_delta += ln_abs_big(&self.factors[n]);
            }
            out.push((!a.is_zero()).then(|| ln_abs_big(a) - ln_delta));
        }
        out
    }
}

/// Runs the integer recursion up to `a_{n_max}`.
pub fn u_integer_form(s: &BigRational, n_max: usize) -> Result<UIntegerForm> {
    if s.is_zero() {
        return Err(Error::DomainError("s = 0 has no U-series"));
    }
    let p = s.numer().clone();
    let q = s.denom().clone();
    let top = n_max.max(2) + 2;
    let mut pp = vec![BigInt::one()];
    let mut qp = vec![BigInt::one()];
    for k in 1..=top {
        pp.push(&pp[k - 1] * &p);
        qp.push(&qp[k - 1] * &q);
    }
    let factors: Vec<BigInt> = (0..=top).map(|k| &pp[k] - &qp[k]).collect();
    // a_1 needs 1 - s, a_2 also 1 + s, a_{n+2} needs 1 - s^{n+2}
    for (k, f) in factors.iter().enumerate().take(n_max.max(2) + 1).skip(1) {
        if f.is_zero() {
            return Err(Error::DegenerateParameter { power: k });
        }
    }
    let binom = binomial_table(top + 1);

    let mut alpha = Vec::with_capacity(n_max.max(2) + 1);
    alpha.push(BigInt::one());
    alpha.push(-BigInt::from(2) * &q);
    alpha.push((BigInt::from(5) * &q - BigInt::from(3) * &p) * &qp[2]);

    for n in 1..n_max.saturating_sub(1) {
        let jmin = 1 + (n - 1) / 2;
        let mut acc = BigInt::zero();
        for j in jmin..=n + 1 {
            if j > jmin {
                acc *= &factors[j];
            }
            let mut w = &binom[j + 2][n + 2 - j] * &pp[j] * &qp[n + 2 - j] * &alpha[j];
            if (n + 1 - j) % 2 == 0 {
                w = -w;
            }
            acc += w;
        }
        let q_pow = &qp[n + 2];
        let lead = BigInt::from(4) * q_pow * &alpha[n + 1];
        let back = BigInt::from(4) * q_pow * &factors[n + 1] * &alpha[n];
        alpha.push(-(lead - back + acc));
    }
    alpha.truncate(n_max.max(1) + 1);
    Ok(UIntegerForm { p, q, alpha, factors })
}

/// The exact rational a float-mode or exact-mode `s` stands for.
pub(crate) fn exact_parameter(s: &Scalar) -> Result<BigRational> {
    s.to_rational().ok_or(Error::DomainError("s must be a finite number"))
}

/// U-series about 0 with `a_1..a_N`: `coefficients = [0, 0, 1, a_1, …, a_N]`.
///
/// Exact for exact `s`. For float `s` the coefficients are computed exactly
/// at the dyadic rational equal to `s` and then rounded.
pub fn u_coefficients(s: &Scalar, n: usize) -> Result<PowerSeries> {
    let r = exact_parameter(s)?;
    let form = u_integer_form(&r, n)?;
    let mut coefficients = vec![s.zero_like(), s.zero_like(), s.one_like()];
    if s.is_exact() {
        coefficients.extend(form.rationals().into_iter().skip(1).map(Scalar::Exact));
    } else {
        coefficients.extend(form.floats().into_iter().skip(1).map(Scalar::Float));
    }
    coefficients.truncate(n + 3);
    Ok(PowerSeries::new(s.zero_like(), s.clone(), coefficients))
}

/// `a_n` of a U-series produced by [`u_coefficients`].
pub fn u_a(series: &PowerSeries, n: usize) -> &Scalar {
    series.coeff(n + 2)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// The printed recursion in plain rational arithmetic.
    #[allow(clippy::needless_range_loop)]
    fn reference(s: &BigRational, n_max: usize) -> Vec<BigRational> {
        let one = BigRational::one();
        let mut a = vec![one.clone()];
        a.push(BigRational::from_integer(2.into()) / (&one - s));
        let sm1 = s - &one;
        a.push(
            (BigRational::from_integer(5.into()) - BigRational::from_integer(3.into()) * s)
                / (&sm1 * &sm1 * (s + &one)),
        );
        for n in 1..n_max - 1 {
            let mut sum = BigRational::from_integer(4.into()) * (&a[n + 1] - &a[n]);
            for j in (1 + (n - 1) / 2)..=n + 1 {
                let c = crate::algebra::binomial(j + 2, n + 2 - j);
                let term = &a[j] * num_traits::pow(s.clone(), j) * BigRational::from_integer(c);
                if (n + 1 - j) % 2 == 1 {
                    sum += term;
                } else {
                    sum -= term;
                }
            }
            a.push(sum / (&one - num_traits::pow(s.clone(), n + 2)));
        }
        a
    }

    #[test]
    fn integer_form_matches_reference() {
        for (p, q) in [(5, 2), (3, 1), (10, 3), (7, 2), (1, 2), (-2, 1), (3, 4)] {
            let s = BigRational::new(p.into(), q.into());
            let form = u_integer_form(&s, 30).unwrap();
            assert_eq!(form.rationals(), reference(&s, 30), "s = {p}/{q}");
        }
    }

    #[test]
    fn degenerate_parameters_are_named() {
        let one = BigRational::one();
        assert_eq!(
            u_integer_form(&one, 10).unwrap_err(),
            Error::DegenerateParameter { power: 1 }
        );
        assert_eq!(
            u_integer_form(&-one, 10).unwrap_err(),
            Error::DegenerateParameter { power: 2 }
        );
    }

    #[test]
    fn series_layout() {
        let u = u_coefficients(&Scalar::ratio(5, 2), 4).unwrap();
        assert_eq!(u.order, 6);
        assert_eq!(u.coefficients[..3], [Scalar::int(0), Scalar::int(0), Scalar::int(1)]);
        assert_eq!(u_a(&u, 1), &Scalar::ratio(-4, 3));
        assert_eq!(u_a(&u, 2), &Scalar::ratio(-20, 63));
    }

    #[test]
    fn log_magnitudes() {
        let s = BigRational::new(10.into(), 3.into());
        let form = u_integer_form(&s, 60).unwrap();
        let exact = form.rationals();
        for (n, l) in form.ln_abs().iter().enumerate() {
            let v = crate::algebra::rational_to_f64(&exact[n]).abs();
            assert!((l.unwrap() - libm::log(v)).abs() < 1e-12);
        }
    }
}
