//! Exact substitution of truncated series back into their functional
//! equations. Each function returns the residual coefficients up to the
//! order the truncation can certify; all of them must vanish.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::power_series::PowerSeries;
use crate::algebra::Scalar;
use crate::error::{Error, Result};

/// `a · b` truncated after `x^order`.
pub fn mul_trunc(a: &[BigRational], b: &[BigRational], order: usize) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); order + 1];
    for (i, x) in a.iter().enumerate().take(order + 1) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(order + 1 - i) {
            out[i + j] += x * y;
        }
    }
    out
}

/// `outer(inner(x))` truncated after `x^order`; needs `inner[0] = 0`.
///
/// Runs a homogenized Horner scheme on integer numerators over common
/// denominators, so rationals are reduced only once at the end.
pub fn compose_trunc(outer: &[BigRational], inner: &[BigRational], order: usize) -> Vec<BigRational> {
    assert!(
        inner.first().is_none_or(|c| c.is_zero()),
        "inner series must vanish at 0"
    );
    let outer = &outer[..outer.len().min(order + 1)];
    let (o, d_o) = integer_numerators(outer);
    let (mut i, d_i) = integer_numerators(inner);
    i.truncate(order + 1);
    let m = outer.len().saturating_sub(1);
    let mut d_pow = vec![BigInt::one()];
    for k in 1..=m {
        d_pow.push(&d_pow[k - 1] * &d_i);
    }
    let mut acc = vec![BigInt::zero(); order + 1];
    for (k, c) in o.iter().enumerate().rev() {
        acc = mul_trunc_int(&acc, &i, order);
        acc[0] += c * &d_pow[m - k];
    }
    let den = d_o * &d_pow[m];
    acc.into_iter().map(|a| BigRational::new(a, den.clone())).collect()
}

fn integer_numerators(v: &[BigRational]) -> (Vec<BigInt>, BigInt) {
    let den = v.iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
    let nums = v.iter().map(|c| c.numer() * (&den / c.denom())).collect();
    (nums, den)
}

fn mul_trunc_int(a: &[BigInt], b: &[BigInt], order: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); order + 1];
    for (i, x) in a.iter().enumerate().take(order + 1) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(order + 1 - i) {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    out
}

fn exact_coeffs(series: &PowerSeries) -> Result<Vec<BigRational>> {
    series
        .coefficients
        .iter()
        .map(|c| c.as_exact().cloned().ok_or(Error::ModeMismatch))
        .collect()
}

fn exact_s(series: &PowerSeries) -> Result<BigRational> {
    series.s.as_exact().cloned().ok_or(Error::ModeMismatch)
}

fn ints(v: &[i64]) -> Vec<BigRational> {
    v.iter().map(|&c| BigRational::from_integer(c.into())).collect()
}

/// `U(sx(1-x)) - s²(1-2x)² U(x)` through `x^order` of the U-series.
pub fn u_residual(series: &PowerSeries) -> Result<Vec<BigRational>> {
    let u = exact_coeffs(series)?;
    let s = exact_s(series)?;
    let order = series.order;
    let inner = vec![BigRational::zero(), s.clone(), -s.clone()];
    let lhs = compose_trunc(&u, &inner, order);
    let rhs = mul_trunc(&ints(&[1, -4, 4]), &u, order);
    let s2 = &s * &s;
    Ok(lhs.iter().zip(rhs).map(|(l, r)| l - r * &s2).collect())
}

/// `sΨ(x) - Ψ(sx(1-x))` through `x^order`.
pub fn psi_residual(series: &PowerSeries) -> Result<Vec<BigRational>> {
    let b = exact_coeffs(series)?;
    let s = exact_s(series)?;
    let inner = vec![BigRational::zero(), s.clone(), -s.clone()];
    let rhs = compose_trunc(&b, &inner, series.order);
    Ok(b.iter().zip(rhs).map(|(l, r)| l * &s - r).collect())
}

/// `Φ(sx) - sΦ(x)(1 - Φ(x))` through `x^order`.
pub fn phi_residual(series: &PowerSeries) -> Result<Vec<BigRational>> {
    let d = exact_coeffs(series)?;
    let s = exact_s(series)?;
    let order = series.order;
    let mut scaled = Vec::with_capacity(d.len());
    let mut pow = BigRational::from_integer(1.into());
    for c in &d {
        scaled.push(c * &pow);
        pow *= &s;
    }
    let sq = mul_trunc(&d, &d, order);
    Ok((0..=order).map(|k| &scaled[k] - &s * (&d[k] - &sq[k])).collect())
}

/// `V(x(1-x)) - (1-2x)² V(x)` with `V = -x⁴ (1 + Σ c_n xⁿ)`, through `x^{N+4}`.
pub fn s1_residual(series: &PowerSeries) -> Result<Vec<BigRational>> {
    let c = exact_coeffs(series)?;
    let order = series.order + 4;
    let mut v = vec![BigRational::zero(); 4];
    v.extend(c.iter().map(|x| -x));
    let lhs = compose_trunc(&v, &ints(&[0, 1, -1]), order);
    let rhs = mul_trunc(&ints(&[1, -4, 4]), &v, order);
    Ok(lhs.iter().zip(rhs).map(|(l, r)| l - r).collect())
}

/// `Φ(Ψ(x)) - x` and `Ψ(Φ(x)) - x` through `x^order`.
pub fn reversion_residuals(psi: &PowerSeries, phi: &PowerSeries) -> Result<(Vec<BigRational>, Vec<BigRational>)> {
    let b = exact_coeffs(psi)?;
    let d = exact_coeffs(phi)?;
    let order = psi.order.min(phi.order);
    let id = |mut v: Vec<BigRational>| {
        if v.len() > 1 {
            v[1] -= BigRational::from_integer(1.into());
        }
        v
    };
    Ok((id(compose_trunc(&d, &b, order)), id(compose_trunc(&b, &d, order))))
}

/// True when every residual coefficient is exactly zero.
pub fn all_zero(residual: &[BigRational]) -> bool {
    residual.iter().all(Zero::is_zero)
}

/// Largest `|coefficient|` of a residual, as a float, for reporting.
pub fn max_abs(residual: &[BigRational]) -> f64 {
    residual
        .iter()
        .map(|c| Scalar::Exact(c.clone()).to_f64().abs())
        .fold(0.0, f64::max)
}
