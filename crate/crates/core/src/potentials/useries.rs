use alloc::vec::Vec;

use crate::algebra::Scalar;
use crate::error::{Error, Result};
use crate::math;
use crate::series::{guard_radius, horner, u_integer_form};

/// Fraction of the radius of convergence inside which the series is trusted.
pub const GUARD_FRACTION: f64 = 0.99;

/// Float evaluator of the truncated U-series at a fixed `s`.
#[derive(Clone, Debug)]
pub struct USeries {
    s: Scalar,
    s_f64: f64,
    /// `[1, a_1, …, a_N]`
    a: Vec<f64>,
    radius: f64,
}

impl USeries {
    /// Coefficients are exact (through the dyadic value of a float `s`) and
    /// rounded once.
    pub fn new(s: &Scalar, order: usize) -> Result<Self> {
        let r = s.to_rational().ok_or(Error::DomainError("s must be finite"))?;
        let form = u_integer_form(&r, order)?;
        let radius = guard_radius(s)?;
        Ok(USeries {
            s: s.clone(),
            s_f64: s.to_f64(),
            a: form.floats(),
            radius,
        })
    }

    pub fn s(&self) -> &Scalar {
        &self.s
    }

    pub fn s_f64(&self) -> f64 {
        self.s_f64
    }

    pub fn order(&self) -> usize {
        self.a.len() - 1
    }

    /// Radius of convergence used for the guard.
    pub fn radius(&self) -> f64 {
        self.radius
    }

    /// `U(x) = x²(1 + Σ a_n xⁿ)`; refuses `|x| ≥ 0.99 R`.
    pub fn eval(&self, x: f64) -> Result<f64> {
        if x.abs() >= GUARD_FRACTION * self.radius {
            return Err(Error::OutOfRadius { x, radius: self.radius });
        }
        Ok(x * x * horner(&self.a, x))
    }

    /// `U₀(x) = s(s - 4x) U(½ - ½√(1 - 4x/s))` for `0 ≤ x ≤ s/4`.
    pub fn eval_u0(&self, x: f64) -> Result<f64> {
        let s = self.s_f64;
        let c = s / 4.0;
        if s > 0.0 && (x < 0.0 || x > c) {
            return Err(Error::DomainError("U0 needs 0 <= x <= s/4"));
        }
        let inner = lower_preimage(x, s)?;
        Ok(s * (s - 4.0 * x) * self.eval(inner)?)
    }

    /// `U₁(x) = s(s - 4x) U₀(½ + ½√(1 - 4x/s))` for `s²(4 - s)/16 ≤ x ≤ s/4`.
    pub fn eval_u1(&self, x: f64) -> Result<f64> {
        let s = self.s_f64;
        let lo = s * s * (4.0 - s) / 16.0;
        let hi = s / 4.0;
        if !(lo.min(hi)..=hi.max(lo)).contains(&x) {
            return Err(Error::DomainError("U1 needs s^2(4-s)/16 <= x <= s/4"));
        }
        let r = radicand(x, s).max(0.0);
        let inner = 0.5 + math::sqrt(r);
        Ok(s * (s - 4.0 * x) * self.eval_u0(inner.min(s / 4.0))?)
    }
}

/// `¼ - x/s`
pub(crate) fn radicand(x: f64, s: f64) -> f64 {
    0.25 - x / s
}

/// `½ - √(¼ - x/s)` written without cancellation near `x = 0`.
pub(crate) fn lower_preimage(x: f64, s: f64) -> Result<f64> {
    let r = radicand(x, s);
    if r < 0.0 {
        return Err(Error::DomainError("argument beyond s/4"));
    }
    Ok((x / s) / (0.5 + math::sqrt(r)))
}

/// `U(x)` at parameter `s` and order `n`.
pub fn eval_u(x: f64, s: &Scalar, n: usize) -> Result<f64> {
    USeries::new(s, n)?.eval(x)
}

pub fn eval_u0(x: f64, s: &Scalar, n: usize) -> Result<f64> {
    USeries::new(s, n)?.eval_u0(x)
}

pub fn eval_u1(x: f64, s: &Scalar, n: usize) -> Result<f64> {
    USeries::new(s, n)?.eval_u1(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn guard_is_enforced() {
        let u = USeries::new(&Scalar::int(2), 60).unwrap();
        assert_eq!(u.eval(0.0).unwrap(), 0.0);
        assert!(matches!(u.eval(0.499), Err(Error::OutOfRadius { .. })));
    }

    #[test]
    fn u0_endpoints_vanish() {
        let u = USeries::new(&Scalar::ratio(5, 2), 120).unwrap();
        assert_eq!(u.eval_u0(0.0).unwrap(), 0.0);
        assert_eq!(u.eval_u0(0.625).unwrap(), 0.0);
        assert!(u.eval_u0(0.63).is_err());
    }
}
