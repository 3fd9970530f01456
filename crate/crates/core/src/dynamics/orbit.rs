use alloc::vec::Vec;

use num_rational::BigRational;
use num_traits::One;

use crate::algebra::Scalar;
use crate::error::{Error, Result};
use crate::math;

/// Iterates of `x ↦ s x (1 - x)`, starting with `x0` itself.
#[derive(Clone, Debug, PartialEq)]
pub struct Orbit {
    pub s: Scalar,
    pub points: Vec<Scalar>,
}

impl Orbit {
    /// `points[k+1] == f(points[k])` for every consecutive pair (exact in exact mode).
    pub fn is_consistent(&self) -> bool {
        self.points.windows(2).all(|w| match (&w[0], &w[1], &self.s) {
            (Scalar::Exact(a), Scalar::Exact(b), Scalar::Exact(s)) => *b == logistic(a, s),
            _ => {
                let (a, b, s) = (w[0].to_f64(), w[1].to_f64(), self.s.to_f64());
                (s * a * (1.0 - a) - b).abs() <= 1e-15 * b.abs().max(1.0)
            }
        })
    }
}

/// `s x (1 - x)` in exact arithmetic.
pub fn logistic(x: &BigRational, s: &BigRational) -> BigRational {
    s * x * (BigRational::one() - x)
}

/// `k` iterates of the map. The returned orbit holds `x0, f(x0), …, f^k(x0)`.
pub fn map_iterate(x0: &Scalar, s: &Scalar, k: usize) -> Result<Orbit> {
    let mut points = Vec::with_capacity(k + 1);
    let mut x = x0.clone();
    points.push(x.clone());
    for _ in 0..k {
        let one = x.one_like();
        x = x.checked_mul(s)?.checked_mul(&one.checked_sub(&x)?)?;
        points.push(x.clone());
    }
    Ok(Orbit { s: s.clone(), points })
}

/// `(0, 1 - 1/s)`.
pub fn fixed_points(s: &Scalar) -> Result<(Scalar, Scalar)> {
    if s.is_zero() {
        return Err(Error::DomainError("fixed points need s != 0"));
    }
    let nontrivial = s.one_like().checked_sub(&s.recip()?)?;
    Ok((s.zero_like(), nontrivial))
}

/// The period-2 orbit `(s + 1 ± √((s + 1)(s - 3))) / (2s)`, smaller point first.
///
/// `f(f(x)) - x` divided by the fixed-point factor `x (s x - s + 1)` leaves
/// `s² x² - s(s + 1) x + (s + 1)`; its roots are real and distinct exactly
/// when `(s + 1)(s - 3) > 0`.
pub fn two_cycle(s: &Scalar) -> Option<(f64, f64)> {
    let s = s.to_f64();
    let disc = (s + 1.0) * (s - 3.0);
    if s == 0.0 || disc.partial_cmp(&0.0) != Some(core::cmp::Ordering::Greater) {
        return None;
    }
    let root = math::sqrt(disc);
    let a = (s + 1.0 - root) / (2.0 * s);
    let b = (s + 1.0 + root) / (2.0 * s);
    Some(if a <= b { (a, b) } else { (b, a) })
}

/// The critical orbit `½, f(½), …`, which lists the turning points.
pub fn critical_orbit(s: &BigRational, k: usize) -> Vec<BigRational> {
    let mut out = Vec::with_capacity(k + 1);
    let mut x = BigRational::new(1.into(), 2.into());
    out.push(x.clone());
    for _ in 0..k {
        x = logistic(&x, s);
        out.push(x.clone());
    }
    out
}
