use crate::error::{Error, Result};
use crate::math;
use crate::quadrature::{exp_sinh, gauss_kronrod, gauss_kronrod_semi_infinite, DeOptions};

/// `√(2e³)`, the scale of the pole in `I(x)`.
pub fn pole_scale() -> f64 {
    math::sqrt(2.0 * math::exp(3.0))
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PvOptions {
    /// Half-width of the excised interval as a fraction of the pole position.
    pub epsilon_fraction: f64,
    /// Absolute tolerance of each quadrature piece.
    pub tolerance: f64,
}

impl Default for PvOptions {
    fn default() -> Self {
        PvOptions {
            epsilon_fraction: 1e-3,
            tolerance: 1e-12,
        }
    }
}

const MAX_INTERVALS: usize = 4000;

/// Principal value of `I(x) = ∫₀^∞ e^{-y} / (1 - x y / √(2e³)) dy`.
pub fn pv_integral(x: f64) -> Result<f64> {
    pv_integral_with(x, PvOptions::default())
}

/// [`pv_integral`] with explicit options.
///
/// For `x ≤ 0` the integrand is smooth and the exp-sinh rule is used. For
/// `x > 0` the pole at `y₀ = √(2e³)/x` is excised over `|y - y₀| < ε`;
/// the excised piece is `(2 e^{-y₀}/κ) Shi(ε)` exactly, with `κ = 1/y₀`,
/// and the two outer pieces go to adaptive Gauss–Kronrod.
pub fn pv_integral_with(x: f64, opts: PvOptions) -> Result<f64> {
    if !x.is_finite() {
        return Err(Error::DomainError("x must be finite"));
    }
    if x == 0.0 {
        return Ok(1.0);
    }
    let kappa = x / pole_scale();
    let f = move |y: f64| math::exp(-y) / (1.0 - kappa * y);
    if x < 0.0 {
        let de = DeOptions {
            tolerance: opts.tolerance,
            ..DeOptions::default()
        };
        return exp_sinh(|y| Ok(f(y)), 0.0, de).map(|r| r.value);
    }
    let y0 = 1.0 / kappa;
    let eps = opts.epsilon_fraction * y0;
    let core = 2.0 * math::exp(-y0) / kappa * shi(eps);
    // beyond ~745 the weight e^{-y} underflows; nothing left to integrate
    let left_end = (y0 - eps).min(760.0);
    let left = gauss_kronrod(f, 0.0, left_end, opts.tolerance, MAX_INTERVALS)?.value;
    let right = if y0 + eps < 760.0 {
        gauss_kronrod_semi_infinite(f, y0 + eps, opts.tolerance, MAX_INTERVALS)?.value
    } else {
        0.0
    };
    Ok(left + core + right)
}

/// `∫₀^∞ e^{-y}/(1 - κ y) dy` by Gauss–Kronrod with no pole treatment; `x ≤ 0` only.
pub fn direct_integral(x: f64) -> Result<f64> {
    if x > 0.0 {
        return Err(Error::DomainError("the direct route has no pole handling"));
    }
    let kappa = x / pole_scale();
    gauss_kronrod_semi_infinite(|y| math::exp(-y) / (1.0 - kappa * y), 0.0, 1e-13, MAX_INTERVALS).map(|r| r.value)
}

/// `Shi(z) = ∫₀^z sinh(t)/t dt = Σ z^{2k+1} / ((2k+1)(2k+1)!)`, for `|z| ≲ 10`.
pub fn shi(z: f64) -> f64 {
    let z2 = z * z;
    let mut term = z; // z^{2k+1}/(2k+1)!
    let mut sum = z;
    let mut k = 0;
    loop {
        k += 1;
        let m = (2 * k) as f64;
        term *= z2 / (m * (m + 1.0));
        let add = term / (m + 1.0);
        sum += add;
        if add.abs() <= 1e-17 * sum.abs() || k > 200 {
            return sum;
        }
    }
}

/// Coefficients `f_n = n!/(2e³)^{n/2}` of the asymptotic expansion `I(x) ~ Σ f_n xⁿ`.
pub fn asymptotic_coefficient(n: usize) -> f64 {
    let mut f = 1.0;
    let inv = 1.0 / pole_scale();
    for k in 1..=n {
        f *= k as f64 * inv;
    }
    f
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shi_matches_quadrature() {
        let q = gauss_kronrod(|t| if t == 0.0 { 1.0 } else { libm::sinh(t) / t }, 0.0, 1.5, 1e-15, 100).unwrap();
        assert!((shi(1.5) - q.value).abs() < 1e-14);
        assert_eq!(shi(0.0), 0.0);
    }

    #[test]
    fn trivial_value() {
        assert_eq!(pv_integral(0.0).unwrap(), 1.0);
        assert!(direct_integral(0.5).is_err());
    }
}
