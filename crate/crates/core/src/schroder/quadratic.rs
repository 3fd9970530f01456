use alloc::vec::Vec;

use num_rational::BigRational;

use crate::algebra::{rational_to_f64, Scalar};
use crate::error::{Error, Result};
use crate::math;
use crate::series::{horner, horner_with_derivative, poincare_coefficients, radius_formula, schroder_coefficients};

/// Order of the Ψ and Φ series used for float evaluation.
pub const SCHRODER_ORDER: usize = 40;

const MAX_DESCENT: usize = 400;
const MAX_EXTENSION: u32 = 60;

/// Float evaluator of `Ψ` and `Φ = Ψ⁻¹` for `h(z) = λz + μz²` about `z = 0`.
///
/// Series coefficients are computed exactly and rounded once. Arguments
/// outside the series zone are brought in with the functional equations:
/// inverse-branch descent (|λ| > 1) or forward iteration (|λ| < 1) for Ψ,
/// and the quadratic extension for Φ.
#[derive(Clone, Debug)]
pub struct QuadraticMap {
    pub lambda: f64,
    pub mu: f64,
    psi: Vec<f64>,
    phi: Vec<f64>,
    /// Ψ-series is used for |z| below this.
    psi_zone: f64,
    /// Φ-series is used for |w| below this.
    phi_zone: f64,
}

impl QuadraticMap {
    pub fn new(lambda: &BigRational, mu: &BigRational, order: usize) -> Result<Self> {
        let l = rational_to_f64(lambda);
        let m = rational_to_f64(mu);
        if m == 0.0 {
            return Err(Error::DomainError("quadratic coefficient must be nonzero"));
        }
        if (l.abs() - 1.0).abs() < 1e-12 {
            return Err(Error::DegenerateParameter { power: 1 });
        }
        let psi: Vec<f64> = schroder_coefficients(lambda, mu, order)?
            .iter()
            .map(rational_to_f64)
            .collect();
        let phi: Vec<f64> = poincare_coefficients(lambda, mu, order)?
            .iter()
            .map(rational_to_f64)
            .collect();
        // h is conjugate to the logistic map with parameter λ by z = (λ/-μ) x
        let scale = (l / m).abs();
        let r = radius_formula(l).unwrap_or(0.5).min(0.5);
        // Φ-coefficients decay like ∏ 1/(λᵏ - λ), slowly when |λ| is near 1
        let gap = (l.abs() - 1.0).abs().min(1.0);
        Ok(QuadraticMap {
            lambda: l,
            mu: m,
            psi,
            phi,
            psi_zone: 0.2 * scale * r,
            phi_zone: 0.1 * scale * gap,
        })
    }

    /// `x ↦ s x (1 - x)`.
    pub fn logistic(s: &Scalar, order: usize) -> Result<Self> {
        let r = s.to_rational().ok_or(Error::DomainError("s must be finite"))?;
        Self::new(&r, &-&r, order)
    }

    /// `z ↦ (2 - s) z - s z²`, the logistic map about its nontrivial fixed point.
    pub fn star(s: &Scalar, order: usize) -> Result<Self> {
        let r = s.to_rational().ok_or(Error::DomainError("s must be finite"))?;
        let two = BigRational::from_integer(2.into());
        Self::new(&(&two - &r), &-&r, order)
    }

    pub fn map(&self, z: f64) -> f64 {
        z * (self.lambda + self.mu * z)
    }

    /// Inverse branch of `h` through the origin.
    pub fn inverse_near_zero(&self, z: f64) -> Result<f64> {
        let mut disc = self.lambda * self.lambda + 4.0 * self.mu * z;
        if disc < 0.0 && disc > -1e-14 * self.lambda * self.lambda {
            // z is the critical value up to rounding
            disc = 0.0;
        }
        if disc < 0.0 {
            return Err(Error::DomainError("argument beyond the critical value"));
        }
        let root = math::sqrt(disc);
        let denom = self.lambda + if self.lambda > 0.0 { root } else { -root };
        Ok(2.0 * z / denom)
    }

    /// Raw Ψ-series.
    pub fn psi_series(&self, z: f64) -> f64 {
        horner(&self.psi, z)
    }

    /// Raw Φ-series.
    pub fn phi_series(&self, w: f64) -> f64 {
        horner(&self.phi, w)
    }

    pub fn psi(&self, z: f64) -> Result<f64> {
        self.psi_with_derivative(z).map(|(v, _)| v)
    }

    /// `(Ψ(z), Ψ'(z))` on the branch continuous with the series at 0.
    pub fn psi_with_derivative(&self, z: f64) -> Result<(f64, f64)> {
        let mut z = z;
        let mut scale = 1.0;
        let mut dscale = 1.0;
        if self.lambda.abs() > 1.0 {
            // Ψ(z) = λ Ψ(w), w = h⁻¹(z); dw/dz = 1/h'(w)
            let mut k = 0;
            while z.abs() >= self.psi_zone {
                let w = self.inverse_near_zero(z)?;
                dscale /= self.lambda + 2.0 * self.mu * w;
                scale *= self.lambda;
                z = w;
                k += 1;
                if k > MAX_DESCENT {
                    return Err(Error::NonConvergence("Ψ descent"));
                }
            }
        } else {
            // Ψ(z) = Ψ(h(z)) / λ
            let mut k = 0;
            while z.abs() >= self.psi_zone {
                dscale *= self.lambda + 2.0 * self.mu * z;
                z = self.map(z);
                scale /= self.lambda;
                k += 1;
                if k > MAX_DESCENT || !z.is_finite() || z.abs() > 1e6 {
                    return Err(Error::NonConvergence("Ψ orbit does not approach 0"));
                }
            }
        }
        let (v, dv) = horner_with_derivative(&self.psi, z);
        Ok((scale * v, scale * dscale * dv))
    }

    pub fn phi(&self, w: f64) -> Result<f64> {
        self.phi_with_derivative(w).map(|(v, _)| v)
    }

    /// `(Φ(w), Φ'(w))`.
    ///
    /// For |λ| > 1 the argument is scaled by `λ^{-k}` and the extension
    /// `Φ(λw) = h(Φ(w))` is unwound `k` times. For |λ| < 1 the inverse
    /// extension `Φ(w) = h⁻¹(Φ(λw))` is used with the root through 0.
    pub fn phi_with_derivative(&self, w: f64) -> Result<(f64, f64)> {
        if self.lambda.abs() > 1.0 {
            let k = extension_count(w, self.lambda, self.phi_zone)?;
            self.phi_extended(w, k)
        } else {
            let mut scaled = w;
            let mut k = 0;
            while scaled.abs() >= self.phi_zone {
                scaled *= self.lambda;
                k += 1;
                if k > MAX_DESCENT {
                    return Err(Error::NonConvergence("Φ descent"));
                }
            }
            let (mut y, mut dy) = horner_with_derivative(&self.phi, scaled);
            for _ in 0..k {
                // y_prev = h⁻¹(y): derivative chain dy_prev/dw = λ dy / h'(y_prev)
                let prev = self.inverse_near_zero(y)?;
                dy = self.lambda * dy / (self.lambda + 2.0 * self.mu * prev);
                y = prev;
            }
            Ok((y, dy))
        }
    }

    /// Φ through exactly `k` extension steps (|λ| > 1).
    pub fn phi_extended(&self, w: f64, k: u32) -> Result<(f64, f64)> {
        let scaled = w / math::powi(self.lambda, k as i32);
        let (mut y, mut dy) = horner_with_derivative(&self.phi, scaled);
        dy /= math::powi(self.lambda, k as i32);
        for _ in 0..k {
            dy *= self.lambda + 2.0 * self.mu * y;
            y = self.map(y);
        }
        Ok((y, dy))
    }
}

/// Smallest `k` with `|w| / |λ|^k < zone`, at most 60.
pub fn extension_count(w: f64, lambda: f64, zone: f64) -> Result<u32> {
    let mut k = 0;
    let mut a = w.abs();
    while a >= zone {
        a /= lambda.abs();
        k += 1;
        if k > MAX_EXTENSION {
            return Err(Error::NonConvergence("argument too large for 60 extension steps"));
        }
    }
    Ok(k)
}
