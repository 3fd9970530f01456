use alloc::vec::Vec;

use crate::algebra::Scalar;

/// Truncated expansion `Σ coefficients[k] (x - center)^k`, `k = 0..=order`.
#[derive(Clone, Debug, PartialEq)]
pub struct PowerSeries {
    pub center: Scalar,
    pub s: Scalar,
    pub coefficients: Vec<Scalar>,
    pub order: usize,
}

impl PowerSeries {
    /// Panics unless `coefficients.len() == order + 1`.
    pub fn new(center: Scalar, s: Scalar, coefficients: Vec<Scalar>) -> Self {
        assert!(
            !coefficients.is_empty(),
            "a power series needs at least one coefficient"
        );
        let order = coefficients.len() - 1;
        PowerSeries {
            center,
            s,
            coefficients,
            order,
        }
    }

    pub fn coeff(&self, k: usize) -> &Scalar {
        &self.coefficients[k]
    }

    pub fn is_exact(&self) -> bool {
        self.coefficients.iter().all(Scalar::is_exact)
    }

    /// Coefficients demoted to `f64`.
    pub fn float_coefficients(&self) -> Vec<f64> {
        self.coefficients.iter().map(Scalar::to_f64).collect()
    }

    pub fn to_float(&self) -> Self {
        PowerSeries {
            center: self.center.to_float(),
            s: self.s.to_float(),
            coefficients: self.coefficients.iter().map(Scalar::to_float).collect(),
            order: self.order,
        }
    }

    /// Horner evaluation at `x` in float arithmetic.
    pub fn eval_f64(&self, x: f64) -> f64 {
        horner(&self.float_coefficients(), x - self.center.to_f64())
    }
}

/// `Σ c[k] x^k`
pub fn horner(c: &[f64], x: f64) -> f64 {
    c.iter().rev().fold(0.0, |acc, &a| acc * x + a)
}

/// `(Σ c[k] x^k, Σ k c[k] x^{k-1})`
pub fn horner_with_derivative(c: &[f64], x: f64) -> (f64, f64) {
    let mut p = 0.0;
    let mut dp = 0.0;
    for &a in c.iter().rev() {
        dp = dp * x + p;
        p = p * x + a;
    }
    (p, dp)
}
