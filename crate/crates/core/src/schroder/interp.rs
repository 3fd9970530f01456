use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Shape-preserving piecewise cubic Hermite interpolant (Fritsch–Carlson).
#[derive(Clone, Debug)]
pub struct MonotoneCubic {
    xs: Vec<f64>,
    ys: Vec<f64>,
    slopes: Vec<f64>,
}

impl MonotoneCubic {
    /// `xs` must be strictly increasing with at least two points.
    pub fn new(xs: Vec<f64>, ys: Vec<f64>) -> Result<Self> {
        let n = xs.len();
        if n < 2 || ys.len() != n || xs.windows(2).any(|w| w[1] <= w[0]) {
            return Err(Error::DomainError("interpolation needs >= 2 increasing abscissae"));
        }
        let secants: Vec<f64> = (0..n - 1).map(|i| (ys[i + 1] - ys[i]) / (xs[i + 1] - xs[i])).collect();
        let mut slopes = Vec::with_capacity(n);
        slopes.push(secants[0]);
        for i in 1..n - 1 {
            let (a, b) = (secants[i - 1], secants[i]);
            slopes.push(if a * b <= 0.0 { 0.0 } else { 0.5 * (a + b) });
        }
        slopes.push(secants[n - 2]);
        for (i, &d) in secants.iter().enumerate() {
            if d == 0.0 {
                slopes[i] = 0.0;
                slopes[i + 1] = 0.0;
                continue;
            }
            let a = slopes[i] / d;
            let b = slopes[i + 1] / d;
            let r = a * a + b * b;
            if r > 9.0 {
                let t = 3.0 / libm::sqrt(r);
                slopes[i] = t * a * d;
                slopes[i + 1] = t * b * d;
            }
        }
        Ok(MonotoneCubic { xs, ys, slopes })
    }

    pub fn xs(&self) -> &[f64] {
        &self.xs
    }

    pub fn ys(&self) -> &[f64] {
        &self.ys
    }

    /// `None` outside the tabulated range.
    pub fn eval(&self, x: f64) -> Option<f64> {
        let n = self.xs.len();
        if x < self.xs[0] || x > self.xs[n - 1] {
            return None;
        }
        let i = match self.xs.partition_point(|&v| v <= x) {
            0 => 0,
            k if k >= n => n - 2,
            k => k - 1,
        };
        let h = self.xs[i + 1] - self.xs[i];
        let t = (x - self.xs[i]) / h;
        let t2 = t * t;
        let t3 = t2 * t;
        let h00 = 2.0 * t3 - 3.0 * t2 + 1.0;
        let h10 = t3 - 2.0 * t2 + t;
        let h01 = -2.0 * t3 + 3.0 * t2;
        let h11 = t3 - t2;
        Some(h00 * self.ys[i] + h10 * h * self.slopes[i] + h01 * self.ys[i + 1] + h11 * h * self.slopes[i + 1])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reproduces_nodes_and_cubics_closely() {
        let xs: Vec<f64> = (0..=50).map(|i| i as f64 / 50.0).collect();
        let ys: Vec<f64> = xs.iter().map(|x| x * x * x + x).collect();
        let m = MonotoneCubic::new(xs.clone(), ys.clone()).unwrap();
        for (x, y) in xs.iter().zip(&ys) {
            assert_eq!(m.eval(*x).unwrap(), *y);
        }
        assert!((m.eval(0.333).unwrap() - (0.333f64.powi(3) + 0.333)).abs() < 1e-4);
        assert_eq!(m.eval(1.5), None);
    }

    #[test]
    fn stays_monotone_on_steps() {
        let m = MonotoneCubic::new(alloc::vec![0.0, 1.0, 2.0, 3.0], alloc::vec![0.0, 0.0, 1.0, 1.0]).unwrap();
        let mut last = -1.0;
        for i in 0..=300 {
            let v = m.eval(i as f64 / 100.0).unwrap();
            assert!(v >= last && (0.0..=1.0).contains(&v));
            last = v;
        }
    }
}
