use alloc::vec::Vec;

use super::quadratic::QuadraticMap;
use crate::algebra::Scalar;
use crate::error::{Error, Result};
use crate::math;

/// One sample of the continuous orbit.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TrajectorySample {
    pub t: f64,
    pub x: f64,
    /// `dx/dt`
    pub velocity: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Trajectory {
    pub s: Scalar,
    pub x0: f64,
    pub samples: Vec<TrajectorySample>,
}

/// The interpolating flow `f_t(x) = Φ(s^t Ψ(x))`.
#[derive(Clone, Debug)]
pub struct Flow {
    map: QuadraticMap,
    s: Scalar,
    ln_s: f64,
}

impl Flow {
    /// Needs `1 < s <= 4`.
    pub fn new(s: &Scalar, order: usize) -> Result<Self> {
        let sf = s.to_f64();
        if !(sf > 1.0 && sf <= 4.0) {
            return Err(Error::DomainError("the flow needs 1 < s <= 4"));
        }
        Ok(Flow {
            map: QuadraticMap::logistic(s, order)?,
            s: s.clone(),
            ln_s: math::ln(sf),
        })
    }

    pub fn map(&self) -> &QuadraticMap {
        &self.map
    }

    /// `Ψ(x0)` on the principal branch; needs `0 <= x0 <= s/4`.
    pub fn psi0(&self, x0: f64) -> Result<f64> {
        let c = self.map.lambda / 4.0;
        if !(0.0..=c).contains(&x0) {
            return Err(Error::DomainError("start point must lie in [0, s/4]"));
        }
        self.map.psi(x0)
    }

    /// `(x(t), dx/dt)` with `dx/dt = ln s · w Φ'(w)`, `w = s^t Ψ(x0)`.
    pub fn at(&self, x0: f64, t: f64) -> Result<(f64, f64)> {
        let w = math::powf(self.map.lambda, t) * self.psi0(x0)?;
        let (x, dphi) = self.map.phi_with_derivative(w)?;
        Ok((x, self.ln_s * w * dphi))
    }

    /// `f_t(x0)`.
    pub fn position(&self, x0: f64, t: f64) -> Result<f64> {
        self.at(x0, t).map(|p| p.0)
    }

    pub fn trajectory(&self, x0: f64, times: &[f64]) -> Result<Trajectory> {
        let samples = times
            .iter()
            .map(|&t| {
                let (x, velocity) = self.at(x0, t)?;
                Ok(TrajectorySample { t, x, velocity })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Trajectory {
            s: self.s.clone(),
            x0,
            samples,
        })
    }
}

/// Samples of `x(t) = Φ(s^t Ψ(x0))` on `times`.
pub fn trajectory(x0: f64, s: &Scalar, times: &[f64], order: usize) -> Result<Trajectory> {
    Flow::new(s, order)?.trajectory(x0, times)
}

/// `dx/dt` at time `t`.
pub fn velocity(x0: f64, s: &Scalar, t: f64, order: usize) -> Result<f64> {
    Flow::new(s, order)?.at(x0, t).map(|p| p.1)
}

/// `t0, t0 + dt, …` up to and including `t1` (to rounding).
pub fn time_grid(t0: f64, t1: f64, dt: f64) -> Result<Vec<f64>> {
    if dt.is_nan() || dt <= 0.0 || t1 < t0 {
        return Err(Error::DomainError("time grid needs dt > 0 and t1 >= t0"));
    }
    let steps = ((t1 - t0) / dt + 1e-9) as usize;
    Ok((0..=steps).map(|k| t0 + k as f64 * dt).collect())
}
