//! Schröder function `Ψ` and its inverse `Φ` for the logistic map:
//! float evaluation off the series zone, conjugates about the other fixed
//! point, the branches of `Ψ` met along the potential path, and the
//! continuous-time flow `f_t = Φ(s^t Ψ)`.

mod branches;
mod conjugate;
mod interp;
mod quadratic;
mod trajectory;

pub use branches::{branch_continuity, psi_branches, psi_on_recipe, PsiBranch, BRANCH_GRID};
pub use conjugate::{conjugate_phi_star, conjugate_psi, phi_star_direct, psi_star, psi_star_direct, Conjugate};
pub use interp::MonotoneCubic;
pub use quadratic::{extension_count, QuadraticMap, SCHRODER_ORDER};
pub use trajectory::{time_grid, trajectory, velocity, Flow, Trajectory, TrajectorySample};

use crate::algebra::Scalar;
use crate::error::{Error, Result};
use crate::math;
use crate::potentials::Sign;

/// `Φ(x, s)` for `s > 1` by scaling to `x / s^k` and unwinding
/// `Φ(s w) = s Φ(w)(1 - Φ(w))` `k` times. `iterates = None` picks the
/// smallest `k` with `|x| / s^k < 0.1`, at most 60.
pub fn eval_phi(x: f64, s: &Scalar, order: usize, iterates: Option<u32>) -> Result<f64> {
    if s.to_f64() <= 1.0 {
        return Err(Error::DomainError("the rescaling route needs s > 1"));
    }
    let map = QuadraticMap::logistic(s, order)?;
    match iterates {
        Some(k) => map.phi_extended(x, k).map(|p| p.0),
        None => map.phi(x),
    }
}

/// One descent step for `s < 1`: `Φ(x) = ½(1 ± √(1 - (4/s) Φ(s x)))`.
pub fn eval_phi_descend(x: f64, s: &Scalar, sign: Sign, order: usize) -> Result<f64> {
    let sf = s.to_f64();
    if !(sf > 0.0 && sf < 1.0) {
        return Err(Error::DomainError("descent needs 0 < s < 1"));
    }
    let inner = QuadraticMap::logistic(s, order)?.phi(sf * x)?;
    let r = 1.0 - 4.0 / sf * inner;
    if r < 0.0 {
        return Err(Error::DomainError("descent radicand is negative"));
    }
    let root = math::sqrt(r);
    Ok(match sign {
        Sign::Plus => 0.5 * (1.0 + root),
        Sign::Minus => 0.5 * (1.0 - root),
    })
}
