use super::quadratic::{QuadraticMap, SCHRODER_ORDER};
use crate::algebra::Scalar;
use crate::error::{Error, Result};
use crate::potentials::dual_parameter;

/// Which conjugate of `Ψ₀` to evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Conjugate {
    /// Schröder function about the nontrivial fixed point,
    /// `Ψ*(x,s) = (s*/s) Ψ₀(s x / s*, s*)` with `s* = 2 - s`.
    Star,
    /// `Ψ_g(x,s) = (1-s)/(2-s) + s/(2-s) Ψ₀((s - 1 + (2-s) x)/s, s)`.
    G,
}

fn check_parameter(s: &Scalar) -> Result<f64> {
    let sf = s.to_f64();
    if sf == 2.0 {
        return Err(Error::DomainError("conjugates need s != 2"));
    }
    if sf == 0.0 {
        return Err(Error::DomainError("conjugates need s != 0"));
    }
    Ok(sf)
}

/// `Ψ*` or `Ψ_g` at `x`, both through `Ψ₀`.
pub fn conjugate_psi(kind: Conjugate, x: f64, s: &Scalar, order: usize) -> Result<f64> {
    let sf = check_parameter(s)?;
    match kind {
        Conjugate::Star => {
            let dual = dual_parameter(s);
            let sd = dual.to_f64();
            let psi0 = QuadraticMap::logistic(&dual, order)?;
            Ok(sd / sf * psi0.psi(sf * x / sd)?)
        }
        Conjugate::G => {
            let psi0 = QuadraticMap::logistic(s, order)?;
            let a = (1.0 - sf) / (2.0 - sf);
            let b = sf / (2.0 - sf);
            let u = (sf - 1.0 + (2.0 - sf) * x) / sf;
            Ok(a + b * psi0.psi(u)?)
        }
    }
}

/// `Φ* = (Ψ*)⁻¹` through `Φ₀` at the dual parameter: `Φ*(w) = (s*/s) Φ₀(s w / s*, s*)`.
pub fn conjugate_phi_star(w: f64, s: &Scalar, order: usize) -> Result<f64> {
    let sf = check_parameter(s)?;
    let dual = dual_parameter(s);
    let sd = dual.to_f64();
    let phi0 = QuadraticMap::logistic(&dual, order)?;
    Ok(sd / sf * phi0.phi(sf * w / sd)?)
}

/// `Ψ*` from its own series, for `h(y) = (2 - s) y - s y²`.
pub fn psi_star_direct(y: f64, s: &Scalar, order: usize) -> Result<f64> {
    check_parameter(s)?;
    QuadraticMap::star(s, order)?.psi(y)
}

/// `Φ*` from its own series.
pub fn phi_star_direct(w: f64, s: &Scalar, order: usize) -> Result<f64> {
    check_parameter(s)?;
    QuadraticMap::star(s, order)?.phi(w)
}

/// `Ψ*` at the default series order.
pub fn psi_star(y: f64, s: &Scalar) -> Result<f64> {
    conjugate_psi(Conjugate::Star, y, s, SCHRODER_ORDER)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reference_g_value() {
        let v = conjugate_psi(Conjugate::G, 1.5, &Scalar::int(4), SCHRODER_ORDER).unwrap();
        assert!((v - 1.5).abs() < 1e-15);
    }

    #[test]
    fn star_vanishes_at_origin() {
        assert_eq!(psi_star(0.0, &Scalar::ratio(3, 2)).unwrap(), 0.0);
        assert!(psi_star(0.1, &Scalar::int(2)).is_err());
    }
}
