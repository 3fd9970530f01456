use crate::algebra::Scalar;
use crate::error::{Error, Result};
use crate::math::{self, PI};

/// Closed-form `U(x, s)` for `s ∈ {-2, 2, 4}`.
///
/// * `s = 2`: `¼(1 - 2x)² ln²(1 - 2x)` for `x ≤ ½`
/// * `s = 4`: `x(1 - x) arcsin²√x` for `0 ≤ x ≤ 1`
/// * `s = -2`: `(1/36)(1 + 2x)(3 - 2x)(2π - 3 arccos(x - ½))²` for `-½ ≤ x ≤ 3/2`
pub fn closed_form_u(x: f64, s: &Scalar) -> Result<f64> {
    let s = s.to_f64();
    if s == 2.0 {
        if x > 0.5 {
            return Err(Error::DomainError("s = 2 closed form needs x <= 1/2"));
        }
        let y = 1.0 - 2.0 * x;
        if y == 0.0 {
            return Ok(0.0);
        }
        let l = math::ln(y);
        Ok(0.25 * y * y * l * l)
    } else if s == 4.0 {
        if !(0.0..=1.0).contains(&x) {
            return Err(Error::DomainError("s = 4 closed form needs 0 <= x <= 1"));
        }
        let a = math::asin(math::sqrt(x));
        Ok(x * (1.0 - x) * a * a)
    } else if s == -2.0 {
        if !(-0.5..=1.5).contains(&x) {
            return Err(Error::DomainError("s = -2 closed form needs -1/2 <= x <= 3/2"));
        }
        let g = 2.0 * PI - 3.0 * math::acos(x - 0.5);
        Ok((1.0 + 2.0 * x) * (3.0 - 2.0 * x) * g * g / 36.0)
    } else {
        Err(Error::DomainError("closed forms exist only for s = -2, 2, 4"))
    }
}

/// `V = -(ln s)² U`.
pub fn v_from_u(u: f64, s: &Scalar) -> Result<f64> {
    let s = s.to_f64();
    if s <= 0.0 || s == 1.0 {
        return Err(Error::DomainError("V needs s > 0 and s != 1"));
    }
    let l = math::ln(s);
    Ok(-l * l * u)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alternative_s_four_expression() {
        let x = 0.3;
        let alt = 0.25 * x * (1.0 - x) * (PI - libm::acos(2.0 * x - 1.0)).powi(2);
        assert!((closed_form_u(x, &Scalar::int(4)).unwrap() - alt).abs() < 1e-15);
    }

    #[test]
    fn zeros_and_domains() {
        assert_eq!(closed_form_u(0.0, &Scalar::int(2)).unwrap(), 0.0);
        assert_eq!(closed_form_u(1.0, &Scalar::int(4)).unwrap(), 0.0);
        assert!(closed_form_u(0.0, &Scalar::int(-2)).unwrap().abs() < 1e-15);
        assert!(closed_form_u(0.6, &Scalar::int(2)).is_err());
        assert!(closed_form_u(0.1, &Scalar::int(3)).is_err());
    }

    #[test]
    fn v_scaling() {
        assert!((v_from_u(1.0, &Scalar::float(core::f64::consts::E)).unwrap() + 1.0).abs() < 1e-15);
        assert_eq!(v_from_u(0.0, &Scalar::ratio(5, 2)).unwrap(), 0.0);
        assert!(v_from_u(1.0, &Scalar::int(1)).is_err());
        assert!(v_from_u(1.0, &Scalar::int(-2)).is_err());
    }
}
