use super::useries::USeries;
use crate::algebra::Scalar;
use crate::error::{Error, Result};
use crate::math;

/// The dual parameter `s* = 2 - s`.
pub fn dual_parameter(s: &Scalar) -> Scalar {
    match s {
        Scalar::Exact(r) => Scalar::Exact(num_rational::BigRational::from_integer(2.into()) - r),
        Scalar::Float(v) => Scalar::Float(2.0 - v),
    }
}

/// `U(x, s)` through the series at `s* = 2 - s`:
/// `U(x,s) = ((2-s) ln(2-s) / (s ln s))² U(s/(2-s) (x - (1 - 1/s)), 2 - s)`.
pub fn dual_transform_u(x: f64, s: &Scalar, n: usize) -> Result<f64> {
    let sf = s.to_f64();
    if !(sf > 0.0 && sf < 2.0 && sf != 1.0) {
        return Err(Error::DomainError("dual transform needs s in (0,1) or (1,2)"));
    }
    let dual = USeries::new(&dual_parameter(s), n)?;
    dual_transform_with(x, sf, &dual)
}

/// As [`dual_transform_u`] with a prebuilt series at `2 - s`.
pub fn dual_transform_with(x: f64, s: f64, dual: &USeries) -> Result<f64> {
    let sd = 2.0 - s;
    let y = s / sd * (x - (1.0 - 1.0 / s));
    let factor = sd * math::ln(sd) / (s * math::ln(s));
    Ok(factor * factor * dual.eval(y)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixed_point_maps_to_origin() {
        assert!(dual_transform_u(1.0 / 3.0, &Scalar::ratio(3, 2), 40).unwrap().abs() < 1e-30);
    }

    #[test]
    fn outside_the_strip_is_refused() {
        assert!(dual_transform_u(0.1, &Scalar::ratio(5, 2), 40).is_err());
        assert!(dual_transform_u(0.1, &Scalar::int(1), 40).is_err());
    }
}
