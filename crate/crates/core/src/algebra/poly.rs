use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::scalar::{rational_to_f64, Scalar};

/// Polynomial in `s` with exact rational coefficients, ascending degree.
///
/// Trailing zeros are always trimmed, so the zero polynomial has no
/// coefficients and no degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SPolynomial {
    coeffs: Vec<BigRational>,
}

impl SPolynomial {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        SPolynomial { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigRational::from_integer(c.into())).collect())
    }

    pub fn zero() -> Self {
        SPolynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: BigRational) -> Self {
        Self::new(vec![c])
    }

    /// `c · s^k`
    pub fn monomial(c: BigRational, k: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    pub fn coefficients(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// True when every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn scale_int(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiply by `s^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigRational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        SPolynomial { coeffs }
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &SPolynomial) -> (SPolynomial, SPolynomial) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead = &divisor.coeffs[dd];
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree() else {
            return (Self::zero(), Self::zero());
        };
        if nd < dd {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![BigRational::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let c = &rem[k + dd] / lead;
            if !c.is_zero() {
                for (i, d) in divisor.coeffs.iter().enumerate() {
                    rem[k + i] -= &c * d;
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Self::new(quot), Self::new(rem))
    }

    /// Horner evaluation; exact for exact `s`, float otherwise.
    pub fn eval(&self, s: &Scalar) -> Scalar {
        match s {
            Scalar::Exact(r) => {
                let mut acc = BigRational::zero();
                for c in self.coeffs.iter().rev() {
                    acc = acc * r + c;
                }
                Scalar::Exact(acc)
            }
            Scalar::Float(v) => {
                let mut acc = 0.0;
                for c in self.coeffs.iter().rev() {
                    acc = acc * v + rational_to_f64(c);
                }
                Scalar::Float(acc)
            }
        }
    }
}

/// Horner evaluation of `p` at `s`.
pub fn poly_eval(p: &SPolynomial, s: &Scalar) -> Scalar {
    p.eval(s)
}

impl Add for &SPolynomial {
    type Output = SPolynomial;
    fn add(self, rhs: &SPolynomial) -> SPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        SPolynomial::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &SPolynomial {
    type Output = SPolynomial;
    fn sub(self, rhs: &SPolynomial) -> SPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        SPolynomial::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &SPolynomial {
    type Output = SPolynomial;
    fn mul(self, rhs: &SPolynomial) -> SPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return SPolynomial::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        SPolynomial::new(out)
    }
}

impl Neg for &SPolynomial {
    type Output = SPolynomial;
    fn neg(self) -> SPolynomial {
        SPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for SPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            let show_coeff = k == 0 || !mag.is_one();
            if show_coeff {
                if mag.is_integer() {
                    write!(f, "{}", mag.numer())?;
                } else {
                    write!(f, "{}/{}", mag.numer(), mag.denom())?;
                }
            }
            match k {
                0 => {}
                1 => f.write_str(if show_coeff { "*s" } else { "s" })?,
                _ => write!(f, "{}s^{k}", if show_coeff { "*" } else { "" })?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn division_by_linear_factor() {
        // (1 - s)(2 + 3s) = 2 + s - 3s^2
        let p = SPolynomial::from_ints(&[2, 1, -3]);
        let (q, r) = p.div_rem(&SPolynomial::from_ints(&[1, -1]));
        assert_eq!(q, SPolynomial::from_ints(&[2, 3]));
        assert!(r.is_zero());
    }

    #[test]
    fn display_is_readable() {
        assert_eq!(SPolynomial::from_ints(&[5, -3]).to_string(), "5 - 3*s");
        assert_eq!(SPolynomial::from_ints(&[0, 1, 0, -2]).to_string(), "s - 2*s^3");
        assert_eq!(SPolynomial::zero().to_string(), "0");
    }

    #[test]
    fn trimming_keeps_degree_well_defined() {
        let p = SPolynomial::from_ints(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert_eq!(SPolynomial::from_ints(&[0, 0]).degree(), None);
    }
}
