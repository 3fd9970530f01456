use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::math;

/// A number that is either an exact reduced rational or an `f64`.
///
/// The two modes never mix implicitly: the `checked_*` methods return
/// [`Error::ModeMismatch`], and the operator impls panic on a mismatch.
/// Use [`Scalar::to_float`] to demote explicitly.
#[derive(Clone, Debug, PartialEq)]
pub enum Scalar {
    Exact(BigRational),
    Float(f64),
}

impl Scalar {
    pub fn int(v: i64) -> Self {
        Scalar::Exact(BigRational::from_integer(v.into()))
    }

    /// Exact `p/q`. Panics if `q == 0`.
    pub fn ratio(p: i64, q: i64) -> Self {
        Scalar::Exact(BigRational::new(p.into(), q.into()))
    }

    pub fn float(v: f64) -> Self {
        Scalar::Float(v)
    }

    pub fn exact(v: BigRational) -> Self {
        Scalar::Exact(v)
    }

    /// The exact dyadic rational equal to a finite `f64`.
    pub fn exact_from_f64(v: f64) -> Option<Self> {
        BigRational::from_float(v).map(Scalar::Exact)
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Scalar::Exact(_))
    }

    pub fn as_exact(&self) -> Option<&BigRational> {
        match self {
            Scalar::Exact(r) => Some(r),
            Scalar::Float(_) => None,
        }
    }

    /// Exact value, converting a float through its dyadic expansion.
    pub fn to_rational(&self) -> Option<BigRational> {
        match self {
            Scalar::Exact(r) => Some(r.clone()),
            Scalar::Float(v) => BigRational::from_float(*v),
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Scalar::Exact(r) => rational_to_f64(r),
            Scalar::Float(v) => *v,
        }
    }

    /// Explicit demotion to float mode.
    pub fn to_float(&self) -> Self {
        Scalar::Float(self.to_f64())
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Exact(r) => r.is_zero(),
            Scalar::Float(v) => *v == 0.0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Exact(r) => r.is_one(),
            Scalar::Float(v) => *v == 1.0,
        }
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Scalar::Exact(r) => r.is_negative(),
            Scalar::Float(v) => *v < 0.0,
        }
    }

    /// `v` in the same mode as `self`.
    pub fn like(&self, v: i64) -> Self {
        match self {
            Scalar::Exact(_) => Scalar::int(v),
            Scalar::Float(_) => Scalar::Float(v as f64),
        }
    }

    pub fn zero_like(&self) -> Self {
        self.like(0)
    }

    pub fn one_like(&self) -> Self {
        self.like(1)
    }

    pub fn abs(&self) -> Self {
        match self {
            Scalar::Exact(r) => Scalar::Exact(r.abs()),
            Scalar::Float(v) => Scalar::Float(v.abs()),
        }
    }

    pub fn powi(&self, k: i32) -> Self {
        match self {
            Scalar::Exact(r) => Scalar::Exact(num_traits::pow::Pow::pow(r, k)),
            Scalar::Float(v) => Scalar::Float(math::powi(*v, k)),
        }
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DomainError("reciprocal of zero"));
        }
        Ok(match self {
            Scalar::Exact(r) => Scalar::Exact(r.recip()),
            Scalar::Float(v) => Scalar::Float(1.0 / v),
        })
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self> {
        match (self, rhs) {
            (Scalar::Exact(a), Scalar::Exact(b)) => Ok(Scalar::Exact(a + b)),
            (Scalar::Float(a), Scalar::Float(b)) => Ok(Scalar::Float(a + b)),
            _ => Err(Error::ModeMismatch),
        }
    }

    pub fn checked_sub(&self, rhs: &Self) -> Result<Self> {
        match (self, rhs) {
            (Scalar::Exact(a), Scalar::Exact(b)) => Ok(Scalar::Exact(a - b)),
            (Scalar::Float(a), Scalar::Float(b)) => Ok(Scalar::Float(a - b)),
            _ => Err(Error::ModeMismatch),
        }
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self> {
        match (self, rhs) {
            (Scalar::Exact(a), Scalar::Exact(b)) => Ok(Scalar::Exact(a * b)),
            (Scalar::Float(a), Scalar::Float(b)) => Ok(Scalar::Float(a * b)),
            _ => Err(Error::ModeMismatch),
        }
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        match (self, rhs) {
            (Scalar::Exact(_), Scalar::Exact(b)) if b.is_zero() => Err(Error::DomainError("division by zero")),
            (Scalar::Exact(a), Scalar::Exact(b)) => Ok(Scalar::Exact(a / b)),
            (Scalar::Float(a), Scalar::Float(b)) => Ok(Scalar::Float(a / b)),
            _ => Err(Error::ModeMismatch),
        }
    }

    /// Ordering by value; exact values compare exactly.
    pub fn cmp_value(&self, rhs: &Self) -> Ordering {
        match (self, rhs) {
            (Scalar::Exact(a), Scalar::Exact(b)) => a.cmp(b),
            _ => self.to_f64().partial_cmp(&rhs.to_f64()).unwrap_or(Ordering::Equal),
        }
    }
}

impl From<BigRational> for Scalar {
    fn from(v: BigRational) -> Self {
        Scalar::Exact(v)
    }
}

impl From<f64> for Scalar {
    fn from(v: f64) -> Self {
        Scalar::Float(v)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Exact(r) if r.denom().is_one() => write!(f, "{}", r.numer()),
            Scalar::Exact(r) => write!(f, "{}/{}", r.numer(), r.denom()),
            Scalar::Float(v) => write!(f, "{v:e}"),
        }
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                self.$checked(rhs).expect("scalar arithmetic")
            }
        }
        impl $trait<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$checked(&rhs).expect("scalar arithmetic")
            }
        }
        impl $trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$checked(rhs).expect("scalar arithmetic")
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);
binop!(Div, div, checked_div);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Exact(r) => Scalar::Exact(-r),
            Scalar::Float(v) => Scalar::Float(-v),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -(self.clone())
    }
}

/// Correctly scaled `num / den` as `f64`, without forming a reduced rational.
///
/// Works for operands far beyond the `f64` exponent range as long as the
/// quotient itself is representable.
pub fn big_ratio_to_f64(num: &BigInt, den: &BigInt) -> f64 {
    if num.is_zero() {
        return 0.0;
    }
    let negative = (num.sign() == Sign::Minus) != (den.sign() == Sign::Minus);
    let n = num.magnitude();
    let d = den.magnitude();
    let shift = 64 - (n.bits() as i64 - d.bits() as i64);
    let q = if shift >= 0 {
        (n << shift as usize).div_floor(d)
    } else {
        n.div_floor(&(d << (-shift) as usize))
    };
    let mag = q.to_f64().unwrap_or(f64::INFINITY);
    let shift = shift.clamp(-4000, 4000) as i32;
    let v = math::ldexp(mag, -shift);
    if negative {
        -v
    } else {
        v
    }
}

pub fn rational_to_f64(r: &BigRational) -> f64 {
    big_ratio_to_f64(r.numer(), r.denom())
}

/// Natural log of `|v|` for integers of any size.
pub fn ln_abs_big(v: &BigInt) -> f64 {
    let bits = v.bits();
    if bits <= 1000 {
        return math::ln(v.magnitude().to_f64().unwrap_or(f64::INFINITY));
    }
    let shift = bits - 64;
    let top = (v.magnitude() >> shift as usize).to_f64().unwrap_or(0.0);
    math::ln(top) + shift as f64 * core::f64::consts::LN_2
}
