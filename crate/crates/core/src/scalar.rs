//! Coefficient types.
//!
//! Every algebraic structure in this crate is generic over [`Scalar`]. The
//! verifiers are only meaningful over [`Rational`](crate::Rational); the
//! floating-point impls exist for evaluation and mesh export.

use std::fmt::{Debug, Display};
use std::ops::Neg;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Num, One, Signed, ToPrimitive, Zero};

/// A field of coefficients.
pub trait Scalar: Num + Neg<Output = Self> + Clone + PartialEq + Debug + Display + Send + Sync + 'static {
    /// Whether row reduction may treat this value as zero.
    ///
    /// Exact for rationals; floats use a small absolute threshold.
    fn is_negligible(&self) -> bool {
        self.is_zero()
    }

    fn from_rational(r: &BigRational) -> Self;

    fn from_i64(n: i64) -> Self;

    fn to_f64(&self) -> f64;

    /// Whether all arithmetic on this type is exact.
    fn is_exact() -> bool;
}

impl Scalar for BigRational {
    fn from_rational(r: &BigRational) -> Self {
        r.clone()
    }

    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or_else(|| {
            // Huge numerators or denominators: divide as floats after scaling.
            let n = self.numer().to_f64().unwrap_or(f64::NAN);
            let d = self.denom().to_f64().unwrap_or(f64::NAN);
            n / d
        })
    }

    fn is_exact() -> bool {
        true
    }
}

macro_rules! impl_float_scalar {
    ($t:ty, $eps:expr) => {
        impl Scalar for $t {
            fn is_negligible(&self) -> bool {
                self.abs() <= $eps
            }

            fn from_rational(r: &BigRational) -> Self {
                <BigRational as Scalar>::to_f64(r) as $t
            }

            fn from_i64(n: i64) -> Self {
                n as $t
            }

            fn to_f64(&self) -> f64 {
                *self as f64
            }

            fn is_exact() -> bool {
                false
            }
        }
    };
}

impl_float_scalar!(f64, 1e-12);
impl_float_scalar!(f32, 1e-6);

/// Parses `p/q`, an integer, or a finite decimal such as `-0.25` into an
/// exact rational.
pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    if s.is_empty() {
        return None;
    }
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().ok()?;
        let d: BigInt = d.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        return Some(BigRational::new(n, d));
    }
    if let Some((int, frac)) = s.split_once('.') {
        let negative = int.starts_with('-');
        let int_digits = int.trim_start_matches(['-', '+']);
        if !frac.chars().all(|c| c.is_ascii_digit())
            || !int_digits.chars().all(|c| c.is_ascii_digit())
            || (int_digits.is_empty() && frac.is_empty())
        {
            return None;
        }
        let digits = format!("{int_digits}{frac}");
        let n: BigInt = if digits.is_empty() {
            BigInt::zero()
        } else {
            digits.parse().ok()?
        };
        let d = num_traits::pow(BigInt::from(10), frac.len());
        let r = BigRational::new(n, d);
        return Some(if negative { -r } else { r });
    }
    let n: BigInt = s.parse().ok()?;
    Some(BigRational::from_integer(n))
}

/// Renders a rational as `p/q` (or `p` when the denominator is one).
pub fn format_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Serde helper writing a rational in [`format_rational`] form.
pub fn serialize_rational<S: serde::Serializer>(r: &BigRational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&format_rational(r))
}

/// Exact `r^(num/den)` for positive `r`, when the root is rational.
pub fn rational_power(r: &BigRational, num: u32, den: u32) -> Option<BigRational> {
    if !r.is_positive() || den == 0 {
        return None;
    }
    let g = num_integer::Integer::gcd(&num, &den).max(1);
    let (num, den) = (num / g, den / g);
    let root = |n: &BigInt| -> Option<BigInt> {
        let c = n.nth_root(den);
        (num_traits::pow(c.clone(), den as usize) == *n).then_some(c)
    };
    let n = root(r.numer())?;
    let d = root(r.denom())?;
    Some(num_traits::pow(BigRational::new(n, d), num as usize))
}
