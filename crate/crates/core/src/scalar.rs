//! Scalar types shared by the series and Fock-space code.
//!
//! Exponents, lattice pairings and shifts are always exact [`Rational`]s.
//! Coefficients of q-series and Fock vectors are generic over [`Scalar`], so
//! the same routines can run over exact rationals (the default everywhere in
//! this crate) or over `f64`/`f32` for quick numerical inspection.

use std::fmt::Debug;
use std::ops::Neg;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Num, One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational number.
pub type Rational = BigRational;

/// Coefficient ring for [`crate::qseries::Series`] and [`crate::fock::FockVec`].
pub trait Scalar: Clone + Debug + PartialEq + Num + Neg<Output = Self> + Send + Sync + 'static {
    fn from_rational(q: &Rational) -> Self;

    fn from_integer(n: &BigInt) -> Self {
        Self::from_rational(&Rational::from_integer(n.clone()))
    }

    fn from_count(n: &BigUint) -> Self {
        Self::from_integer(&BigInt::from(n.clone()))
    }
}

impl Scalar for BigRational {
    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }
}

macro_rules! impl_float_scalar {
    ($($t:ty => $conv:ident),*) => {
        $(
            impl Scalar for $t {
                fn from_rational(q: &Rational) -> Self {
                    q.$conv().unwrap_or(<$t>::NAN)
                }
            }
        )*
    };
}

impl_float_scalar!(f64 => to_f64, f32 => to_f32);

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `n / d`, reduced. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"p/q"`, `"p"` or `"-p/q"`; whitespace around the parts is ignored.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

/// Renders as `"p/q"` with a positive denominator, including `"/1"` for integers.
pub fn format_rational(q: &Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// Largest integer `s` with `s*s <= q`, for `q >= 0`.
pub fn floor_sqrt(q: &Rational) -> BigInt {
    debug_assert!(!q.is_negative());
    // floor(sqrt(u/v)) = floor(isqrt(u*v) / v)
    let prod = q.numer() * q.denom();
    prod.sqrt().div_floor(q.denom())
}

pub fn lcm_of_denominators<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()))
}

/// Nonnegative integer value of `q`, if it is one.
pub fn as_nonneg_integer(q: &Rational) -> Option<usize> {
    if q.is_integer() && !q.is_negative() {
        q.to_integer().to_usize()
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rational("3/6").unwrap(), rat(1, 2));
        assert_eq!(parse_rational(" -7 ").unwrap(), int(-7));
        assert_eq!(parse_rational("1/-4").unwrap(), rat(-1, 4));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("0.5").is_err());
        assert_eq!(format_rational(&rat(-2, 4)), "-1/2");
        assert_eq!(format_rational(&int(3)), "3/1");
    }

    #[test]
    fn floor_sqrt_exact() {
        assert_eq!(floor_sqrt(&int(0)), BigInt::zero());
        assert_eq!(floor_sqrt(&int(15)), BigInt::from(3));
        assert_eq!(floor_sqrt(&int(16)), BigInt::from(4));
        assert_eq!(floor_sqrt(&rat(9, 4)), BigInt::from(1));
        assert_eq!(floor_sqrt(&rat(1, 4)), BigInt::zero());
        assert_eq!(floor_sqrt(&rat(49, 3)), BigInt::from(4));
    }

    #[test]
    fn float_scalars_convert() {
        assert_eq!(<f64 as Scalar>::from_rational(&rat(3, 4)), 0.75);
        assert_eq!(<f32 as Scalar>::from_integer(&BigInt::from(-2)), -2.0);
    }
}
