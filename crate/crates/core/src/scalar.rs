//! Scalar abstraction shared by the metric, bound and construction code.
//!
//! Exact work uses [`Rational`](crate::Rational) (big rationals). Floating
//! point types are supported so that an `r` obtained from channel
//! probabilities can be pushed through the same code paths; those results are
//! subject to rounding and are never used for bound decisions inside the CLI.

use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::{BigRational, Ratio};
use num_traits::{FromPrimitive, Num, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// A number type usable as `r` and as a discrepancy value.
pub trait Scalar: Num + Clone + PartialOrd + Debug + Display + Send + Sync {
    /// Converts a non-negative count.
    fn from_count(n: u64) -> Self;

    /// Converts a signed integer.
    fn from_int(n: i64) -> Self;

    /// Largest integer `<= self`.
    fn floor_int(&self) -> BigInt;

    /// Smallest integer `>= self`.
    fn ceil_int(&self) -> BigInt;

    fn is_integral(&self) -> bool;

    fn to_f64(&self) -> f64;

    /// Canonical text form: `num/den` for rationals, shortest round-trip
    /// decimal for floats.
    fn render(&self) -> String;
}

macro_rules! float_scalar {
    ($t:ty) => {
        impl Scalar for $t {
            fn from_count(n: u64) -> Self {
                n as $t
            }
            fn from_int(n: i64) -> Self {
                n as $t
            }
            fn floor_int(&self) -> BigInt {
                BigInt::from_f64(self.floor() as f64).expect("finite value")
            }
            fn ceil_int(&self) -> BigInt {
                BigInt::from_f64(self.ceil() as f64).expect("finite value")
            }
            fn is_integral(&self) -> bool {
                self.fract() == 0.0
            }
            fn to_f64(&self) -> f64 {
                *self as f64
            }
            fn render(&self) -> String {
                format!("{}", self)
            }
        }
    };
}

float_scalar!(f32);
float_scalar!(f64);

impl Scalar for Ratio<i64> {
    fn from_count(n: u64) -> Self {
        Ratio::from_integer(i64::try_from(n).expect("count fits in i64"))
    }
    fn from_int(n: i64) -> Self {
        Ratio::from_integer(n)
    }
    fn floor_int(&self) -> BigInt {
        BigInt::from(self.numer().div_floor(self.denom()))
    }
    fn ceil_int(&self) -> BigInt {
        BigInt::from(self.numer().div_ceil(self.denom()))
    }
    fn is_integral(&self) -> bool {
        self.is_integer()
    }
    fn to_f64(&self) -> f64 {
        *self.numer() as f64 / *self.denom() as f64
    }
    fn render(&self) -> String {
        format!("{}/{}", self.numer(), self.denom())
    }
}

impl Scalar for BigRational {
    fn from_count(n: u64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }
    fn from_int(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }
    fn floor_int(&self) -> BigInt {
        self.numer().div_floor(self.denom())
    }
    fn ceil_int(&self) -> BigInt {
        self.numer().div_ceil(self.denom())
    }
    fn is_integral(&self) -> bool {
        self.is_integer()
    }
    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
    fn render(&self) -> String {
        format!("{}/{}", self.numer(), self.denom())
    }
}

/// Largest integer strictly below `a`.
///
/// Differs from [`Scalar::floor_int`] exactly when `a` is an integer.
pub fn strict_floor<S: Scalar>(a: &S) -> BigInt {
    if a.is_integral() {
        a.floor_int() - 1
    } else {
        a.floor_int()
    }
}

/// Checks `r >= 1`.
pub fn require_r<S: Scalar>(r: &S) -> Result<()> {
    if *r < S::one() {
        Err(Error::Parameter(format!("r = {} must be >= 1", r.render())))
    } else {
        Ok(())
    }
}

/// Parses `a/b` or a bare integer into an exact rational.
///
/// Decimal notation is rejected.
pub fn parse_rational(text: &str) -> Result<BigRational> {
    let text = text.trim();
    let bad = || {
        Error::Parameter(format!(
            "expected a rational `a/b` or an integer, got `{text}`"
        ))
    };
    let (num, den) = match text.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (text, "1"),
    };
    let is_int = |s: &str| {
        let digits = s.strip_prefix(['-', '+']).unwrap_or(s);
        !digits.is_empty() && digits.bytes().all(|c| c.is_ascii_digit())
    };
    if !is_int(num) || !is_int(den) {
        return Err(bad());
    }
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(Error::Parameter("zero denominator".into()));
    }
    Ok(BigRational::new(num, den))
}

/// Builds an exact rational `num/den`.
pub fn rational(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub(crate) fn is_positive<S: Scalar>(a: &S) -> bool {
    *a > S::zero()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn strict_floor_differs_on_integers() {
        assert_eq!(strict_floor(&rational(1, 1)), BigInt::from(0));
        assert_eq!(strict_floor(&rational(6, 5)), BigInt::from(1));
        assert_eq!(strict_floor(&rational(3, 2)), BigInt::from(1));
        assert_eq!(strict_floor(&2.0f64), BigInt::from(1));
        assert_eq!(strict_floor(&Ratio::new(7i64, 2)), BigInt::from(3));
    }

    #[test]
    fn ceil_and_floor_of_negative_values() {
        let a = rational(-7, 2);
        assert_eq!(a.floor_int(), BigInt::from(-4));
        assert_eq!(a.ceil_int(), BigInt::from(-3));
        assert_eq!((-3.5f64).ceil_int(), BigInt::from(-3));
    }

    #[test]
    fn parse_accepts_fractions_and_integers() {
        assert_eq!(parse_rational("3/2").unwrap(), rational(3, 2));
        assert_eq!(parse_rational("6/4").unwrap(), rational(3, 2));
        assert_eq!(parse_rational(" 5 ").unwrap(), rational(5, 1));
        assert_eq!(parse_rational("-1/3").unwrap(), rational(-1, 3));
    }

    #[test]
    fn parse_rejects_floats_and_garbage() {
        for bad in ["1.5", "1e3", "", "/", "1/0", "a/b", "2/"] {
            assert!(parse_rational(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn render_is_canonical() {
        assert_eq!(rational(6, 4).render(), "3/2");
        assert_eq!(rational(4, 1).render(), "4/1");
        assert_eq!(Ratio::new(10i64, 4).render(), "5/2");
    }

    #[test]
    fn r_below_one_is_rejected() {
        assert!(require_r(&rational(1, 2)).is_err());
        assert!(require_r(&rational(1, 1)).is_ok());
        assert!(require_r(&0.99f64).is_err());
    }
}
