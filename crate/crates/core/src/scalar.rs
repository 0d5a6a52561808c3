//! Scalar abstraction shared by every solver in the crate.
//!
//! All algorithms are written against [`Scalar`], an *exact* ordered field.
//! The solvers compare values for equality and rely on pivots never
//! rounding, so only exact types qualify. Implementations are provided for
//! arbitrary-precision rationals (the crate default, see [`crate::Rational`])
//! and for fixed-width `Ratio<i64>` / `Ratio<i128>`, which are faster but can
//! overflow on large instances.

use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{FromPrimitive, Num, One, Signed, ToPrimitive, Zero};

pub trait Scalar: 'static + Clone + Ord + Num + Signed + FromPrimitive + Debug + Display + Send + Sync {
    /// Exact conversion from a big rational, `None` if it does not fit.
    fn from_big(value: &BigRational) -> Option<Self>;

    /// Exact conversion to a big rational.
    fn to_big(&self) -> BigRational;

    fn from_usize_exact(n: usize) -> Self {
        Self::from_usize(n).expect("usize fits every exact scalar")
    }

    fn ratio(num: i64, den: i64) -> Self {
        Self::from_i64(num).expect("i64 numerator") / Self::from_i64(den).expect("i64 denominator")
    }

    fn recip_exact(&self) -> Self {
        Self::one() / self.clone()
    }
}

impl Scalar for BigRational {
    fn from_big(value: &BigRational) -> Option<Self> {
        Some(value.clone())
    }

    fn to_big(&self) -> BigRational {
        self.clone()
    }
}

macro_rules! impl_fixed_ratio {
    ($int:ty, $to:ident, $from:ident) => {
        impl Scalar for Ratio<$int> {
            fn from_big(value: &BigRational) -> Option<Self> {
                let num = value.numer().$to()?;
                let den = value.denom().$to()?;
                Some(Ratio::new(num, den))
            }

            fn to_big(&self) -> BigRational {
                BigRational::new(BigInt::$from(*self.numer()).unwrap(), BigInt::$from(*self.denom()).unwrap())
            }
        }
    };
}

impl_fixed_ratio!(i64, to_i64, from_i64);
impl_fixed_ratio!(i128, to_i128, from_i128);

/// Canonical `p/q` rendering (`p` alone when the denominator is one).
pub fn format_exact<T: Scalar>(value: &T) -> String {
    let big = value.to_big();
    if big.denom().is_one() {
        big.numer().to_string()
    } else {
        format!("{}/{}", big.numer(), big.denom())
    }
}

/// Error returned by [`parse_exact`].
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid rational literal `{0}`")]
pub struct ParseRationalError(pub String);

/// Parses `[+-]digits`, `[+-]digits/digits` or `[+-]digits.digits` exactly.
pub fn parse_exact<T: Scalar>(text: &str) -> Result<T, ParseRationalError> {
    let err = || ParseRationalError(text.to_string());
    let s = text.trim();
    let (negative, body) = match s.as_bytes().first() {
        Some(b'-') => (true, &s[1..]),
        Some(b'+') => (false, &s[1..]),
        _ => (false, s),
    };
    let digits = |part: &str| !part.is_empty() && part.bytes().all(|b| b.is_ascii_digit());

    let value = if let Some((num, den)) = body.split_once('/') {
        if !digits(num) || !digits(den) {
            return Err(err());
        }
        let den: BigInt = den.parse().map_err(|_| err())?;
        if den.is_zero() {
            return Err(err());
        }
        BigRational::new(num.parse().map_err(|_| err())?, den)
    } else if let Some((int, frac)) = body.split_once('.') {
        if !digits(int) || !digits(frac) {
            return Err(err());
        }
        let scale = num_traits::pow(BigInt::from(10u32), frac.len());
        let numer: BigInt = format!("{int}{frac}").parse().map_err(|_| err())?;
        BigRational::new(numer, scale)
    } else {
        if !digits(body) {
            return Err(err());
        }
        BigRational::from_integer(body.parse().map_err(|_| err())?)
    };
    let value = if negative { -value } else { value };
    T::from_big(&value).ok_or_else(err)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::Rational64;

    #[test]
    fn parses_fraction_exactly() {
        let third: BigRational = parse_exact("1/3").unwrap();
        assert_eq!(third, BigRational::new(1.into(), 3.into()));
        assert_eq!(format_exact(&third), "1/3");
    }

    #[test]
    fn parses_decimals_and_signs() {
        let v: BigRational = parse_exact("-0.25").unwrap();
        assert_eq!(format_exact(&v), "-1/4");
        let w: Rational64 = parse_exact("+12").unwrap();
        assert_eq!(w, Rational64::from_integer(12));
        let z: BigRational = parse_exact("6/4").unwrap();
        assert_eq!(format_exact(&z), "3/2");
    }

    #[test]
    fn rejects_malformed_literals() {
        for bad in ["", "1/0", "1/", "/2", "1.", ".5", "1e3", "--1", "1/2/3", "0x10", " "] {
            assert!(parse_exact::<BigRational>(bad).is_err(), "{bad:?} accepted");
        }
    }

    #[test]
    fn fixed_width_overflow_is_reported() {
        assert!(parse_exact::<Rational64>("100000000000000000000000").is_err());
    }
}
