//! Exact rational arithmetic: the coefficient field for every series in the crate.
//!
//! `Rational` wraps an arbitrary-precision `BigRational` and guarantees the
//! canonical form gcd(|numerator|, denominator) = 1 with denominator >= 1 and
//! zero represented as 0/1. Construction with a zero denominator is a hard
//! error; there is no NaN-like state.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rational(BigRational);

impl Rational {
    /// Builds numerator/denominator in canonical form. `denominator == 0` is
    /// rejected.
    pub fn new(numerator: BigInt, denominator: BigInt) -> Result<Self> {
        if denominator.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Rational(BigRational::new(numerator, denominator)))
    }

    pub fn from_integer<T: Into<BigInt>>(n: T) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn numerator(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denominator(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    /// Reciprocal; division by zero is a hard error.
    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "reciprocal of zero");
        Rational(self.0.recip())
    }

    /// Integer power, negative exponents allowed for nonzero values.
    pub fn pow(&self, exp: i32) -> Self {
        if exp < 0 {
            assert!(!self.is_zero(), "negative power of zero");
        }
        Rational(self.0.pow(exp))
    }

    /// Parses a decimal literal (`-0.14`, `3`, `2.5e-3`) into the exact
    /// fraction it denotes.
    pub fn from_decimal_str(s: &str) -> Result<Self> {
        let err = || Error::InvalidArgument(format!("invalid decimal literal {s:?}"));
        let s = s.trim();
        if s.is_empty() {
            return Err(err());
        }
        let (body, exp10) = match s.find(['e', 'E']) {
            Some(i) => {
                let exp: i32 = s[i + 1..].parse().map_err(|_| err())?;
                (&s[..i], exp)
            }
            None => (s, 0),
        };
        let (sign, digits) = match body.strip_prefix('-') {
            Some(rest) => (-1, rest),
            None => (1, body.strip_prefix('+').unwrap_or(body)),
        };
        let (int_part, frac_part) = match digits.find('.') {
            Some(i) => (&digits[..i], &digits[i + 1..]),
            None => (digits, ""),
        };
        if int_part.is_empty() && frac_part.is_empty() {
            return Err(err());
        }
        if !int_part.bytes().all(|b| b.is_ascii_digit())
            || !frac_part.bytes().all(|b| b.is_ascii_digit())
        {
            return Err(err());
        }
        let mantissa: BigInt = format!("{int_part}{frac_part}")
            .parse()
            .map_err(|_| err())?;
        let scale = exp10 - frac_part.len() as i32;
        let ten = BigInt::from(10);
        let value = if scale >= 0 {
            BigRational::from_integer(mantissa * ten.pow(scale as u32))
        } else {
            BigRational::new(mantissa, ten.pow((-scale) as u32))
        };
        Ok(Rational(
            value * BigRational::from_integer(BigInt::from(sign)),
        ))
    }
}

/// `p/q` or plain integer syntax, as used for CLI rational flags.
impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let err = || Error::InvalidArgument(format!("invalid rational {s:?} (expected p or p/q)"));
        let s = s.trim();
        match s.split_once('/') {
            Some((num, den)) => {
                let numerator: BigInt = num.trim().parse().map_err(|_| err())?;
                let denominator: BigInt = den.trim().parse().map_err(|_| err())?;
                Rational::new(numerator, denominator)
            }
            None => Ok(Rational(BigRational::from_integer(
                s.parse().map_err(|_| err())?,
            ))),
        }
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((self.0).$method(rhs.0))
            }
        }

        impl $trait for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }

        impl $trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((self.0).$method(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Div for Rational {
    type Output = Rational;
    fn div(self, rhs: Rational) -> Rational {
        assert!(!rhs.is_zero(), "division by zero");
        Rational(self.0 / rhs.0)
    }
}

impl Div for &Rational {
    type Output = Rational;
    fn div(self, rhs: &Rational) -> Rational {
        assert!(!rhs.is_zero(), "division by zero");
        Rational(&self.0 / &rhs.0)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&Rational> for Rational {
    fn sub_assign(&mut self, rhs: &Rational) {
        self.0 -= &rhs.0;
    }
}

impl MulAssign<&Rational> for Rational {
    fn mul_assign(&mut self, rhs: &Rational) {
        self.0 *= &rhs.0;
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn canonical_form() {
        let r = Rational::new(BigInt::from(6), BigInt::from(-4)).unwrap();
        assert_eq!(r.numerator(), &BigInt::from(-3));
        assert_eq!(r.denominator(), &BigInt::from(2));
        assert_eq!(r.to_string(), "-3/2");

        let z = Rational::new(BigInt::from(0), BigInt::from(-7)).unwrap();
        assert!(z.is_zero());
        assert_eq!(z.denominator(), &BigInt::from(1));
    }

    #[test]
    fn zero_denominator_rejected() {
        assert_eq!(
            Rational::new(BigInt::from(1), BigInt::from(0)),
            Err(Error::ZeroDenominator)
        );
        assert!("1/0".parse::<Rational>().is_err());
    }

    #[test]
    #[should_panic(expected = "division by zero")]
    fn division_by_zero_panics() {
        let _ = rat("1") / rat("0");
    }

    #[test]
    fn parse_forms() {
        assert_eq!(rat("35588/3").to_string(), "35588/3");
        assert_eq!(rat("-5").to_string(), "-5");
        assert_eq!(rat(" 8231329/2520 ").to_string(), "8231329/2520");
        assert!("a/b".parse::<Rational>().is_err());
        assert!("".parse::<Rational>().is_err());
    }

    #[test]
    fn decimal_parse_is_exact() {
        assert_eq!(Rational::from_decimal_str("-0.14").unwrap(), rat("-7/50"));
        assert_eq!(Rational::from_decimal_str("0.10").unwrap(), rat("1/10"));
        assert_eq!(Rational::from_decimal_str("3").unwrap(), rat("3"));
        assert_eq!(Rational::from_decimal_str("2.5e-3").unwrap(), rat("1/400"));
        assert_eq!(Rational::from_decimal_str("1.2E2").unwrap(), rat("120"));
        assert_eq!(Rational::from_decimal_str(".5").unwrap(), rat("1/2"));
        assert!(Rational::from_decimal_str("0.1.2").is_err());
        assert!(Rational::from_decimal_str("-").is_err());
    }

    #[test]
    fn negative_powers() {
        assert_eq!(rat("2/3").pow(-2), rat("9/4"));
        assert_eq!(rat("-2").pow(-3), rat("-1/8"));
        assert_eq!(rat("5").pow(0), rat("1"));
    }
}
