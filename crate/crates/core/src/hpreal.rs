//! High-precision decimal floating point used for table generation.
//!
//! A value is `mantissa * 10^exponent` with the mantissa held to at most
//! `digits` significant decimal digits (round half to even). Every value is
//! an exact decimal, so polynomial evaluation can run in exact rational
//! arithmetic and round once at the end. The transcendental kernels carry
//! guard digits: `exp` reduces the argument by repeated halving before
//! summing the Taylor series, `ln` and `nth_root` run Newton iterations
//! seeded from a double-precision estimate.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Minimum supported working precision.
pub const MIN_DIGITS: u32 = 10;
/// Default working precision: the published tables carry 10-11 significant
/// figures, so 50 leaves ample guard.
pub const DEFAULT_DIGITS: u32 = 50;

#[derive(Clone)]
pub struct HPReal {
    mantissa: BigInt,
    exponent: i64,
    digits: u32,
}

fn pow10(k: u64) -> BigInt {
    BigInt::from(10u32).pow(k as u32)
}

fn decimal_len(n: &BigInt) -> u64 {
    if n.is_zero() {
        0
    } else {
        n.magnitude().to_str_radix(10).len() as u64
    }
}

/// Round to at most `digits` significant digits, half to even.
fn round_mantissa(mut mantissa: BigInt, mut exponent: i64, digits: u32) -> (BigInt, i64) {
    let len = decimal_len(&mantissa);
    if len > digits as u64 {
        let drop = len - digits as u64;
        let scale = pow10(drop);
        let (mut q, r) = mantissa.div_rem(&scale);
        let twice = r.abs() * 2u32;
        let round_away = match twice.cmp(&scale) {
            Ordering::Greater => true,
            Ordering::Less => false,
            Ordering::Equal => q.is_odd(),
        };
        if round_away {
            q += BigInt::from(if mantissa.sign() == Sign::Minus {
                -1
            } else {
                1
            });
        }
        mantissa = q;
        exponent += drop as i64;
        if decimal_len(&mantissa) > digits as u64 {
            // carry overflow: mantissa became +-10^digits, exactly divisible
            mantissa /= 10;
            exponent += 1;
        }
    }
    (mantissa, exponent)
}

impl HPReal {
    fn normalized(mantissa: BigInt, exponent: i64, digits: u32) -> Self {
        assert!(
            digits >= MIN_DIGITS,
            "precision must be at least {MIN_DIGITS} digits"
        );
        if mantissa.is_zero() {
            return HPReal {
                mantissa,
                exponent: 0,
                digits,
            };
        }
        let (mut mantissa, mut exponent) = round_mantissa(mantissa, exponent, digits);
        while !mantissa.is_zero() && (&mantissa % 10u32).is_zero() {
            mantissa /= 10;
            exponent += 1;
        }
        HPReal {
            mantissa,
            exponent,
            digits,
        }
    }

    pub fn zero(digits: u32) -> Self {
        Self::normalized(BigInt::zero(), 0, digits)
    }

    pub fn one(digits: u32) -> Self {
        Self::normalized(BigInt::from(1), 0, digits)
    }

    pub fn from_integer(n: i64, digits: u32) -> Self {
        Self::normalized(BigInt::from(n), 0, digits)
    }

    pub fn from_bigint(n: BigInt, digits: u32) -> Self {
        Self::normalized(n, 0, digits)
    }

    pub fn from_rational(r: &Rational, digits: u32) -> Self {
        if r.is_zero() {
            return Self::zero(digits);
        }
        let num = r.numerator();
        let den = r.denominator();
        // carry 3 guard digits through the integer division, then round
        let scale_up = (digits as u64 + 3 + decimal_len(den)).saturating_sub(decimal_len(num));
        let q = (num * pow10(scale_up)) / den;
        Self::normalized(q, -(scale_up as i64), digits)
    }

    /// Parses a decimal literal (fixed or scientific) exactly.
    pub fn from_decimal_str(s: &str, digits: u32) -> Result<Self> {
        Ok(Self::from_rational(&Rational::from_decimal_str(s)?, digits))
    }

    pub fn digits(&self) -> u32 {
        self.digits
    }

    pub fn is_zero(&self) -> bool {
        self.mantissa.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.mantissa.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.mantissa.is_negative()
    }

    /// Exact value as a fraction (every HPReal is an exact decimal).
    pub fn to_rational(&self) -> Rational {
        let r = if self.exponent >= 0 {
            Rational::new(
                &self.mantissa * pow10(self.exponent as u64),
                BigInt::from(1),
            )
        } else {
            Rational::new(self.mantissa.clone(), pow10((-self.exponent) as u64))
        };
        r.expect("nonzero denominator by construction")
    }

    pub fn round_to(&self, digits: u32) -> Self {
        Self::normalized(self.mantissa.clone(), self.exponent, digits)
    }

    pub fn abs(&self) -> Self {
        HPReal {
            mantissa: self.mantissa.abs(),
            exponent: self.exponent,
            digits: self.digits,
        }
    }

    /// Order of magnitude: the value lies in [10^(m-1), 10^m). `i64::MIN` for zero.
    fn mag10(&self) -> i64 {
        if self.is_zero() {
            i64::MIN
        } else {
            self.exponent + decimal_len(&self.mantissa) as i64
        }
    }

    fn approx_f64(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let len = decimal_len(&self.mantissa);
        let take = len.min(17);
        let lead: BigInt = &self.mantissa / pow10(len - take);
        let e = self.exponent + (len - take) as i64;
        debug_assert!(e.abs() < 300, "value out of f64 seed range");
        lead.to_f64().unwrap_or(0.0) * 10f64.powi(e as i32)
    }

    pub fn powi(&self, n: u32) -> Self {
        let mut result = Self::one(self.digits);
        for _ in 0..n {
            result = &result * self;
        }
        result
    }

    /// e^self, correct to within one unit in the last place of the working
    /// precision. Uses repeated halving so the Taylor series is summed at an
    /// argument of magnitude <= 1/2, then squares back up.
    pub fn exp(&self) -> Self {
        let d = self.digits;
        if self.is_zero() {
            return Self::one(d);
        }
        let approx = self.approx_f64().abs();
        let halvings = if approx > 0.5 {
            (approx / 0.5).log2().ceil() as u32 + 1
        } else {
            0
        };
        let work = d + 12 + 2 * halvings;
        let reduced = &self.round_to(work) / &Self::from_bigint(BigInt::from(1) << halvings, work);

        let mut sum = Self::one(work);
        let mut term = Self::one(work);
        let mut k = 1u64;
        loop {
            term = &(&term * &reduced) / &Self::from_integer(k as i64, work);
            if term.is_zero() || term.mag10() < sum.mag10() - (work as i64 + 2) {
                break;
            }
            sum = &sum + &term;
            k += 1;
            assert!(k < 10_000, "exp series failed to converge");
        }
        for _ in 0..halvings {
            sum = &sum * &sum;
        }
        sum.round_to(d)
    }

    /// Natural logarithm via Newton iteration on exp: y <- y + x e^{-y} - 1.
    pub fn ln(&self) -> Result<Self> {
        if !self.is_positive() {
            return Err(Error::InvalidArgument(
                "logarithm of a nonpositive value".into(),
            ));
        }
        let d = self.digits;
        let work = d + 15;
        let x = self.round_to(work);
        let one = Self::one(work);
        let mut y = Self::from_decimal_str(&format!("{:e}", self.approx_f64().ln()), work)?;
        for _ in 0..100 {
            let delta = &(&x * &(-&y).exp()) - &one;
            let done = delta.is_zero() || delta.mag10() < -(d as i64 + 6);
            y = &y + &delta;
            if done {
                return Ok(y.round_to(d));
            }
        }
        unreachable!("ln Newton iteration failed to converge");
    }

    /// Real n-th root. Even roots of negative values are rejected; odd roots
    /// follow the sign of the argument.
    pub fn nth_root(&self, n: u32) -> Result<Self> {
        assert!(n >= 1, "root index must be positive");
        if self.is_zero() {
            return Ok(Self::zero(self.digits));
        }
        if self.is_negative() {
            if n.is_multiple_of(2) {
                return Err(Error::InvalidArgument(
                    "even root of a negative value".into(),
                ));
            }
            return Ok(-&(-self).nth_root(n)?);
        }
        if n == 1 {
            return Ok(self.clone());
        }
        let d = self.digits;
        let work = d + 10;
        let x = self.round_to(work);
        let n_hp = Self::from_integer(n as i64, work);
        let n_minus_1 = Self::from_integer(n as i64 - 1, work);
        let mut y = Self::from_decimal_str(
            &format!("{:e}", self.approx_f64().powf(1.0 / n as f64)),
            work,
        )?;
        for _ in 0..100 {
            let next = &(&(&n_minus_1 * &y) + &(&x / &y.powi(n - 1))) / &n_hp;
            let delta = (&next - &y).abs();
            y = next;
            if delta.is_zero() || delta.mag10() < y.mag10() - (d as i64 + 5) {
                return Ok(y.round_to(d));
            }
        }
        unreachable!("nth_root Newton iteration failed to converge");
    }

    /// Renders exactly `digits` significant figures (zero prints as "0").
    /// Fixed notation for moderate magnitudes, scientific otherwise.
    pub fn to_sig_string(&self, digits: u32) -> String {
        assert!(digits >= 1);
        if self.is_zero() {
            return "0".to_string();
        }
        let (m, e) = round_mantissa(self.mantissa.clone(), self.exponent, digits);
        let negative = m.is_negative();
        let mut mantissa_str = m.magnitude().to_str_radix(10);
        let len = mantissa_str.len() as i64;
        let pad = digits as i64 - len;
        mantissa_str.extend(std::iter::repeat_n('0', pad as usize));
        let e10 = e + len - 1;

        let body = if e10 < -4 || e10 >= digits as i64 {
            let mut s = String::new();
            s.push_str(&mantissa_str[..1]);
            if mantissa_str.len() > 1 {
                s.push('.');
                s.push_str(&mantissa_str[1..]);
            }
            s.push('e');
            s.push_str(&e10.to_string());
            s
        } else if e10 >= 0 {
            let split = (e10 + 1) as usize;
            if split >= mantissa_str.len() {
                mantissa_str
            } else {
                format!("{}.{}", &mantissa_str[..split], &mantissa_str[split..])
            }
        } else {
            let zeros = "0".repeat((-e10 - 1) as usize);
            format!("0.{zeros}{mantissa_str}")
        };
        if negative {
            format!("-{body}")
        } else {
            body
        }
    }
}

impl PartialEq for HPReal {
    fn eq(&self, other: &Self) -> bool {
        // canonical form makes value equality structural
        self.mantissa == other.mantissa && (self.is_zero() || self.exponent == other.exponent)
    }
}

impl Eq for HPReal {}

impl PartialOrd for HPReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for HPReal {
    fn cmp(&self, other: &Self) -> Ordering {
        let sa = self.mantissa.sign();
        let sb = other.mantissa.sign();
        if sa != sb {
            return if sa == Sign::Minus || (sa == Sign::NoSign && sb == Sign::Plus) {
                Ordering::Less
            } else {
                Ordering::Greater
            };
        }
        if sa == Sign::NoSign {
            return Ordering::Equal;
        }
        let mag = self.mag10().cmp(&other.mag10());
        let mag_result = if sa == Sign::Minus {
            mag.reverse()
        } else {
            mag
        };
        if mag != Ordering::Equal {
            return mag_result;
        }
        // same sign and magnitude: align exponents and compare mantissas
        let shift = self.exponent - other.exponent;
        if shift >= 0 {
            (&self.mantissa * pow10(shift as u64)).cmp(&other.mantissa)
        } else {
            self.mantissa
                .cmp(&(&other.mantissa * pow10((-shift) as u64)))
        }
    }
}

impl fmt::Debug for HPReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_sig_string(self.digits.min(20)))
    }
}

impl fmt::Display for HPReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_sig_string(self.digits))
    }
}

impl Add for &HPReal {
    type Output = HPReal;
    fn add(self, rhs: &HPReal) -> HPReal {
        let digits = self.digits.max(rhs.digits);
        if self.is_zero() {
            return rhs.round_to(digits);
        }
        if rhs.is_zero() {
            return self.round_to(digits);
        }
        // an operand more than digits + 4 orders of magnitude below the other
        // is smaller than half an ulp of the result
        if self.mag10() - rhs.mag10() > digits as i64 + 4 {
            return self.round_to(digits);
        }
        if rhs.mag10() - self.mag10() > digits as i64 + 4 {
            return rhs.round_to(digits);
        }
        let (lo, hi) = if self.exponent <= rhs.exponent {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let shift = (hi.exponent - lo.exponent) as u64;
        let mantissa = &lo.mantissa + &hi.mantissa * pow10(shift);
        HPReal::normalized(mantissa, lo.exponent, digits)
    }
}

impl Sub for &HPReal {
    type Output = HPReal;
    fn sub(self, rhs: &HPReal) -> HPReal {
        self + &(-rhs)
    }
}

impl Mul for &HPReal {
    type Output = HPReal;
    fn mul(self, rhs: &HPReal) -> HPReal {
        HPReal::normalized(
            &self.mantissa * &rhs.mantissa,
            self.exponent + rhs.exponent,
            self.digits.max(rhs.digits),
        )
    }
}

impl Div for &HPReal {
    type Output = HPReal;
    fn div(self, rhs: &HPReal) -> HPReal {
        assert!(!rhs.is_zero(), "division by zero");
        let digits = self.digits.max(rhs.digits);
        if self.is_zero() {
            return HPReal::zero(digits);
        }
        let scale_up = (digits as u64 + 3 + decimal_len(&rhs.mantissa))
            .saturating_sub(decimal_len(&self.mantissa));
        let q = (&self.mantissa * pow10(scale_up)) / &rhs.mantissa;
        HPReal::normalized(q, self.exponent - rhs.exponent - scale_up as i64, digits)
    }
}

impl Neg for &HPReal {
    type Output = HPReal;
    fn neg(self) -> HPReal {
        HPReal {
            mantissa: -&self.mantissa,
            exponent: self.exponent,
            digits: self.digits,
        }
    }
}

macro_rules! forward_owned {
    ($trait:ident, $method:ident) => {
        impl $trait for HPReal {
            type Output = HPReal;
            fn $method(self, rhs: HPReal) -> HPReal {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for HPReal {
    type Output = HPReal;
    fn neg(self) -> HPReal {
        -&self
    }
}
