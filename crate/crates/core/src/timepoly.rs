//! Univariate polynomials in t with exact rational coefficients.
//!
//! The coefficient sequence is dense and canonical: trailing zeros are
//! stripped, the zero polynomial is the empty sequence.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::hpreal::HPReal;
use crate::rational::Rational;

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct TimePolynomial {
    coeffs: Vec<Rational>,
}

impl TimePolynomial {
    pub fn zero() -> Self {
        TimePolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// Builds from the coefficient of t^0, t^1, ... and strips trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        TimePolynomial { coeffs }
    }

    /// The single term c * t^degree.
    pub fn term(c: Rational, degree: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rational::zero(); degree + 1];
        coeffs[degree] = c;
        TimePolynomial { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn scale(&self, s: &Rational) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        TimePolynomial {
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    /// Product with every coefficient of degree > max_degree discarded.
    pub fn mul_trunc(&self, rhs: &Self, max_degree: usize) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let full = self.coeffs.len() + rhs.coeffs.len() - 1;
        let len = full.min(max_degree + 1);
        let mut coeffs = vec![Rational::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate() {
            if i >= len || a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if i + j >= len {
                    break;
                }
                if !b.is_zero() {
                    coeffs[i + j] += &(a * b);
                }
            }
        }
        Self::from_coeffs(coeffs)
    }

    /// self^eta with all coefficients of degree > max_degree discarded,
    /// computed by repeated truncated multiplication. eta = 0 gives 1.
    pub fn pow_trunc(&self, eta: u32, max_degree: usize) -> Self {
        let mut result = Self::one();
        for _ in 0..eta {
            result = result.mul_trunc(self, max_degree);
        }
        result
    }

    /// Definite integral from 0 to t: the constant of integration is zero.
    pub fn integrate(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(Rational::zero());
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs.push(c / &Rational::from_integer(k as i64 + 1));
        }
        Self::from_coeffs(coeffs)
    }

    /// Formal derivative.
    pub fn differentiate(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * &Rational::from_integer(k as i64))
            .collect();
        Self::from_coeffs(coeffs)
    }

    /// Exact Horner evaluation.
    pub fn eval_rational(&self, t: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t + c;
        }
        acc
    }

    /// Horner evaluation at `digits` precision. The evaluation itself is
    /// exact (t is an exact decimal); only the final result is rounded.
    pub fn eval_hp(&self, t: &HPReal, digits: u32) -> HPReal {
        HPReal::from_rational(&self.eval_rational(&t.to_rational()), digits)
    }
}

impl Add for &TimePolynomial {
    type Output = TimePolynomial;
    fn add(self, rhs: &TimePolynomial) -> TimePolynomial {
        let mut coeffs = vec![Rational::zero(); self.coeffs.len().max(rhs.coeffs.len())];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        TimePolynomial::from_coeffs(coeffs)
    }
}

impl Sub for &TimePolynomial {
    type Output = TimePolynomial;
    fn sub(self, rhs: &TimePolynomial) -> TimePolynomial {
        self + &(-rhs)
    }
}

impl Mul for &TimePolynomial {
    type Output = TimePolynomial;
    fn mul(self, rhs: &TimePolynomial) -> TimePolynomial {
        if self.is_zero() || rhs.is_zero() {
            return TimePolynomial::zero();
        }
        self.mul_trunc(rhs, self.coeffs.len() + rhs.coeffs.len() - 2)
    }
}

impl Neg for &TimePolynomial {
    type Output = TimePolynomial;
    fn neg(self) -> TimePolynomial {
        TimePolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($trait:ident, $method:ident) => {
        impl $trait for TimePolynomial {
            type Output = TimePolynomial;
            fn $method(self, rhs: TimePolynomial) -> TimePolynomial {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for TimePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match (k, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "t")?,
                (1, false) => write!(f, "{mag}*t")?,
                (_, true) => write!(f, "t^{k}")?,
                (_, false) => write!(f, "{mag}*t^{k}")?,
            }
        }
        Ok(())
    }
}
