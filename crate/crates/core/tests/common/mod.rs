//! Helpers shared by the integration suites.
#![allow(dead_code)]

use adomian::{ClosedFormSolution, HPReal, ODEProblem, Rational, TimePolynomial};
use rand::Rng;

pub fn hp(s: &str) -> HPReal {
    HPReal::from_decimal_str(s, 50).unwrap()
}

pub fn rat(s: &str) -> Rational {
    s.parse().unwrap()
}

/// Random Bernoulli problem: c, b rational in [-3, 3], eta in {2, 3, 4},
/// u0 in {1, -1, 1/2, -1/2}, no forcing.
pub fn random_problem<R: Rng>(rng: &mut R) -> ODEProblem {
    let coeff = |rng: &mut R| {
        let den = rng.gen_range(1..=4i64);
        let num = rng.gen_range(-3 * den..=3 * den);
        Rational::new(num.into(), den.into()).unwrap()
    };
    let c = coeff(rng);
    let b = coeff(rng);
    let eta = rng.gen_range(2..=4u32);
    let u0 = match rng.gen_range(0..4) {
        0 => rat("1"),
        1 => rat("-1"),
        2 => rat("1/2"),
        _ => rat("-1/2"),
    };
    ODEProblem::new(c, b, eta, u0, TimePolynomial::zero())
}

/// Sign of the closed form's v expression at t, computed directly from the
/// fields (the quantity whose root is the blow-up time).
pub fn v_expression(cf: &ClosedFormSolution, t: &HPReal, digits: u32) -> HPReal {
    match cf {
        ClosedFormSolution::Exponential {
            v0, shift, decay, ..
        } => {
            let e = (&HPReal::from_rational(decay, digits) * t).exp();
            &(&HPReal::from_rational(&(v0 + shift), digits) * &e)
                - &HPReal::from_rational(shift, digits)
        }
        ClosedFormSolution::Affine { v0, slope, .. } => {
            &HPReal::from_rational(v0, digits) - &(&HPReal::from_rational(slope, digits) * t)
        }
        ClosedFormSolution::Zero => HPReal::zero(digits),
    }
}

/// Independent blow-up oracle: bisection on the v expression over (0, hi].
pub fn bisect_blow_up(cf: &ClosedFormSolution, digits: u32, iterations: u32) -> Option<HPReal> {
    let sign0 = v_expression(cf, &HPReal::zero(digits), digits);
    let mut hi = HPReal::one(digits);
    let two = HPReal::from_integer(2, digits);
    let mut found = false;
    for _ in 0..60 {
        let v = v_expression(cf, &hi, digits);
        if v.is_positive() != sign0.is_positive() || v.is_zero() {
            found = true;
            break;
        }
        hi = &hi * &two;
    }
    if !found {
        return None;
    }
    let mut lo = HPReal::zero(digits);
    for _ in 0..iterations {
        let mid = &(&lo + &hi) / &two;
        let v = v_expression(cf, &mid, digits);
        if v.is_positive() == sign0.is_positive() && !v.is_zero() {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Some(&(&lo + &hi) / &two)
}
