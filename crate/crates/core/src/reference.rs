//! Independent ground truth for u' = c u + b u^eta, u(0) = u0:
//! the closed-form solution obtained through the substitution v = u^(1-eta)
//! (v satisfies the linear equation v' = (1-eta)(c v + b)), a Taylor
//! coefficient recurrence producing the same series by a different algorithm,
//! and the blow-up time of the closed form.

use crate::error::{Error, Result};
use crate::hpreal::HPReal;
use crate::rational::Rational;
use crate::solver::ODEProblem;
use crate::timepoly::TimePolynomial;

/// Closed form of a Bernoulli problem. With p = eta - 1 and v0 = u0^(-p):
///
/// - `Exponential` (c != 0): v(t) = (v0 + shift) e^(decay t) - shift with
///   shift = b/c and decay = -p c; then u = v^(-1/p) on the real branch
///   through u(0) = u0.
/// - `Affine` (c = 0 limit): v(t) = v0 - p b t.
/// - `Zero`: u0 = 0, so u is identically zero.
#[derive(Clone, Debug, PartialEq)]
pub enum ClosedFormSolution {
    Zero,
    Exponential {
        eta: u32,
        v0: Rational,
        shift: Rational,
        decay: Rational,
        negative_branch: bool,
    },
    Affine {
        eta: u32,
        v0: Rational,
        slope: Rational,
        negative_branch: bool,
    },
}

/// Derives the closed form. Requires eta >= 2 and zero forcing; u0 = 0 yields
/// the identically-zero solution marker.
pub fn closed_form(problem: &ODEProblem) -> Result<ClosedFormSolution> {
    if !problem.forcing.is_zero() {
        return Err(Error::UnsupportedForcing);
    }
    if problem.eta < 2 {
        return Err(Error::UnsupportedExponent { eta: problem.eta });
    }
    if problem.u0.is_zero() {
        return Ok(ClosedFormSolution::Zero);
    }
    let p = (problem.eta - 1) as i32;
    let v0 = problem.u0.pow(-p);
    let negative_branch = problem.u0.is_negative();
    if problem.c.is_zero() {
        Ok(ClosedFormSolution::Affine {
            eta: problem.eta,
            v0,
            slope: Rational::from_integer(p as i64) * &problem.b,
            negative_branch,
        })
    } else {
        Ok(ClosedFormSolution::Exponential {
            eta: problem.eta,
            v0,
            shift: &problem.b / &problem.c,
            decay: Rational::from_integer(-(p as i64)) * &problem.c,
            negative_branch,
        })
    }
}

impl ClosedFormSolution {
    /// Evaluates u(t) at `digits` precision. Evaluation at or past a
    /// singularity (the v expression leaving the branch through u0) is an
    /// error carrying the offending t.
    pub fn eval(&self, t: &HPReal, digits: u32) -> Result<HPReal> {
        let work = digits + 15;
        let (eta, v, negative_branch) = match self {
            ClosedFormSolution::Zero => return Ok(HPReal::zero(digits)),
            ClosedFormSolution::Exponential {
                eta,
                v0,
                shift,
                decay,
                negative_branch,
            } => {
                let exponent = &HPReal::from_rational(decay, work) * &t.round_to(work);
                let grown = &HPReal::from_rational(&(v0 + shift), work) * &exponent.exp();
                (
                    *eta,
                    &grown - &HPReal::from_rational(shift, work),
                    *negative_branch,
                )
            }
            ClosedFormSolution::Affine {
                eta,
                v0,
                slope,
                negative_branch,
            } => {
                let drop = &HPReal::from_rational(slope, work) * &t.round_to(work);
                (
                    *eta,
                    &HPReal::from_rational(v0, work) - &drop,
                    *negative_branch,
                )
            }
        };
        // the branch through u(0) = u0 keeps sign(v) = sign(v0)
        let branch_ok = if negative_branch && eta % 2 == 0 {
            v.is_negative()
        } else {
            v.is_positive()
        };
        if !branch_ok {
            return Err(Error::Singularity {
                at: t.to_sig_string(17),
                blow_up: self.blow_up_time(digits).map(|t| t.to_sig_string(17)),
            });
        }
        let root = v.abs().nth_root(eta - 1)?;
        let magnitude = &HPReal::one(work) / &root;
        let value = if negative_branch {
            -&magnitude
        } else {
            magnitude
        };
        Ok(value.round_to(digits))
    }

    /// Smallest t > 0 where the v expression vanishes; None when the closed
    /// form never blows up forward in time.
    pub fn blow_up_time(&self, digits: u32) -> Option<HPReal> {
        match self {
            ClosedFormSolution::Zero => None,
            ClosedFormSolution::Affine { v0, slope, .. } => {
                if slope.is_zero() {
                    return None;
                }
                let t = v0 / slope;
                if t.is_positive() {
                    Some(HPReal::from_rational(&t, digits))
                } else {
                    None
                }
            }
            ClosedFormSolution::Exponential {
                v0, shift, decay, ..
            } => {
                // (v0 + shift) e^(decay t) = shift
                let scale = v0 + shift;
                if shift.is_zero() || scale.is_zero() {
                    return None;
                }
                let ratio = shift / &scale;
                if !ratio.is_positive() {
                    return None;
                }
                let work = digits + 10;
                let t = &HPReal::from_rational(&ratio, work)
                    .ln()
                    .expect("ratio is positive")
                    / &HPReal::from_rational(decay, work);
                if t.is_positive() {
                    Some(t.round_to(digits))
                } else {
                    None
                }
            }
        }
    }
}

/// Taylor-coefficient recurrence for the same series the decomposition
/// produces, by a different algorithm: a_0 = u0 and
/// a_{k+1} = (c a_k + b [p^eta]_k + f_k) / (k+1), where [p^eta]_k is the
/// degree-k coefficient of the eta-th truncated power of the partial series.
pub fn taylor_series(problem: &ODEProblem, order: usize) -> TimePolynomial {
    let mut coeffs = vec![problem.u0.clone()];
    for k in 0..order {
        let partial = TimePolynomial::from_coeffs(coeffs.clone());
        let nonlinear = partial.pow_trunc(problem.eta, k).coeff(k);
        let slope = &problem.c * &coeffs[k] + &problem.b * &nonlinear + problem.forcing.coeff(k);
        coeffs.push(slope / Rational::from_integer(k as i64 + 1));
    }
    TimePolynomial::from_coeffs(coeffs)
}
