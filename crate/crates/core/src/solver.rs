//! The decomposition recursion for u' = c u + b u^eta + f(t), u(0) = u0.
//!
//! Component 0 is u0 plus the integral of the forcing; every later component
//! integrates c * u_n + b * A_n evaluated on the components found so far. The
//! sign convention keeps every term on the right-hand side, matching the
//! worked derivations the series values were verified against.

use crate::adomian::AdomianPolynomial;
use crate::error::{Error, Result};
use crate::hpreal::HPReal;
use crate::rational::Rational;
use crate::timepoly::TimePolynomial;

#[derive(Clone, Debug, PartialEq)]
pub struct ODEProblem {
    /// Linear coefficient.
    pub c: Rational,
    /// Nonlinear coefficient.
    pub b: Rational,
    /// Exponent of the power nonlinearity b * u^eta.
    pub eta: u32,
    /// Initial value u(0).
    pub u0: Rational,
    /// Polynomial forcing f(t).
    pub forcing: TimePolynomial,
    pub name: Option<String>,
}

impl ODEProblem {
    pub fn new(c: Rational, b: Rational, eta: u32, u0: Rational, forcing: TimePolynomial) -> Self {
        ODEProblem {
            c,
            b,
            eta,
            u0,
            forcing,
            name: None,
        }
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    /// Preset: u' = 5u + u^3, u(0) = 1.
    pub fn problem1() -> Self {
        ODEProblem::new(
            Rational::from_integer(5),
            Rational::one(),
            3,
            Rational::one(),
            TimePolynomial::zero(),
        )
        .with_name("problem1")
    }

    /// Preset: u' = u + u^4, u(0) = 1.
    pub fn problem2() -> Self {
        ODEProblem::new(
            Rational::one(),
            Rational::one(),
            4,
            Rational::one(),
            TimePolynomial::zero(),
        )
        .with_name("problem2")
    }

    pub fn label(&self) -> String {
        match &self.name {
            Some(name) => name.clone(),
            None => format!(
                "u' = {}*u + {}*u^{} + f, u(0) = {}",
                self.c, self.b, self.eta, self.u0
            ),
        }
    }
}

/// Exact series components u_0 ... u_N of the decomposition.
#[derive(Clone, Debug, PartialEq)]
pub struct SeriesSolution {
    problem: ODEProblem,
    components: Vec<TimePolynomial>,
}

/// Runs the recursion up to component `order` (inclusive), all arithmetic
/// exact.
pub fn solve(problem: &ODEProblem, order: usize) -> SeriesSolution {
    let mut components = Vec::with_capacity(order + 1);
    components.push(&TimePolynomial::constant(problem.u0.clone()) + &problem.forcing.integrate());
    for n in 0..order {
        let a_n = AdomianPolynomial::generate(problem.eta, n as u32);
        let substituted = a_n
            .substitute(&components)
            .expect("components 0..=n are present");
        let integrand = &components[n].scale(&problem.c) + &substituted.scale(&problem.b);
        components.push(integrand.integrate());
    }
    SeriesSolution {
        problem: problem.clone(),
        components,
    }
}

impl SeriesSolution {
    pub fn problem(&self) -> &ODEProblem {
        &self.problem
    }

    /// Highest component index present.
    pub fn order(&self) -> usize {
        self.components.len() - 1
    }

    pub fn components(&self) -> &[TimePolynomial] {
        &self.components
    }

    pub fn component(&self, n: usize) -> Result<&TimePolynomial> {
        self.components.get(n).ok_or(Error::OrderOutOfRange {
            requested: n,
            available: self.order(),
        })
    }

    /// Exact sum of components 0..=m.
    pub fn partial_sum(&self, m: usize) -> Result<TimePolynomial> {
        if m > self.order() {
            return Err(Error::OrderOutOfRange {
                requested: m,
                available: self.order(),
            });
        }
        Ok(self.components[..=m]
            .iter()
            .fold(TimePolynomial::zero(), |acc, c| &acc + c))
    }

    /// Evaluates the partial sum of order m at t with `digits` precision.
    pub fn evaluate(&self, m: usize, t: &HPReal, digits: u32) -> Result<HPReal> {
        Ok(self.partial_sum(m)?.eval_hp(t, digits))
    }
}
