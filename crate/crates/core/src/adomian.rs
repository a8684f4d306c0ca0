//! Adomian polynomials A_n for the power nonlinearity N(u) = u^eta.
//!
//! Two independent construction routes are provided:
//!
//! - [`AdomianPolynomial::generate`] enumerates multisets {k_1 <= ... <= k_eta}
//!   of nonnegative indices with sum n and attaches the multinomial
//!   coefficient eta!/prod(m_j!) to each, where the m_j are the multiplicities
//!   of repeated indices.
//! - [`AdomianPolynomial::generate_oracle`] raises the truncated series
//!   u_0 + u_1 L + ... + u_n L^n to the eta-th power by repeated truncated
//!   multiplication and reads off the coefficient of L^n. Extracting that
//!   coefficient is exactly (1/n!) d^n/dL^n at L = 0, so this realizes the
//!   derivative definition without symbolic differentiation.
//!
//! Both produce the same canonical form; the test suites hold them against
//! each other and against the combinatorial identities (coefficient sum
//! C(n+eta-1, eta-1), term count = partitions of n into at most eta parts).

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::rational::Rational;
use crate::timepoly::TimePolynomial;

/// Output format for polynomial rendering.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RenderFormat {
    Plain,
    Latex,
    Json,
}

/// Wire schema for a rendered polynomial: terms in canonical order, exponent
/// keys as decimal strings of the variable index.
#[derive(Serialize, Deserialize, Debug, PartialEq, Eq)]
pub struct PolynomialJson {
    pub eta: u32,
    pub order: u32,
    pub terms: Vec<TermJson>,
}

#[derive(Serialize, Deserialize, Debug, PartialEq, Eq)]
pub struct TermJson {
    pub coeff: String,
    pub exponents: BTreeMap<u32, u32>,
}

/// A_n in canonical form: like terms merged, no zero coefficients, terms
/// sorted by descending lexicographic exponent vector (e_0, e_1, ...).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AdomianPolynomial {
    eta: u32,
    order: u32,
    terms: Vec<Monomial>,
}

fn factorial(n: u32) -> BigUint {
    (1..=n as u64).map(BigUint::from).product()
}

/// Partitions of n into at most `max_parts` positive parts (nonincreasing).
fn partitions_at_most(n: u32, max_parts: u32) -> Vec<Vec<u32>> {
    fn rec(n: u32, parts_left: u32, max_part: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        if parts_left == 0 {
            return;
        }
        for part in (1..=n.min(max_part)).rev() {
            cur.push(part);
            rec(n - part, parts_left - 1, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, max_parts, n, &mut Vec::new(), &mut out);
    out
}

impl AdomianPolynomial {
    /// Direct construction: one monomial per multiset of eta nonnegative
    /// indices summing to n, weighted by the multinomial coefficient.
    pub fn generate(eta: u32, n: u32) -> Self {
        if eta == 0 {
            // u^0 = 1: A_0 is the empty product, every later A_n vanishes
            let terms = if n == 0 {
                vec![Monomial::constant(BigUint::one())]
            } else {
                Vec::new()
            };
            return Self::canonicalize(eta, n, terms).expect("constant term is consistent");
        }
        let eta_fact = factorial(eta);
        let mut terms = Vec::new();
        for partition in partitions_at_most(n, eta) {
            // indices used: the parts, plus (eta - parts) zeros
            let mut multiplicities: BTreeMap<u32, u32> = BTreeMap::new();
            let zeros = eta - partition.len() as u32;
            if zeros > 0 {
                multiplicities.insert(0, zeros);
            }
            for part in partition {
                *multiplicities.entry(part).or_insert(0) += 1;
            }
            let mut coefficient = eta_fact.clone();
            for &m in multiplicities.values() {
                coefficient /= factorial(m);
            }
            terms.push(Monomial::new(coefficient, multiplicities));
        }
        Self::canonicalize(eta, n, terms).expect("enumerated terms satisfy degree and weight")
    }

    /// Oracle construction through the eta-th power of the lambda series.
    pub fn generate_oracle(eta: u32, n: u32) -> Self {
        let power = LambdaSeries::base(n as usize).pow(eta);
        let terms = power.coefficient(n as usize).to_vec();
        Self::canonicalize(eta, n, terms).expect("series coefficient satisfies degree and weight")
    }

    /// Merges like terms, drops nothing else, sorts canonically. Every input
    /// monomial must have total degree `eta` and weight `n`.
    pub fn canonicalize(eta: u32, n: u32, terms: Vec<Monomial>) -> Result<Self> {
        for term in &terms {
            if term.total_degree() != eta || term.weight() != n {
                return Err(Error::InvalidMonomial {
                    term: term.render_plain(),
                    expected_degree: eta,
                    expected_weight: n,
                });
            }
        }
        let mut merged: BTreeMap<BTreeMap<u32, u32>, BigUint> = BTreeMap::new();
        for term in terms {
            *merged
                .entry(term.exponents().clone())
                .or_insert_with(|| 0u32.into()) += term.coefficient();
        }
        let mut terms: Vec<Monomial> = merged
            .into_iter()
            .map(|(exponents, coefficient)| Monomial::new(coefficient, exponents))
            .collect();
        terms.sort_by(|a, b| b.cmp_exponents(a));
        Ok(AdomianPolynomial {
            eta,
            order: n,
            terms,
        })
    }

    pub fn eta(&self) -> u32 {
        self.eta
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn terms(&self) -> &[Monomial] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Sum of all term coefficients (the value of A_n with every u_k := 1).
    pub fn coefficient_sum(&self) -> BigUint {
        self.terms.iter().map(Monomial::coefficient).sum()
    }

    /// Evaluates A_n on computed series components: component k stands for
    /// u_k. Requires at least order + 1 components.
    pub fn substitute(&self, components: &[TimePolynomial]) -> Result<TimePolynomial> {
        let required = self.order as usize + 1;
        if components.len() < required {
            return Err(Error::MissingComponents {
                required,
                provided: components.len(),
            });
        }
        let mut total = TimePolynomial::zero();
        for term in &self.terms {
            let coefficient = Rational::from_integer(BigInt::from(term.coefficient().clone()));
            let mut product = TimePolynomial::constant(coefficient);
            for (&k, &e) in term.exponents() {
                for _ in 0..e {
                    product = &product * &components[k as usize];
                }
            }
            total = &total + &product;
        }
        Ok(total)
    }

    pub fn render(&self, format: RenderFormat) -> String {
        match format {
            RenderFormat::Plain => {
                if self.terms.is_empty() {
                    "0".to_string()
                } else {
                    self.terms
                        .iter()
                        .map(Monomial::render_plain)
                        .collect::<Vec<_>>()
                        .join(" + ")
                }
            }
            RenderFormat::Latex => {
                if self.terms.is_empty() {
                    "0".to_string()
                } else {
                    self.terms
                        .iter()
                        .map(Monomial::render_latex)
                        .collect::<Vec<_>>()
                        .join(" + ")
                }
            }
            RenderFormat::Json => {
                serde_json::to_string(&self.json_repr()).expect("schema serializes")
            }
        }
    }

    pub fn json_repr(&self) -> PolynomialJson {
        PolynomialJson {
            eta: self.eta,
            order: self.order,
            terms: self
                .terms
                .iter()
                .map(|t| TermJson {
                    coeff: t.coefficient().to_string(),
                    exponents: t.exponents().clone(),
                })
                .collect(),
        }
    }
}

/// The truncated formal series u_0 + u_1 L + ... + u_N L^N and its powers.
/// Coefficient j is a sum of monomials, each of weight j.
#[derive(Clone, Debug)]
pub struct LambdaSeries {
    coefficients: Vec<Vec<Monomial>>,
}

impl LambdaSeries {
    /// The base series: coefficient of L^k is the single monomial u_k.
    pub fn base(truncation: usize) -> Self {
        LambdaSeries {
            coefficients: (0..=truncation)
                .map(|k| vec![Monomial::variable(k as u32)])
                .collect(),
        }
    }

    /// The constant series 1.
    pub fn one(truncation: usize) -> Self {
        let mut coefficients = vec![Vec::new(); truncation + 1];
        coefficients[0] = vec![Monomial::constant(BigUint::one())];
        LambdaSeries { coefficients }
    }

    pub fn truncation(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn coefficient(&self, j: usize) -> &[Monomial] {
        &self.coefficients[j]
    }

    /// Truncated product; like monomials are merged per lambda power.
    pub fn mul(&self, rhs: &LambdaSeries) -> LambdaSeries {
        let truncation = self.truncation();
        assert_eq!(truncation, rhs.truncation(), "mismatched truncations");
        let mut merged: Vec<BTreeMap<BTreeMap<u32, u32>, BigUint>> =
            vec![BTreeMap::new(); truncation + 1];
        for (i, left) in self.coefficients.iter().enumerate() {
            if left.is_empty() {
                continue;
            }
            for (j, right) in rhs.coefficients.iter().enumerate() {
                if i + j > truncation {
                    break;
                }
                for a in left {
                    for b in right {
                        let product = a.mul(b);
                        *merged[i + j]
                            .entry(product.exponents().clone())
                            .or_insert_with(|| 0u32.into()) += product.coefficient();
                    }
                }
            }
        }
        LambdaSeries {
            coefficients: merged
                .into_iter()
                .map(|level| {
                    level
                        .into_iter()
                        .map(|(exponents, coefficient)| Monomial::new(coefficient, exponents))
                        .collect()
                })
                .collect(),
        }
    }

    pub fn pow(&self, eta: u32) -> LambdaSeries {
        let mut result = LambdaSeries::one(self.truncation());
        for _ in 0..eta {
            result = result.mul(self);
        }
        result
    }
}
