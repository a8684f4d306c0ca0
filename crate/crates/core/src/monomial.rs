//! Monomials in the component variables u_0, u_1, u_2, ...

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

/// coefficient * prod u_k^{e_k}. Coefficients of the power-nonlinearity
/// polynomials are provably positive integers, so the type only admits
/// coefficients >= 1; zero exponents are never stored.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct Monomial {
    coefficient: BigUint,
    exponents: BTreeMap<u32, u32>,
}

impl Monomial {
    pub fn new(coefficient: BigUint, exponents: BTreeMap<u32, u32>) -> Self {
        assert!(
            !coefficient.is_zero(),
            "monomial coefficient must be positive"
        );
        let exponents = exponents.into_iter().filter(|&(_, e)| e > 0).collect();
        Monomial {
            coefficient,
            exponents,
        }
    }

    /// The constant monomial (empty product).
    pub fn constant(coefficient: BigUint) -> Self {
        Self::new(coefficient, BTreeMap::new())
    }

    /// The single variable u_k.
    pub fn variable(k: u32) -> Self {
        Self::new(BigUint::one(), BTreeMap::from([(k, 1)]))
    }

    pub fn coefficient(&self) -> &BigUint {
        &self.coefficient
    }

    pub fn exponents(&self) -> &BTreeMap<u32, u32> {
        &self.exponents
    }

    /// Sum of exponents.
    pub fn total_degree(&self) -> u32 {
        self.exponents.values().sum()
    }

    /// Sum of index * exponent; the power of lambda a monomial carries.
    pub fn weight(&self) -> u32 {
        self.exponents.iter().map(|(k, e)| k * e).sum()
    }

    pub fn mul(&self, rhs: &Monomial) -> Monomial {
        let mut exponents = self.exponents.clone();
        for (&k, &e) in &rhs.exponents {
            *exponents.entry(k).or_insert(0) += e;
        }
        Monomial {
            coefficient: &self.coefficient * &rhs.coefficient,
            exponents,
        }
    }

    pub fn with_coefficient(&self, coefficient: BigUint) -> Monomial {
        Monomial::new(coefficient, self.exponents.clone())
    }

    /// Lexicographic comparison of the exponent vectors (e_0, e_1, e_2, ...).
    /// Canonical term order sorts descending under this comparison.
    pub fn cmp_exponents(&self, other: &Monomial) -> Ordering {
        let top = match (self.exponents.keys().last(), other.exponents.keys().last()) {
            (Some(&a), Some(&b)) => a.max(b),
            (Some(&a), None) => a,
            (None, Some(&b)) => b,
            (None, None) => return Ordering::Equal,
        };
        for k in 0..=top {
            let ea = self.exponents.get(&k).copied().unwrap_or(0);
            let eb = other.exponents.get(&k).copied().unwrap_or(0);
            match ea.cmp(&eb) {
                Ordering::Equal => continue,
                other => return other,
            }
        }
        Ordering::Equal
    }

    /// Plain rendering like `3*u0^2*u1`; coefficient 1 is omitted unless the
    /// monomial is constant.
    pub fn render_plain(&self) -> String {
        let vars: Vec<String> = self
            .exponents
            .iter()
            .map(|(k, e)| {
                if *e == 1 {
                    format!("u{k}")
                } else {
                    format!("u{k}^{e}")
                }
            })
            .collect();
        if vars.is_empty() {
            self.coefficient.to_string()
        } else if self.coefficient.is_one() {
            vars.join("*")
        } else {
            format!("{}*{}", self.coefficient, vars.join("*"))
        }
    }

    /// LaTeX rendering like `3u_{0}^{2}u_{1}`.
    pub fn render_latex(&self) -> String {
        let vars: Vec<String> = self
            .exponents
            .iter()
            .map(|(k, e)| {
                if *e == 1 {
                    format!("u_{{{k}}}")
                } else {
                    format!("u_{{{k}}}^{{{e}}}")
                }
            })
            .collect();
        if vars.is_empty() {
            self.coefficient.to_string()
        } else if self.coefficient.is_one() {
            vars.concat()
        } else {
            format!("{}{}", self.coefficient, vars.concat())
        }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render_plain())
    }
}
