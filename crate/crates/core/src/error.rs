//! Crate-wide error type.

use std::fmt;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Attempt to construct a rational with denominator zero.
    ZeroDenominator,
    /// A monomial violates the degree/weight contract of its owning polynomial.
    InvalidMonomial {
        term: String,
        expected_degree: u32,
        expected_weight: u32,
    },
    /// Substitution was given fewer components than the polynomial order requires.
    MissingComponents { required: usize, provided: usize },
    /// A partial-sum or evaluation order exceeds the solved order.
    OrderOutOfRange { requested: usize, available: usize },
    /// Closed forms are only defined for exponents eta >= 2.
    UnsupportedExponent { eta: u32 },
    /// Closed forms are only defined for unforced problems.
    UnsupportedForcing,
    /// Evaluation at or past the blow-up time (or off the real branch).
    Singularity { at: String, blow_up: Option<String> },
    /// A malformed argument (bad sample count, empty grid, bad parse, ...).
    InvalidArgument(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ZeroDenominator => write!(f, "denominator must be nonzero"),
            Error::InvalidMonomial {
                term,
                expected_degree,
                expected_weight,
            } => write!(
                f,
                "monomial {term} violates the (degree {expected_degree}, weight {expected_weight}) contract"
            ),
            Error::MissingComponents { required, provided } => write!(
                f,
                "substitution requires {required} components, got {provided}"
            ),
            Error::OrderOutOfRange {
                requested,
                available,
            } => write!(
                f,
                "order {requested} out of range (solution has components 0..={available})"
            ),
            Error::UnsupportedExponent { eta } => {
                write!(f, "closed form requires eta >= 2, got {eta}")
            }
            Error::UnsupportedForcing => {
                write!(f, "closed form is only available for unforced problems")
            }
            Error::Singularity { at, blow_up } => match blow_up {
                Some(t) => write!(f, "t = {at} is at or past the blow-up time t* = {t}"),
                None => write!(f, "solution is singular at t = {at}"),
            },
            Error::InvalidArgument(msg) => write!(f, "{msg}"),
        }
    }
}

impl std::error::Error for Error {}
