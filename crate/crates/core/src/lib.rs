//! Exact Adomian decomposition for first-order problems with a power
//! nonlinearity: u' = c u + b u^eta + f(t), u(0) = u0.
//!
//! The crate generates the decomposition polynomials A_n for N(u) = u^eta by
//! two independent routes, runs the decomposition recursion in exact rational
//! arithmetic, evaluates the Bernoulli closed form at arbitrary decimal
//! precision, and exports comparison tables and plot data.
//!
//! - [`adomian`]: the polynomials A_n, their canonical form and rendering
//! - [`solver`]: the decomposition recursion and series partial sums
//! - [`reference`]: closed forms, an independent Taylor-recurrence oracle,
//!   and blow-up times
//! - [`table`]: comparison tables, figure data, listings
//! - [`rational`], [`timepoly`], [`hpreal`]: the numeric kernel

pub mod adomian;
pub mod error;
pub mod hpreal;
pub mod monomial;
pub mod rational;
pub mod reference;
pub mod solver;
pub mod table;
pub mod timepoly;

pub use adomian::{AdomianPolynomial, LambdaSeries, RenderFormat};
pub use error::{Error, Result};
pub use hpreal::{HPReal, DEFAULT_DIGITS, MIN_DIGITS};
pub use monomial::Monomial;
pub use rational::Rational;
pub use reference::{closed_form, taylor_series, ClosedFormSolution};
pub use solver::{solve, ODEProblem, SeriesSolution};
pub use table::{
    build_comparison_table, figure_data, list_polynomials, ComparisonRow, ComparisonTable,
    TableFormat,
};
pub use timepoly::TimePolynomial;
