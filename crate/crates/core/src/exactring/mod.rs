//! Exact scalar arithmetic.
//!
//! Rationals are `num_rational::BigRational`. On top of them sit the checked
//! parameter pair [`Params`], sparse multivariate polynomials [`MultiPoly`] in
//! the evaluation variables `u_1, u_2, …`, and fractions [`FactoredFraction`]
//! whose denominators are kept as multisets of linear factors.

mod fraction;
mod params;
mod poly;
mod rational;

pub use fraction::{FactoredFraction, LinearFactor};
pub use params::Params;
pub use poly::{divide_linear, Monomial, MultiPoly};
pub use rational::{format_rational, parse_rational, pow_i64, rat, Rational};
