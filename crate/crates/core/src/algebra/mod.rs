//! Exact arithmetic: rationals, Bernoulli numbers, truncated series, graded
//! polynomial rings and symmetric reduction.

pub mod bernoulli;
pub mod poly;
pub mod rational;
pub mod series;
pub mod symmetric;

pub use bernoulli::{bernoulli, bernoulli_table};
pub use poly::{Basis, Generator, GradedPolynomial, Monomial};
pub use rational::{checked_div, int, parse_rational, rat, Rational};
pub use series::{genus_series, SeriesKind, TaylorSeries};
pub use symmetric::{elementary_symmetric, expand_in_roots, symmetric_reduce};
