//! Truncated power series with exact coefficients and the generating
//! functions of the genera.

use num_bigint::BigInt;
use num_traits::{One, Pow, Zero};
use std::fmt;

use super::bernoulli::bernoulli_table;
use super::rational::{checked_div, factorial, Rational};
use crate::error::{Error, Result};

/// `sum_{k=0}^{order} coefficients[k] x^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TaylorSeries {
    variable: String,
    coefficients: Vec<Rational>,
}

/// Generating functions used for characteristic classes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SeriesKind {
    /// `x / tanh x`
    L,
    /// `(x/2) / sinh(x/2)`
    AHat,
    /// `x / (1 - e^{-x})`
    Todd,
    /// `e^x`
    Exp,
}

impl TaylorSeries {
    pub fn new(variable: impl Into<String>, coefficients: Vec<Rational>) -> Self {
        assert!(!coefficients.is_empty(), "a series keeps at least x^0");
        TaylorSeries {
            variable: variable.into(),
            coefficients,
        }
    }

    pub fn one(order: usize) -> Self {
        let mut c = vec![Rational::zero(); order + 1];
        c[0] = Rational::one();
        Self::new("x", c)
    }

    pub fn variable(&self) -> &str {
        &self.variable
    }

    pub fn order(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coefficients
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coefficients.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_even(&self) -> bool {
        self.coefficients.iter().skip(1).step_by(2).all(Zero::is_zero)
    }

    /// Product truncated at the smaller of the two orders.
    pub fn mul(&self, other: &TaylorSeries) -> TaylorSeries {
        let order = self.order().min(other.order());
        let mut out = vec![Rational::zero(); order + 1];
        for (i, a) in self.coefficients.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coefficients.iter().enumerate().take(order + 1 - i) {
                out[i + j] += a * b;
            }
        }
        TaylorSeries::new(self.variable.clone(), out)
    }

    /// Multiplicative inverse; needs a nonzero constant term.
    pub fn inverse(&self) -> Result<TaylorSeries> {
        let c0 = &self.coefficients[0];
        if c0.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.order();
        let mut inv: Vec<Rational> = Vec::with_capacity(n + 1);
        inv.push(checked_div(&Rational::one(), c0)?);
        for k in 1..=n {
            let s = (1..=k).fold(Rational::zero(), |acc, j| {
                acc + &self.coefficients[j] * &inv[k - j]
            });
            inv.push(-s / c0);
        }
        Ok(TaylorSeries::new(self.variable.clone(), inv))
    }

    /// `f(factor * x)`.
    pub fn rescale(&self, factor: &Rational) -> TaylorSeries {
        let mut power = Rational::one();
        let coefficients = self
            .coefficients
            .iter()
            .map(|c| {
                let out = c * &power;
                power *= factor;
                out
            })
            .collect();
        TaylorSeries::new(self.variable.clone(), coefficients)
    }

    pub fn scale(&self, factor: &Rational) -> TaylorSeries {
        TaylorSeries::new(
            self.variable.clone(),
            self.coefficients.iter().map(|c| c * factor).collect(),
        )
    }

    pub fn truncate(&self, order: usize) -> TaylorSeries {
        let mut c = self.coefficients.clone();
        c.resize(order + 1, Rational::zero());
        TaylorSeries::new(self.variable.clone(), c)
    }
}

/// Truncated Taylor expansion of one of the genus generating functions.
///
/// Coefficients come from Bernoulli numbers:
/// * `x/tanh x`: `2^{2k} B_{2k} / (2k)!` at `x^{2k}`
/// * `(x/2)/sinh(x/2)`: `(2 - 2^{2k}) B_{2k} / ((2k)! 4^k)` at `x^{2k}`
/// * `x/(1-e^{-x})`: `(-1)^k B_k / k!` at `x^k`
pub fn genus_series(kind: SeriesKind, order: usize) -> TaylorSeries {
    let bern = bernoulli_table(order);
    let coefficients = (0..=order)
        .map(|k| {
            let fact = Rational::from_integer(factorial(k));
            match kind {
                SeriesKind::Exp => Rational::one() / fact,
                SeriesKind::Todd => {
                    let sign = if k % 2 == 1 { -Rational::one() } else { Rational::one() };
                    sign * &bern[k] / fact
                }
                SeriesKind::L if k % 2 == 0 => {
                    let two_pow = Rational::from_integer(BigInt::from(2).pow(k as u32));
                    two_pow * &bern[k] / fact
                }
                SeriesKind::AHat if k % 2 == 0 => {
                    let two_pow = Rational::from_integer(BigInt::from(2).pow(k as u32));
                    (Rational::from_integer(2.into()) - &two_pow) * &bern[k] / (fact * two_pow)
                }
                SeriesKind::L | SeriesKind::AHat => Rational::zero(),
            }
        })
        .collect();
    TaylorSeries::new("x", coefficients)
}

impl fmt::Display for TaylorSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coefficients.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mono = match k {
                0 => String::new(),
                1 => self.variable.clone(),
                _ => format!("{}^{k}", self.variable),
            };
            super::poly::write_term(f, c, &mono, first)?;
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O({}^{})", self.variable, self.order() + 1)
    }
}
