//! Exact rationals over arbitrary-precision integers.
//!
//! `num_rational::BigRational` keeps every value reduced with a positive
//! denominator, so `Rational` is a plain alias and the helpers here only add
//! what that type lacks: fallible division, parsing with our error type and
//! small-integer constructors.

use num_bigint::BigInt;
use num_traits::{CheckedDiv, One, Signed, Zero};
use std::str::FromStr;

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

/// `num/den` from machine integers, reduced.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn checked_div(a: &Rational, b: &Rational) -> Result<Rational> {
    a.checked_div(b).ok_or(Error::DivisionByZero)
}

/// Parses `"7/45"`, `"-3"` or `"2/4"` (normalised to `1/2`).
pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim().replace('\u{2212}', "-");
    if let Some((_, den)) = t.split_once('/') {
        if BigInt::from_str(den.trim()).map(|d| d.is_zero()).unwrap_or(false) {
            return Err(Error::DivisionByZero);
        }
    }
    Rational::from_str(&t).map_err(|_| Error::BadRational(s.to_string()))
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    num_integer::binomial(BigInt::from(n), BigInt::from(k))
}

/// Integer value if the denominator is one.
pub fn as_integer(q: &Rational) -> Option<BigInt> {
    q.is_integer().then(|| q.to_integer())
}

/// Renders with the typographic minus sign used in human-readable output.
pub fn pretty(q: &Rational) -> String {
    if q.is_negative() {
        format!("\u{2212}{}", -q)
    } else {
        q.to_string()
    }
}

pub fn pretty_int(n: &BigInt) -> String {
    if n.is_negative() {
        format!("\u{2212}{}", -n)
    } else {
        n.to_string()
    }
}
