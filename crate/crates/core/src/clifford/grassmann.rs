//! Grassmann algebra on generators `ψ^1..ψ^N` with Gaussian-rational
//! coefficients, and Berezin integration.

use std::collections::BTreeMap;
use std::fmt;

use num_complex::Complex;
use num_traits::{One, Zero};

use crate::algebra::rational::{pretty, Rational};
use crate::error::{Error, Result};

pub type Gaussian = Complex<Rational>;

pub fn gaussian(re: Rational, im: Rational) -> Gaussian {
    Complex::new(re, im)
}

pub fn imaginary_unit() -> Gaussian {
    Complex::new(Rational::zero(), Rational::one())
}

/// Sum of monomials `ψ^{i_1} ⋯ ψ^{i_k}` with strictly increasing indices.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct GrassmannElement {
    terms: BTreeMap<Vec<u32>, Gaussian>,
}

/// Sign that sorts the concatenation `a ++ b`, or `None` if an index repeats.
fn merge(a: &[u32], b: &[u32]) -> Option<(Vec<u32>, bool)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    let mut odd = false;
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i] < b[j]) {
            out.push(a[i]);
            i += 1;
        } else if i == a.len() || b[j] < a[i] {
            // b[j] jumps over the a[i..] still waiting.
            if (a.len() - i) % 2 == 1 {
                odd = !odd;
            }
            out.push(b[j]);
            j += 1;
        } else {
            return None;
        }
    }
    Some((out, odd))
}

impl GrassmannElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn scalar(c: Gaussian) -> Self {
        let mut e = Self::zero();
        e.add_term(Vec::new(), c);
        e
    }

    pub fn one() -> Self {
        Self::scalar(Gaussian::one())
    }

    /// `ψ^k`, `k ≥ 1`.
    pub fn generator(k: u32) -> Self {
        assert!(k >= 1, "generators are numbered from 1");
        let mut e = Self::zero();
        e.add_term(vec![k], Gaussian::one());
        e
    }

    /// `ψ^{i_1} ψ^{i_2} ⋯` in the given order.
    pub fn product_of(indices: &[u32]) -> Self {
        indices
            .iter()
            .fold(Self::one(), |acc, &k| acc.mul(&Self::generator(k)))
    }

    fn add_term(&mut self, m: Vec<u32>, c: Gaussian) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m).or_insert_with(Gaussian::zero);
        *slot = &*slot + c;
        if slot.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Gaussian)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, sorted: &[u32]) -> Gaussian {
        self.terms.get(sorted).cloned().unwrap_or_else(Gaussian::zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Gaussian) -> Self {
        let mut out = Self::zero();
        for (m, v) in &self.terms {
            out.add_term(m.clone(), v * c);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                if let Some((m, odd)) = merge(a, b) {
                    let c = x * y;
                    out.add_term(m, if odd { -c } else { c });
                }
            }
        }
        out
    }
}

/// Order in which the measure `dψ^1 ⋯ dψ^N` reads the top monomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum MeasureConvention {
    /// Innermost differential acts first from the left: the integral is the
    /// coefficient of `ψ^N ⋯ ψ^1`.
    #[default]
    Reversed,
    /// The integral is the coefficient of `ψ^1 ⋯ ψ^N`.
    Ordered,
}

/// Berezin integral over `ψ^1..ψ^{n_gen}` with the default convention.
pub fn berezin_integrate(e: &GrassmannElement, n_gen: u32) -> Gaussian {
    berezin_integrate_with(e, n_gen, MeasureConvention::Reversed)
}

pub fn berezin_integrate_with(e: &GrassmannElement, n_gen: u32, convention: MeasureConvention) -> Gaussian {
    let top: Vec<u32> = (1..=n_gen).collect();
    let c = e.coefficient(&top);
    // Reversing N generators costs N(N-1)/2 transpositions.
    let reversal_odd = (n_gen as u64 * (n_gen as u64).saturating_sub(1) / 2) % 2 == 1;
    match convention {
        MeasureConvention::Reversed if reversal_odd => -c,
        _ => c,
    }
}

/// `N` solving `2^n = N (2i)^n ∫ψ^1⋯ψ^{2n}`; equals `i^n`.
pub fn normalization_psi2(n: u32) -> Result<Gaussian> {
    if !(1..=super::gamma::MAX_HALF_DIM as u32).contains(&n) {
        return Err(Error::OutOfRange(format!("normalization needs 1 <= n <= 5, got {n}")));
    }
    let top: Vec<u32> = (1..=2 * n).collect();
    let integral = berezin_integrate(&GrassmannElement::product_of(&top), 2 * n);
    let two_i = imaginary_unit() * Rational::from_integer(2.into());
    let denom = (0..n).fold(integral, |acc, _| acc * &two_i);
    if denom.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let two_n = Gaussian::from(Rational::from_integer((1u64 << n).into()));
    Ok(two_n / denom)
}

/// `i^n` in Gaussian rationals.
pub fn i_pow(n: u32) -> Gaussian {
    (0..n % 4).fold(Gaussian::one(), |acc, _| acc * imaginary_unit())
}

pub fn format_gaussian(z: &Gaussian) -> String {
    match (z.re.is_zero(), z.im.is_zero()) {
        (_, true) => pretty(&z.re),
        (true, false) if z.im == Rational::one() => "i".into(),
        (true, false) if z.im == -Rational::one() => "\u{2212}i".into(),
        (true, false) => format!("{}i", pretty(&z.im)),
        (false, false) => {
            let sign = if z.im < Rational::zero() { "\u{2212}" } else { "+" };
            format!("{} {sign} {}i", pretty(&z.re), pretty(&num_traits::Signed::abs(&z.im)))
        }
    }
}

impl fmt::Display for GrassmannElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mono: Vec<String> = m.iter().map(|k| format!("ψ{k}")).collect();
                if mono.is_empty() {
                    format!("({})", format_gaussian(c))
                } else {
                    format!("({})·{}", format_gaussian(c), mono.join("·"))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}
