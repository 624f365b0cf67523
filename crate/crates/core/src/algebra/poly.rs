//! Commutative polynomials over named generators of even cohomological
//! degree, truncated above a fixed total degree.

use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use super::rational::Rational;
use crate::error::{Error, Result};

/// Exponent vector, one entry per generator of the basis.
pub type Monomial = Vec<u32>;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Generator {
    pub name: String,
    pub degree: u32,
}

impl Generator {
    pub fn new(name: impl Into<String>, degree: u32) -> Self {
        Generator {
            name: name.into(),
            degree,
        }
    }
}

/// The ring a polynomial lives in: ordered generators plus the degree
/// ceiling.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Basis {
    generators: Vec<Generator>,
    truncation: u32,
}

impl Basis {
    pub fn new(generators: Vec<Generator>, truncation: u32) -> Result<Arc<Basis>> {
        for (i, g) in generators.iter().enumerate() {
            if g.degree == 0 {
                return Err(Error::ZeroGeneratorDegree {
                    name: g.name.clone(),
                });
            }
            if g.degree % 2 == 1 {
                return Err(Error::OddGeneratorDegree {
                    name: g.name.clone(),
                    degree: g.degree,
                });
            }
            if generators[..i].iter().any(|h| h.name == g.name) {
                return Err(Error::DuplicateGenerator(g.name.clone()));
            }
        }
        Ok(Arc::new(Basis {
            generators,
            truncation,
        }))
    }

    /// `n` generators `prefix1..prefixn` with degrees `step, 2*step, ...`.
    pub fn classes(prefix: &str, n: usize, step: u32, truncation: u32) -> Arc<Basis> {
        let gens = (1..=n)
            .map(|k| Generator::new(format!("{prefix}{k}"), step * k as u32))
            .collect();
        Basis::new(gens, truncation).expect("class names are distinct and degrees even")
    }

    /// `n` generators `prefix1..prefixn`, all of degree `degree`.
    pub fn roots(prefix: &str, n: usize, degree: u32, truncation: u32) -> Arc<Basis> {
        let gens = (1..=n)
            .map(|k| Generator::new(format!("{prefix}{k}"), degree))
            .collect();
        Basis::new(gens, truncation).expect("root names are distinct and degrees even")
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn truncation(&self) -> u32 {
        self.truncation
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g.name == name)
    }

    pub fn degree(&self, m: &[u32]) -> u32 {
        m.iter()
            .zip(&self.generators)
            .map(|(e, g)| e * g.degree)
            .sum()
    }

    pub fn with_truncation(&self, truncation: u32) -> Arc<Basis> {
        Arc::new(Basis {
            generators: self.generators.clone(),
            truncation,
        })
    }

    /// True when both bases have the same generators in the same order.
    pub fn same_generators(&self, other: &Basis) -> bool {
        self.generators == other.generators
    }

    fn describe(&self) -> String {
        let gens: Vec<String> = self
            .generators
            .iter()
            .map(|g| format!("{}:{}", g.name, g.degree))
            .collect();
        format!("{} | trunc {}", gens.join(", "), self.truncation)
    }

    /// `h^2·k`; `1` for the empty monomial. Exponent 1 is left implicit.
    pub fn format_monomial(&self, m: &[u32]) -> String {
        let factors: Vec<String> = m
            .iter()
            .zip(&self.generators)
            .filter(|(e, _)| **e > 0)
            .map(|(e, g)| {
                if *e == 1 {
                    g.name.clone()
                } else {
                    format!("{}^{e}", g.name)
                }
            })
            .collect();
        if factors.is_empty() {
            "1".to_string()
        } else {
            factors.join("·")
        }
    }

    /// Inverse of [`Basis::format_monomial`]; also accepts `*` as separator
    /// and repeated factors.
    pub fn parse_monomial(&self, s: &str) -> Result<Monomial> {
        let bad = || Error::BadMonomial(s.to_string());
        let mut m = vec![0; self.len()];
        let t = s.trim();
        if t == "1" {
            return Ok(m);
        }
        for factor in t.split(['·', '*']) {
            let factor = factor.trim();
            let (name, exp) = match factor.split_once('^') {
                Some((n, e)) => (n.trim(), e.trim().parse::<u32>().map_err(|_| bad())?),
                None => (factor, 1),
            };
            if name.is_empty() || exp == 0 {
                return Err(bad());
            }
            let idx = self
                .index_of(name)
                .ok_or_else(|| Error::UnknownGenerator(name.to_string()))?;
            m[idx] += exp;
        }
        Ok(m)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedPolynomial {
    basis: Arc<Basis>,
    terms: BTreeMap<Monomial, Rational>,
}

impl GradedPolynomial {
    pub fn zero(basis: &Arc<Basis>) -> Self {
        GradedPolynomial {
            basis: basis.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(basis: &Arc<Basis>, c: Rational) -> Self {
        let mut p = Self::zero(basis);
        p.add_term(vec![0; basis.len()], c);
        p
    }

    pub fn one(basis: &Arc<Basis>) -> Self {
        Self::constant(basis, Rational::one())
    }

    /// `c · m`; dropped if `m` lies above the truncation.
    pub fn monomial(basis: &Arc<Basis>, m: Monomial, c: Rational) -> Self {
        assert_eq!(m.len(), basis.len(), "exponent vector length");
        let mut p = Self::zero(basis);
        p.add_term(m, c);
        p
    }

    pub fn generator(basis: &Arc<Basis>, name: &str) -> Result<Self> {
        let idx = basis
            .index_of(name)
            .ok_or_else(|| Error::UnknownGenerator(name.to_string()))?;
        Ok(Self::generator_at(basis, idx))
    }

    pub fn generator_at(basis: &Arc<Basis>, idx: usize) -> Self {
        let mut m = vec![0; basis.len()];
        m[idx] = 1;
        Self::monomial(basis, m, Rational::one())
    }

    /// Builds from `(monomial string, coefficient)` pairs.
    pub fn from_terms<'a>(
        basis: &Arc<Basis>,
        terms: impl IntoIterator<Item = (&'a str, Rational)>,
    ) -> Result<Self> {
        let mut p = Self::zero(basis);
        for (key, c) in terms {
            let m = basis.parse_monomial(key)?;
            p.add_term(m, c);
        }
        Ok(p)
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() || self.basis.degree(&m) > self.basis.truncation {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    pub fn basis(&self) -> &Arc<Basis> {
        &self.basis
    }

    pub fn truncation(&self) -> u32 {
        self.basis.truncation
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    /// Terms in printing order: ascending degree, then ascending exponent
    /// vector.
    pub fn sorted_terms(&self) -> Vec<(&Monomial, &Rational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| {
            self.basis
                .degree(a.0)
                .cmp(&self.basis.degree(b.0))
                .then_with(|| a.0.cmp(b.0))
        });
        v
    }

    /// Lexicographically largest term.
    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn coefficient(&self, m: &[u32]) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coefficient_of(&self, key: &str) -> Result<Rational> {
        Ok(self.coefficient(&self.basis.parse_monomial(key)?))
    }

    pub fn constant_term(&self) -> Rational {
        self.coefficient(&vec![0; self.basis.len()])
    }

    /// Largest degree carrying a nonzero term.
    pub fn top_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| self.basis.degree(m)).max()
    }

    pub fn homogeneous(&self, degree: u32) -> Self {
        GradedPolynomial {
            basis: self.basis.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| self.basis.degree(m) == degree)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn is_homogeneous_of(&self, degree: u32) -> bool {
        self.terms.keys().all(|m| self.basis.degree(m) == degree)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(&self.basis);
        }
        GradedPolynomial {
            basis: self.basis.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    fn check_basis(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.basis, &other.basis) || self.basis == other.basis {
            Ok(())
        } else {
            Err(Error::MismatchedBasis {
                left: self.basis.describe(),
                right: other.basis.describe(),
            })
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_basis(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&-other)
    }

    /// Product with every term above the truncation discarded.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_basis(other)?;
        let trunc = self.basis.truncation;
        let mut out = Self::zero(&self.basis);
        for (ma, ca) in &self.terms {
            let da = self.basis.degree(ma);
            for (mb, cb) in &other.terms {
                if da + self.basis.degree(mb) > trunc {
                    continue;
                }
                let m: Monomial = ma.iter().zip(mb).map(|(a, b)| a + b).collect();
                out.add_term(m, ca * cb);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(&self.basis);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Drops terms above `truncation`; the new ceiling may not exceed the
    /// current one.
    pub fn truncate(&self, truncation: u32) -> Self {
        let t = truncation.min(self.basis.truncation);
        let basis = self.basis.with_truncation(t);
        let mut out = Self::zero(&basis);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    /// Moves the polynomial into `target`, matching generators by name.
    /// Terms above the target truncation are dropped.
    pub fn rebase(&self, target: &Arc<Basis>) -> Result<Self> {
        let mut map = Vec::with_capacity(self.basis.len());
        for g in self.basis.generators() {
            let idx = target.index_of(&g.name);
            if let Some(i) = idx {
                if target.generators[i].degree != g.degree {
                    return Err(Error::MismatchedBasis {
                        left: self.basis.describe(),
                        right: target.describe(),
                    });
                }
            }
            map.push(idx);
        }
        let mut out = Self::zero(target);
        for (m, c) in &self.terms {
            let mut tm = vec![0; target.len()];
            for (i, e) in m.iter().enumerate() {
                if *e == 0 {
                    continue;
                }
                match map[i] {
                    Some(j) => tm[j] = *e,
                    None => {
                        return Err(Error::UnknownGenerator(
                            self.basis.generators[i].name.clone(),
                        ))
                    }
                }
            }
            out.add_term(tm, c.clone());
        }
        Ok(out)
    }

    /// Reorders generators: generator `i` is replaced by generator `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> Self {
        let mut out = Self::zero(&self.basis);
        for (m, c) in &self.terms {
            let mut pm = vec![0; m.len()];
            for (i, e) in m.iter().enumerate() {
                pm[perm[i]] += e;
            }
            out.add_term(pm, c.clone());
        }
        out
    }

    /// Ring map sending generator `i` to `images[i]`.
    ///
    /// Images live in a common target basis and must be homogeneous of the
    /// degree of the generator they replace, so truncation commutes with the
    /// substitution.
    pub fn substitute(&self, images: &[GradedPolynomial]) -> Result<Self> {
        if images.len() != self.basis.len() {
            return Err(Error::OutOfRange(format!(
                "substitution needs {} images, got {}",
                self.basis.len(),
                images.len()
            )));
        }
        let Some(first) = images.first() else {
            return Err(Error::OutOfRange(
                "substitution over an empty basis has no target ring".into(),
            ));
        };
        let target = first.basis.clone();
        for (img, g) in images.iter().zip(self.basis.generators()) {
            first.check_basis(img)?;
            if !img.is_homogeneous_of(g.degree) {
                return Err(Error::DegreeMismatch {
                    what: format!("image of `{}`", g.name),
                    expected: g.degree,
                });
            }
        }
        let mut powers: Vec<Vec<GradedPolynomial>> = images
            .iter()
            .map(|img| vec![Self::one(&target), img.clone()])
            .collect();
        let mut out = Self::zero(&target);
        for (m, c) in &self.terms {
            let mut term = Self::constant(&target, c.clone());
            for (i, &e) in m.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = &powers[i][powers[i].len() - 1] * &images[i];
                    powers[i].push(next);
                }
                term = &term * &powers[i][e as usize];
                if term.is_zero() {
                    break;
                }
            }
            for (tm, tc) in term.terms {
                out.add_term(tm, tc);
            }
        }
        Ok(out)
    }

    /// Homogeneous components of degree 0, 2, ..., truncation.
    pub fn components(&self) -> Vec<GradedPolynomial> {
        (0..=self.basis.truncation)
            .step_by(2)
            .map(|d| self.homogeneous(d))
            .collect()
    }
}

impl Add for &GradedPolynomial {
    type Output = GradedPolynomial;
    fn add(self, rhs: Self) -> GradedPolynomial {
        self.try_add(rhs).expect("polynomials over one basis")
    }
}

impl Sub for &GradedPolynomial {
    type Output = GradedPolynomial;
    fn sub(self, rhs: Self) -> GradedPolynomial {
        self.try_sub(rhs).expect("polynomials over one basis")
    }
}

impl Mul for &GradedPolynomial {
    type Output = GradedPolynomial;
    fn mul(self, rhs: Self) -> GradedPolynomial {
        self.try_mul(rhs).expect("polynomials over one basis")
    }
}

impl Neg for &GradedPolynomial {
    type Output = GradedPolynomial;
    fn neg(self) -> GradedPolynomial {
        self.scale(&-Rational::one())
    }
}

pub(crate) fn write_term(
    f: &mut fmt::Formatter<'_>,
    c: &Rational,
    mono: &str,
    first: bool,
) -> fmt::Result {
    let neg = c.is_negative();
    let abs = c.abs();
    if first {
        if neg {
            write!(f, "\u{2212}")?;
        }
    } else if neg {
        write!(f, " \u{2212} ")?;
    } else {
        write!(f, " + ")?;
    }
    if mono.is_empty() || mono == "1" {
        write!(f, "{abs}")
    } else if abs.is_one() {
        write!(f, "{mono}")
    } else {
        write!(f, "{abs}·{mono}")
    }
}

impl fmt::Display for GradedPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.sorted_terms();
        if terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in terms.into_iter().enumerate() {
            write_term(f, c, &self.basis.format_monomial(m), i == 0)?;
        }
        Ok(())
    }
}
