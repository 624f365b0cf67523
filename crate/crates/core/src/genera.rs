//! Multiplicative sequences, the L, Â and Todd classes, and the Chern
//! character.
//!
//! Every genus is computed from its generating series: the product
//! `prod_i f(x_i)` over formal roots is expanded and then rewritten in the
//! elementary symmetric classes. Nothing is tabulated.

use num_bigint::BigInt;
use num_traits::{One, Pow};
use std::sync::Arc;

use crate::algebra::poly::{Basis, GradedPolynomial};
use crate::algebra::rational::{factorial, Rational};
use crate::algebra::series::{genus_series, SeriesKind, TaylorSeries};
use crate::algebra::symmetric::symmetric_reduce;
use crate::error::{Error, Result};

/// How formal roots are graded before reduction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RootGrading {
    /// Roots `x_i` of degree 2; classes `e_k(x)` of degree `2k`.
    Chern,
    /// Even series regrouped over `x_i^2` of degree 4; classes
    /// `e_k(x^2)` of degree `4k`.
    Pontryagin,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GenusKind {
    L,
    AHat,
    Todd,
}

impl GenusKind {
    pub fn series_kind(self) -> SeriesKind {
        match self {
            GenusKind::L => SeriesKind::L,
            GenusKind::AHat => SeriesKind::AHat,
            GenusKind::Todd => SeriesKind::Todd,
        }
    }

    pub fn grading(self) -> RootGrading {
        match self {
            GenusKind::L | GenusKind::AHat => RootGrading::Pontryagin,
            GenusKind::Todd => RootGrading::Chern,
        }
    }

    pub fn class_prefix(self) -> &'static str {
        match self.grading() {
            RootGrading::Pontryagin => "p",
            RootGrading::Chern => "c",
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            GenusKind::L => "L",
            GenusKind::AHat => "Ahat",
            GenusKind::Todd => "Todd",
        }
    }
}

impl std::str::FromStr for GenusKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "l" => Ok(GenusKind::L),
            "ahat" | "a_hat" | "a-hat" => Ok(GenusKind::AHat),
            "todd" | "td" => Ok(GenusKind::Todd),
            _ => Err(Error::OutOfRange(format!("unknown genus kind `{s}`"))),
        }
    }
}

/// A genus written in characteristic classes.
///
/// `half_dim` is the number of formal roots. The polynomial is complete up
/// to `truncation`: `4·half_dim` for the Pontryagin genera L and Â,
/// `2·half_dim` for Todd.
#[derive(Clone, Debug, PartialEq)]
pub struct GenusClass {
    pub kind: GenusKind,
    pub half_dim: usize,
    pub polynomial: GradedPolynomial,
    pub truncation: u32,
}

/// `rank + c_1 + (c_1^2 - 2c_2)/2 + ...` in the ambient ring.
#[derive(Clone, Debug, PartialEq)]
pub struct ChernCharacter {
    pub rank: u32,
    pub polynomial: GradedPolynomial,
}

/// `prod_{i=1}^{n} f(x_i)`, truncated and rewritten in `class_names`.
pub fn multiplicative_sequence(
    f: &TaylorSeries,
    n_roots: usize,
    class_names: &[&str],
    grading: RootGrading,
) -> Result<GradedPolynomial> {
    if !f.coeff(0).is_one() {
        return Err(Error::NonUnitConstant(f.coeff(0).to_string()));
    }
    let (root_degree, per_root): (u32, Vec<Rational>) = match grading {
        RootGrading::Chern => {
            if f.order() < n_roots {
                return Err(Error::SeriesTooShort {
                    have: f.order(),
                    need: n_roots,
                });
            }
            (2, f.coefficients()[..=n_roots].to_vec())
        }
        RootGrading::Pontryagin => {
            if !f.is_even() {
                return Err(Error::OddSeries);
            }
            if f.order() < 2 * n_roots {
                return Err(Error::SeriesTooShort {
                    have: f.order(),
                    need: 2 * n_roots,
                });
            }
            (4, (0..=n_roots).map(|k| f.coeff(2 * k)).collect())
        }
    };
    let truncation = root_degree * n_roots as u32;
    let roots = Basis::roots("x", n_roots, root_degree, truncation);
    let mut product = GradedPolynomial::one(&roots);
    for i in 0..n_roots {
        let factor = per_root
            .iter()
            .enumerate()
            .fold(GradedPolynomial::zero(&roots), |acc, (k, c)| {
                let mut m = vec![0; n_roots];
                m[i] = k as u32;
                &acc + &GradedPolynomial::monomial(&roots, m, c.clone())
            });
        product = product.try_mul(&factor)?;
    }
    symmetric_reduce(&product, n_roots, class_names)
}

fn class_names(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|k| format!("{prefix}{k}")).collect()
}

pub fn genus_class(kind: GenusKind, half_dim: usize) -> GenusClass {
    let names = class_names(kind.class_prefix(), half_dim);
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    let grading = kind.grading();
    let order = match grading {
        RootGrading::Chern => half_dim,
        RootGrading::Pontryagin => 2 * half_dim,
    };
    let series = genus_series(kind.series_kind(), order);
    let polynomial = multiplicative_sequence(&series, half_dim, &refs, grading)
        .expect("genus series have unit constant term and are symmetric by construction");
    GenusClass {
        kind,
        half_dim,
        truncation: polynomial.truncation(),
        polynomial,
    }
}

/// L-genus in `p1..pl`.
pub fn l_class(l: usize) -> GenusClass {
    genus_class(GenusKind::L, l)
}

/// Â-genus in `p1..pl`.
pub fn a_hat_class(l: usize) -> GenusClass {
    genus_class(GenusKind::AHat, l)
}

/// Todd class in `c1..cn`.
pub fn todd_class(n: usize) -> GenusClass {
    genus_class(GenusKind::Todd, n)
}

/// Chern character from Chern classes via Newton's identities.
///
/// `chern_classes[i]` is `c_{i+1}` and must be homogeneous of degree
/// `2(i+1)` in `basis` (a truncation different from `basis` is fine).
pub fn chern_character(
    rank: u32,
    chern_classes: &[GradedPolynomial],
    basis: &Arc<Basis>,
) -> Result<ChernCharacter> {
    let mut e = Vec::with_capacity(chern_classes.len());
    for (i, c) in chern_classes.iter().enumerate() {
        let deg = 2 * (i as u32 + 1);
        if !c.basis().same_generators(basis) || !c.is_homogeneous_of(deg) {
            return Err(Error::DegreeMismatch {
                what: format!("c{}", i + 1),
                expected: deg,
            });
        }
        e.push(c.rebase(basis)?);
    }
    let kmax = (basis.truncation() / 2) as usize;
    let zero = GradedPolynomial::zero(basis);
    let class = |i: usize| e.get(i - 1).unwrap_or(&zero);
    // Power sums s_k = sum_i x_i^k.
    let mut power_sums: Vec<GradedPolynomial> = Vec::with_capacity(kmax + 1);
    power_sums.push(GradedPolynomial::constant(
        basis,
        Rational::from_integer(rank.into()),
    ));
    for k in 1..=kmax {
        let mut s = class(k).scale(&Rational::from_integer(BigInt::from(k)));
        if k % 2 == 0 {
            s = -&s;
        }
        for i in 1..k {
            let t = class(i) * &power_sums[k - i];
            s = if i % 2 == 1 { &s + &t } else { &s - &t };
        }
        power_sums.push(s);
    }
    let polynomial = power_sums
        .iter()
        .enumerate()
        .fold(GradedPolynomial::zero(basis), |acc, (k, s)| {
            &acc + &s.scale(&(Rational::one() / Rational::from_integer(factorial(k))))
        });
    Ok(ChernCharacter { rank, polynomial })
}

/// Splits a total class `1 + c_1 + c_2 + ...` into `[c_1, c_2, ...]` with
/// `c_k` the degree `step·k` component, for `k = 1..=count`.
pub fn split_total_class(total: &GradedPolynomial, step: u32, count: usize) -> Vec<GradedPolynomial> {
    (1..=count)
        .map(|k| total.homogeneous(step * k as u32))
        .collect()
}

/// `p_k = (-1)^k [c · c̄]_{4k}` for `k = 1..=real_dim/4`, where `c̄` flips the
/// sign of odd classes; this is `prod (1 + x_i)(1 - x_i)` regrouped.
pub fn chern_to_pontryagin(
    chern_classes: &[GradedPolynomial],
    real_dim: u32,
) -> Result<Vec<GradedPolynomial>> {
    let Some(first) = chern_classes.first() else {
        return Ok(Vec::new());
    };
    let basis = first.basis().clone();
    let mut total = GradedPolynomial::one(&basis);
    let mut conjugate = GradedPolynomial::one(&basis);
    for (i, c) in chern_classes.iter().enumerate() {
        let deg = 2 * (i as u32 + 1);
        if !c.is_homogeneous_of(deg) {
            return Err(Error::DegreeMismatch {
                what: format!("c{}", i + 1),
                expected: deg,
            });
        }
        total = total.try_add(c)?;
        conjugate = if i % 2 == 0 {
            conjugate.try_sub(c)?
        } else {
            conjugate.try_add(c)?
        };
    }
    let product = total.try_mul(&conjugate)?;
    Ok((1..=real_dim / 4)
        .map(|k| {
            let comp = product.homogeneous(4 * k);
            if k % 2 == 1 {
                -&comp
            } else {
                comp
            }
        })
        .collect())
}

/// Checks that `2^l prod (x_i/2)/tanh(x_i/2)` and `prod x_i/tanh x_i` agree
/// in top degree `2l` over `l` roots of degree 2.
///
/// Lower components differ by powers of two; only the top form survives
/// integration, which is the content of the identity.
pub fn signature_integrand_identity_check(l: usize) -> Result<bool> {
    if l > 6 {
        return Err(Error::OutOfRange(format!("identity check supports l <= 6, got {l}")));
    }
    let roots = Basis::roots("x", l, 2, 2 * l as u32);
    let f = genus_series(SeriesKind::L, l);
    let half = f.rescale(&Rational::new(1.into(), 2.into()));
    let product = |s: &TaylorSeries| {
        (0..l).fold(GradedPolynomial::one(&roots), |acc, i| {
            let factor = s.coefficients().iter().enumerate().fold(
                GradedPolynomial::zero(&roots),
                |f, (k, c)| {
                    let mut m = vec![0; l];
                    m[i] = k as u32;
                    &f + &GradedPolynomial::monomial(&roots, m, c.clone())
                },
            );
            &acc * &factor
        })
    };
    let two_pow = Rational::from_integer(BigInt::from(2).pow(l as u32));
    let lhs = product(&half).scale(&two_pow);
    let rhs = product(&f);
    let top = 2 * l as u32;
    Ok(lhs.homogeneous(top) == rhs.homogeneous(top))
}
