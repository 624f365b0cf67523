//! Signature, Dolbeault, spin and Euler indices on manifolds described by
//! their characteristic numbers.
//!
//! A manifold is a ring of generators together with the values of every
//! top-degree monomial on the fundamental class. Relations in cohomology are
//! never needed: an index is a linear functional on characteristic numbers.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::poly::{Basis, GradedPolynomial, Monomial};
use crate::algebra::rational::{as_integer, pretty, Rational};
use crate::algebra::series::{genus_series, SeriesKind};
use crate::error::{Error, Result};
use crate::genera::{
    a_hat_class, chern_character, chern_to_pontryagin, l_class, multiplicative_sequence,
    split_total_class, todd_class, RootGrading,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ManifoldKind {
    /// Tangent data given as the total Pontryagin class.
    OrientedReal,
    /// Tangent data given as the total Chern class.
    Complex,
}

impl ManifoldKind {
    pub fn name(self) -> &'static str {
        match self {
            ManifoldKind::OrientedReal => "oriented_real",
            ManifoldKind::Complex => "complex",
        }
    }
}

/// Index values recorded alongside a catalog entry.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ExpectedIndices {
    pub signature: Option<i64>,
    pub todd: Option<i64>,
    pub a_hat: Option<i64>,
    pub euler: Option<i64>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ManifoldDescriptor {
    name: String,
    real_dim: u32,
    kind: ManifoldKind,
    basis: Arc<Basis>,
    evaluation: BTreeMap<Monomial, BigInt>,
    tangent_class: GradedPolynomial,
    euler_class: Option<GradedPolynomial>,
    pub expected: ExpectedIndices,
}

fn invalid(field: &str, reason: impl Into<String>) -> Error {
    Error::InvalidField {
        field: field.to_string(),
        reason: reason.into(),
    }
}

impl ManifoldDescriptor {
    /// Validates and builds a descriptor. The polynomials are moved into a
    /// basis truncated at `real_dim`.
    pub fn new(
        name: impl Into<String>,
        real_dim: u32,
        kind: ManifoldKind,
        basis: &Arc<Basis>,
        evaluation: BTreeMap<Monomial, BigInt>,
        tangent_class: &GradedPolynomial,
        euler_class: Option<&GradedPolynomial>,
    ) -> Result<Self> {
        let name = name.into();
        if real_dim == 0 || real_dim % 2 == 1 {
            return Err(invalid("real_dim", format!("must be even and positive, got {real_dim}")));
        }
        let basis = basis.with_truncation(real_dim);
        for m in evaluation.keys() {
            if m.len() != basis.len() {
                return Err(invalid("evaluation", "exponent vector length"));
            }
            let d = basis.degree(m);
            if d != real_dim {
                return Err(invalid(
                    "evaluation",
                    format!("`{}` has degree {d}, expected {real_dim}", basis.format_monomial(m)),
                ));
            }
        }
        let tangent = tangent_class
            .rebase(&basis)
            .map_err(|e| invalid("tangent_class", e.to_string()))?;
        if !tangent.constant_term().is_one() {
            return Err(invalid("tangent_class", "degree-0 term must be 1"));
        }
        let euler = match euler_class {
            Some(e) => {
                let e = e.rebase(&basis).map_err(|e| invalid("euler_class", e.to_string()))?;
                if !e.is_homogeneous_of(real_dim) {
                    return Err(invalid("euler_class", format!("must have pure degree {real_dim}")));
                }
                Some(e)
            }
            None => None,
        };
        Ok(ManifoldDescriptor {
            name,
            real_dim,
            kind,
            basis,
            evaluation,
            tangent_class: tangent,
            euler_class: euler,
            expected: ExpectedIndices::default(),
        })
    }

    pub fn with_expected(mut self, expected: ExpectedIndices) -> Self {
        self.expected = expected;
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn real_dim(&self) -> u32 {
        self.real_dim
    }

    pub fn kind(&self) -> ManifoldKind {
        self.kind
    }

    pub fn basis(&self) -> &Arc<Basis> {
        &self.basis
    }

    pub fn evaluation(&self) -> &BTreeMap<Monomial, BigInt> {
        &self.evaluation
    }

    pub fn tangent_class(&self) -> &GradedPolynomial {
        &self.tangent_class
    }

    pub fn euler_class(&self) -> Option<&GradedPolynomial> {
        self.euler_class.as_ref()
    }

    /// `c_1..c_n` of the tangent bundle; complex manifolds only.
    pub fn chern_classes(&self) -> Result<Vec<GradedPolynomial>> {
        match self.kind {
            ManifoldKind::Complex => Ok(split_total_class(
                &self.tangent_class,
                2,
                (self.real_dim / 2) as usize,
            )),
            ManifoldKind::OrientedReal => Err(Error::Unsupported(format!(
                "{} is not complex: no Chern classes",
                self.name
            ))),
        }
    }

    /// `p_1..p_{⌊m/4⌋}`, derived from the Chern classes for complex manifolds.
    pub fn pontryagin_classes(&self) -> Result<Vec<GradedPolynomial>> {
        match self.kind {
            ManifoldKind::Complex => chern_to_pontryagin(&self.chern_classes()?, self.real_dim),
            ManifoldKind::OrientedReal => Ok(split_total_class(
                &self.tangent_class,
                4,
                (self.real_dim / 4) as usize,
            )),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct BundleDescriptor {
    pub name: String,
    pub rank: u32,
    total_chern: GradedPolynomial,
    pub expected_dolbeault: Option<i64>,
    pub expected_spin: Option<i64>,
}

impl BundleDescriptor {
    /// Classes above the manifold dimension are discarded.
    pub fn new(
        name: impl Into<String>,
        rank: u32,
        total_chern: &GradedPolynomial,
        manifold: &ManifoldDescriptor,
    ) -> Result<Self> {
        let total = total_chern
            .rebase(manifold.basis())
            .map_err(|e| invalid("total_chern", e.to_string()))?;
        if !total.constant_term().is_one() {
            return Err(invalid("total_chern", "degree-0 term must be 1"));
        }
        Ok(BundleDescriptor {
            name: name.into(),
            rank,
            total_chern: total,
            expected_dolbeault: None,
            expected_spin: None,
        })
    }

    pub fn trivial(rank: u32, manifold: &ManifoldDescriptor) -> Self {
        BundleDescriptor {
            name: if rank == 1 { "O".into() } else { format!("O^{rank}") },
            rank,
            total_chern: GradedPolynomial::one(manifold.basis()),
            expected_dolbeault: None,
            expected_spin: None,
        }
    }

    pub fn total_chern(&self) -> &GradedPolynomial {
        &self.total_chern
    }

    /// `ch(V)` in the manifold's ring.
    pub fn chern_character(&self, manifold: &ManifoldDescriptor) -> Result<GradedPolynomial> {
        let total = self.total_chern.rebase(manifold.basis())?;
        let n = (manifold.real_dim() / 2) as usize;
        let classes = split_total_class(&total, 2, n);
        Ok(chern_character(self.rank, &classes, manifold.basis())?.polynomial)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum IndexKind {
    Signature,
    Dolbeault,
    Spin,
    SpinTwisted,
    DeRham,
}

impl IndexKind {
    pub fn name(self) -> &'static str {
        match self {
            IndexKind::Signature => "signature",
            IndexKind::Dolbeault => "dolbeault",
            IndexKind::Spin => "spin",
            IndexKind::SpinTwisted => "spin_twisted",
            IndexKind::DeRham => "de_rham",
        }
    }
}

impl fmt::Display for IndexKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct IndexReport {
    pub kind: IndexKind,
    pub value: Rational,
    pub integer_value: BigInt,
    /// Integrand before evaluation.
    pub density: GradedPolynomial,
}

/// Sum of top-degree coefficients times their characteristic numbers.
pub fn evaluate(poly: &GradedPolynomial, manifold: &ManifoldDescriptor) -> Result<Rational> {
    let p = poly.rebase(manifold.basis())?;
    let mut total = Rational::zero();
    for (m, c) in p.terms() {
        if manifold.basis().degree(m) != manifold.real_dim() {
            continue;
        }
        let value = manifold.evaluation().get(m).ok_or_else(|| Error::MissingMonomial {
            manifold: manifold.name().to_string(),
            monomial: manifold.basis().format_monomial(m),
        })?;
        total += c * Rational::from_integer(value.clone());
    }
    Ok(total)
}

fn report(kind: IndexKind, density: GradedPolynomial, manifold: &ManifoldDescriptor) -> Result<IndexReport> {
    let value = evaluate(&density, manifold)?;
    let integer_value = as_integer(&value).ok_or_else(|| Error::NonIntegral {
        kind: kind.name().to_string(),
        manifold: manifold.name().to_string(),
        value: pretty(&value),
    })?;
    Ok(IndexReport {
        kind,
        value,
        integer_value,
        density,
    })
}

/// `⟨L(p), [M]⟩`; zero without computation when `m ≡ 2 mod 4`.
pub fn signature_index(manifold: &ManifoldDescriptor) -> Result<IndexReport> {
    let m = manifold.real_dim();
    if m % 4 == 2 {
        return Ok(IndexReport {
            kind: IndexKind::Signature,
            value: Rational::zero(),
            integer_value: BigInt::zero(),
            density: GradedPolynomial::zero(manifold.basis()),
        });
    }
    let l = l_class((m / 4) as usize);
    let density = l.polynomial.substitute(&manifold.pontryagin_classes()?)?;
    report(IndexKind::Signature, density, manifold)
}

/// `⟨Td(TM) ch(V), [M]⟩`.
pub fn dolbeault_index(manifold: &ManifoldDescriptor, bundle: &BundleDescriptor) -> Result<IndexReport> {
    if manifold.kind() != ManifoldKind::Complex {
        return Err(Error::Unsupported(format!(
            "Dolbeault index needs a complex manifold; {} is oriented real",
            manifold.name()
        )));
    }
    let n = (manifold.real_dim() / 2) as usize;
    let td = todd_class(n).polynomial.substitute(&manifold.chern_classes()?)?;
    let density = td.try_mul(&bundle.chern_character(manifold)?)?;
    report(IndexKind::Dolbeault, density, manifold)
}

/// `Â(TM)` in the manifold's ring; `1` below dimension 4.
fn a_hat_density(manifold: &ManifoldDescriptor) -> Result<GradedPolynomial> {
    let l = (manifold.real_dim() / 4) as usize;
    if l == 0 {
        return Ok(GradedPolynomial::one(manifold.basis()));
    }
    a_hat_class(l).polynomial.substitute(&manifold.pontryagin_classes()?)
}

/// `⟨Â(TM) ch(V), [M]⟩`, with `ch = 1` when no bundle is given. Whether the
/// manifold is spin is up to the caller; a fractional result flags that it
/// is not.
pub fn spin_index(manifold: &ManifoldDescriptor, bundle: Option<&BundleDescriptor>) -> Result<IndexReport> {
    let a_hat = a_hat_density(manifold)?;
    match bundle {
        None => report(IndexKind::Spin, a_hat, manifold),
        Some(v) => {
            let density = a_hat.try_mul(&v.chern_character(manifold)?)?;
            report(IndexKind::SpinTwisted, density, manifold)
        }
    }
}

/// Euler characteristic from `c_n(TM)` or from a supplied Euler class.
pub fn de_rham_euler(manifold: &ManifoldDescriptor) -> Result<IndexReport> {
    let density = match (manifold.kind(), manifold.euler_class()) {
        (ManifoldKind::Complex, _) => manifold.tangent_class().homogeneous(manifold.real_dim()),
        (ManifoldKind::OrientedReal, Some(e)) => e.clone(),
        (ManifoldKind::OrientedReal, None) => {
            return Err(Error::Unsupported(format!(
                "{} has no Euler class data",
                manifold.name()
            )))
        }
    };
    report(IndexKind::DeRham, density, manifold)
}

#[derive(Clone, Debug, PartialEq)]
pub struct HirzebruchCheck {
    /// `⟨L(p(c)), [M]⟩`.
    pub via_pontryagin: BigInt,
    /// `2^n ⟨∏ (x_i/2)/tanh(x_i/2), [M]⟩` over the `n` Chern roots.
    pub via_chern_roots: Rational,
    pub catalog: Option<i64>,
    pub consistent: bool,
}

/// Signature of a complex manifold computed two ways, plus the recorded
/// catalog value when present.
///
/// The second route never forms Pontryagin classes: it expands the
/// half-argument series directly in Chern roots and rescales the top form.
pub fn hirzebruch_consistency(manifold: &ManifoldDescriptor) -> Result<HirzebruchCheck> {
    let m = manifold.real_dim();
    if manifold.kind() != ManifoldKind::Complex || !m.is_multiple_of(4) {
        return Err(Error::Unsupported(format!(
            "signature consistency needs a complex manifold of dimension 0 mod 4; {} has dimension {m}",
            manifold.name()
        )));
    }
    let via_pontryagin = signature_index(manifold)?.integer_value;

    let n = (m / 2) as usize;
    let half = genus_series(SeriesKind::L, n).rescale(&Rational::new(1.into(), 2.into()));
    let names: Vec<String> = (1..=n).map(|k| format!("c{k}")).collect();
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    let in_classes = multiplicative_sequence(&half, n, &refs, RootGrading::Chern)?;
    let density = in_classes.substitute(&manifold.chern_classes()?)?;
    let two_n = Rational::from_integer(BigInt::one() << n);
    let via_chern_roots = evaluate(&density, manifold)? * two_n;

    let catalog = manifold.expected.signature;
    let consistent = via_chern_roots == Rational::from_integer(via_pontryagin.clone())
        && catalog.is_none_or(|c| BigInt::from(c) == via_pontryagin);
    Ok(HirzebruchCheck {
        via_pontryagin,
        via_chern_roots,
        catalog,
        consistent,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::poly::Generator;
    use crate::algebra::rational::int;

    fn cp(n: u32) -> ManifoldDescriptor {
        let basis = Basis::new(vec![Generator::new("h", 2)], 2 * n).unwrap();
        let h = GradedPolynomial::generator(&basis, "h").unwrap();
        let tangent = (&GradedPolynomial::one(&basis) + &h).pow(n + 1);
        let mut eval = BTreeMap::new();
        eval.insert(vec![n], BigInt::one());
        ManifoldDescriptor::new(format!("cp{n}"), 2 * n, ManifoldKind::Complex, &basis, eval, &tangent, None)
            .unwrap()
    }

    fn k3() -> ManifoldDescriptor {
        let basis = Basis::new(vec![Generator::new("c2", 4)], 4).unwrap();
        let tangent = GradedPolynomial::from_terms(&basis, [("1", int(1)), ("c2", int(1))]).unwrap();
        let mut eval = BTreeMap::new();
        eval.insert(vec![1], BigInt::from(24));
        ManifoldDescriptor::new("k3", 4, ManifoldKind::Complex, &basis, eval, &tangent, None).unwrap()
    }

    fn line(m: &ManifoldDescriptor, k: i64) -> BundleDescriptor {
        let t = GradedPolynomial::from_terms(m.basis(), [("1", int(1)), ("h", int(k))]).unwrap();
        BundleDescriptor::new(format!("O({k})"), 1, &t, m).unwrap()
    }

    #[test]
    fn evaluate_examples() {
        let m = cp(2);
        let p = GradedPolynomial::from_terms(m.basis(), [("h^2", int(3)), ("h", int(5))]).unwrap();
        assert_eq!(evaluate(&p, &m).unwrap(), int(3));
        assert_eq!(evaluate(&GradedPolynomial::one(m.basis()), &m).unwrap(), int(0));
        let k = k3();
        let p1 = &k.pontryagin_classes().unwrap()[0];
        assert_eq!(evaluate(p1, &k).unwrap(), int(-48));
    }

    #[test]
    fn missing_monomial_is_named() {
        let basis = Basis::new(vec![Generator::new("a", 2), Generator::new("b", 2)], 4).unwrap();
        let mut eval = BTreeMap::new();
        eval.insert(vec![1, 1], BigInt::one());
        let one = GradedPolynomial::one(&basis);
        let m = ManifoldDescriptor::new("x", 4, ManifoldKind::Complex, &basis, eval, &one, None).unwrap();
        let p = GradedPolynomial::from_terms(m.basis(), [("a^2", int(1))]).unwrap();
        assert_eq!(
            evaluate(&p, &m),
            Err(Error::MissingMonomial {
                manifold: "x".into(),
                monomial: "a^2".into()
            })
        );
    }

    #[test]
    fn signatures() {
        assert_eq!(signature_index(&cp(2)).unwrap().integer_value, BigInt::from(1));
        assert_eq!(signature_index(&k3()).unwrap().integer_value, BigInt::from(-16));
        assert_eq!(signature_index(&cp(4)).unwrap().integer_value, BigInt::from(1));
        for n in [1, 3, 5] {
            let r = signature_index(&cp(n)).unwrap();
            assert!(r.value.is_zero());
            assert!(r.density.is_zero());
        }
    }

    #[test]
    fn dolbeault_on_projective_spaces() {
        for n in 1..=4 {
            let m = cp(n);
            let r = dolbeault_index(&m, &BundleDescriptor::trivial(1, &m)).unwrap();
            assert_eq!(r.integer_value, BigInt::one(), "cp{n}");
        }
        let m = cp(1);
        for k in -2..=3 {
            assert_eq!(dolbeault_index(&m, &line(&m, k)).unwrap().integer_value, BigInt::from(k + 1));
        }
        // (k+1)(k+2)/2 on CP².
        let m = cp(2);
        for k in -3..=3 {
            assert_eq!(
                dolbeault_index(&m, &line(&m, k)).unwrap().integer_value,
                BigInt::from((k + 1) * (k + 2) / 2)
            );
        }
        let r = dolbeault_index(&k3(), &BundleDescriptor::trivial(1, &k3())).unwrap();
        assert_eq!(r.integer_value, BigInt::from(2));
        let r = dolbeault_index(&k3(), &BundleDescriptor::trivial(3, &k3())).unwrap();
        assert_eq!(r.integer_value, BigInt::from(6));
    }

    #[test]
    fn spin_and_non_spin() {
        assert_eq!(spin_index(&k3(), None).unwrap().integer_value, BigInt::from(2));
        let k = k3();
        let twisted = spin_index(&k, Some(&BundleDescriptor::trivial(1, &k))).unwrap();
        assert_eq!(twisted.kind, IndexKind::SpinTwisted);
        assert_eq!(twisted.value, int(2));
        assert!(matches!(spin_index(&cp(2), None), Err(Error::NonIntegral { .. })));
        let m = cp(1);
        assert_eq!(spin_index(&m, Some(&line(&m, 3))).unwrap().value, int(3));
    }

    #[test]
    fn euler() {
        for n in 1..=4u32 {
            assert_eq!(de_rham_euler(&cp(n)).unwrap().integer_value, BigInt::from(n + 1));
        }
        assert_eq!(de_rham_euler(&k3()).unwrap().integer_value, BigInt::from(24));
    }

    #[test]
    fn real_manifolds() {
        let basis = Basis::new(vec![Generator::new("u", 4)], 4).unwrap();
        let mut eval = BTreeMap::new();
        eval.insert(vec![1], BigInt::one());
        let one = GradedPolynomial::one(&basis);
        let m = ManifoldDescriptor::new("s4", 4, ManifoldKind::OrientedReal, &basis, eval.clone(), &one, None)
            .unwrap();
        assert!(matches!(de_rham_euler(&m), Err(Error::Unsupported(_))));
        assert!(matches!(
            dolbeault_index(&m, &BundleDescriptor::trivial(1, &m)),
            Err(Error::Unsupported(_))
        ));
        let e = GradedPolynomial::from_terms(&basis, [("u", int(2))]).unwrap();
        let m = ManifoldDescriptor::new("s4", 4, ManifoldKind::OrientedReal, &basis, eval, &one, Some(&e))
            .unwrap();
        assert_eq!(de_rham_euler(&m).unwrap().value, int(2));
        assert_eq!(signature_index(&m).unwrap().value, int(0));
        assert_eq!(spin_index(&m, None).unwrap().value, int(0));
    }

    #[test]
    fn descriptor_validation() {
        let basis = Basis::new(vec![Generator::new("h", 2)], 4).unwrap();
        let one = GradedPolynomial::one(&basis);
        let mut eval = BTreeMap::new();
        eval.insert(vec![1], BigInt::one());
        let err = ManifoldDescriptor::new("x", 4, ManifoldKind::Complex, &basis, eval, &one, None).unwrap_err();
        assert!(matches!(err, Error::InvalidField { ref field, .. } if field == "evaluation"));
        let two = GradedPolynomial::constant(&basis, int(2));
        let err = ManifoldDescriptor::new("x", 4, ManifoldKind::Complex, &basis, BTreeMap::new(), &two, None)
            .unwrap_err();
        assert!(matches!(err, Error::InvalidField { ref field, .. } if field == "tangent_class"));
        assert!(ManifoldDescriptor::new("x", 3, ManifoldKind::Complex, &basis, BTreeMap::new(), &one, None).is_err());
    }

    #[test]
    fn hirzebruch_two_routes() {
        let c = hirzebruch_consistency(&cp(2)).unwrap();
        assert!(c.consistent);
        assert_eq!(c.via_chern_roots, int(1));
        let c = hirzebruch_consistency(&k3()).unwrap();
        assert_eq!(c.via_chern_roots, int(-16));
        let c = hirzebruch_consistency(&cp(4)).unwrap();
        assert_eq!(c.via_chern_roots, int(1));
        assert!(hirzebruch_consistency(&cp(1)).is_err());
        let wrong = k3().with_expected(ExpectedIndices {
            signature: Some(16),
            ..Default::default()
        });
        assert!(!hirzebruch_consistency(&wrong).unwrap().consistent);
    }
}
