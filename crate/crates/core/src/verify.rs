//! Self-contained verification: the acceptance criteria and a sweep over
//! every expected value recorded in the catalog.

use std::fmt;
use std::time::{Duration, Instant};

use num_bigint::BigInt;

use crate::algebra::poly::GradedPolynomial;
use crate::algebra::rational::{pretty, pretty_int, rat, Rational};
use crate::clifford::run_fermion_checks;
use crate::descriptor::{builtin_catalog, catalog, Descriptor};
use crate::error::Result;
use crate::genera::{a_hat_class, genus_class, l_class, signature_integrand_identity_check, todd_class, GenusKind};
use crate::index::{de_rham_euler, dolbeault_index, hirzebruch_consistency, signature_index, spin_index, BundleDescriptor, ManifoldKind};
use crate::zeta_det::{
    apbc_block_via_ratio, det_apbc_curvature_block, det_pbc_laplacian, fermion_partition, oracle_product,
    OperatorKind, OperatorSpec,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub computed: String,
    pub passed: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerifyReport {
    pub checks: Vec<Check>,
}

impl VerifyReport {
    fn push(&mut self, name: impl Into<String>, expected: impl Into<String>, computed: impl Into<String>, passed: bool) {
        self.checks.push(Check {
            name: name.into(),
            expected: expected.into(),
            computed: computed.into(),
            passed,
        });
    }

    fn push_eq(&mut self, name: impl Into<String>, expected: String, computed: String) {
        let passed = expected == computed;
        self.push(name, expected, computed, passed);
    }

    fn push_result<T: fmt::Display>(&mut self, name: impl Into<String>, expected: String, computed: Result<T>) {
        match computed {
            Ok(v) => self.push_eq(name, expected, v.to_string()),
            Err(e) => self.push(name, expected, format!("error: {e}"), false),
        }
    }

    fn push_timing(&mut self, name: &str, limit: Duration, elapsed: Duration) {
        self.push(
            format!("{name} runtime"),
            format!("< {:.1} s", limit.as_secs_f64()),
            format!("{:.3} s", elapsed.as_secs_f64()),
            elapsed < limit,
        );
    }

    pub fn extend(&mut self, other: VerifyReport) {
        self.checks.extend(other.checks);
    }

    pub fn passed(&self) -> usize {
        self.checks.iter().filter(|c| c.passed).count()
    }

    pub fn failed(&self) -> usize {
        self.checks.len() - self.passed()
    }

    pub fn all_passed(&self) -> bool {
        self.failed() == 0
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.checks.iter().map(|c| c.name.chars().count()).max().unwrap_or(0);
        for c in &self.checks {
            let status = if c.passed { "PASS" } else { "FAIL" };
            let pad = width - c.name.chars().count();
            writeln!(
                f,
                "{status}  {}{}  expected {}  computed {}",
                c.name,
                " ".repeat(pad),
                c.expected,
                c.computed
            )?;
        }
        write!(f, "{} passed, {} failed", self.passed(), self.failed())
    }
}

fn sci(x: f64) -> String {
    format!("{x:.3e}")
}

fn criterion_determinants(r: &mut VerifyReport) {
    let start = Instant::now();
    for beta in [0.5, 1.0, 2.0] {
        let name = format!("1 det'(-d²/dt²) beta={beta}");
        match det_pbc_laplacian(beta) {
            Ok(v) => r.push(&name, format!("{}", beta * beta), format!("{v}"), v == beta * beta),
            Err(e) => r.push(&name, format!("{}", beta * beta), format!("error: {e}"), false),
        }
        let spec = OperatorSpec::new(OperatorKind::PbcLaplacian, beta, 0.0).expect("valid spec");
        let name = format!("1 oracle N=1e6 beta={beta}");
        match oracle_product(&spec, 1_000_000) {
            Ok(v) => {
                let d = (v - beta * beta).abs();
                r.push(&name, "|delta| <= 1e-5", sci(d), d <= 1e-5);
            }
            Err(e) => r.push(&name, "|delta| <= 1e-5", format!("error: {e}"), false),
        }
    }
    r.push_timing("1", Duration::from_secs(5), start.elapsed());
}

fn criterion_ratio(r: &mut VerifyReport) {
    let start = Instant::now();
    let beta = 1.0f64;
    let modes = 100_000;
    for y in [0.3f64, 1.0, 2.0] {
        let target = (2.0 * (beta * y / 2.0).cos()).powi(2);
        let closed = apbc_block_via_ratio(y, beta).and_then(|ratio| Ok((ratio, det_apbc_curvature_block(y, beta)?)));
        let name = format!("2 I(2b)/I(b) closed y={y}");
        match closed {
            Ok((ratio, direct)) => {
                let d = (ratio - target).abs().max((direct - target).abs());
                r.push(&name, "rel <= 1e-12", sci(d / target), d <= 1e-12 * target);
            }
            Err(e) => r.push(&name, "rel <= 1e-12", format!("error: {e}"), false),
        }
        let pbc = |b: f64, n: usize| {
            oracle_product(&OperatorSpec::new(OperatorKind::PbcCurvatureBlock, b, y).expect("valid spec"), n)
        };
        let apbc = oracle_product(
            &OperatorSpec::new(OperatorKind::ApbcCurvatureBlock, beta, y).expect("valid spec"),
            modes,
        );
        let name = format!("2 I(2b)/I(b) oracle y={y}");
        match (pbc(2.0 * beta, 2 * modes), pbc(beta, modes), apbc) {
            (Ok(num), Ok(den), Ok(direct)) => {
                let d = (num / den - target).abs().max((direct - target).abs());
                r.push(&name, "|delta| <= 1e-4", sci(d), d <= 1e-4);
            }
            (a, b, c) => {
                let e = [a.err(), b.err(), c.err()].into_iter().flatten().next().expect("one failed");
                r.push(&name, "|delta| <= 1e-4", format!("error: {e}"), false);
            }
        }
    }
    r.push_timing("2", Duration::from_secs(10), start.elapsed());
}

fn criterion_fermions(r: &mut VerifyReport) {
    let start = Instant::now();
    match run_fermion_checks(5) {
        Ok(checks) => {
            for c in checks {
                r.push(format!("3 n={} {}", c.n, c.name), c.expected, c.computed, c.passed);
            }
        }
        Err(e) => r.push("3 fermion checks", "ok", format!("error: {e}"), false),
    }
    r.push_timing("3", Duration::from_secs(2), start.elapsed());
}

fn criterion_integrand(r: &mut VerifyReport, max_l: usize) {
    let start = Instant::now();
    for l in 0..=max_l {
        r.push_result(
            format!("4 2^l prod (x/2)/tanh(x/2) = prod x/tanh x, l={l}"),
            "true".into(),
            signature_integrand_identity_check(l),
        );
    }
    r.push_timing("4", Duration::from_secs(5), start.elapsed());
}

fn stated(kind: GenusKind, n: usize, terms: &[(&str, Rational)]) -> GradedPolynomial {
    let basis = genus_class(kind, n).polynomial.basis().clone();
    GradedPolynomial::from_terms(&basis, terms.iter().map(|(k, c)| (*k, c.clone()))).expect("class monomials")
}

fn criterion_genera(r: &mut VerifyReport) {
    let start = Instant::now();
    let cases: Vec<(&str, GradedPolynomial, GradedPolynomial)> = vec![
        ("L1", l_class(1).polynomial.homogeneous(4), stated(GenusKind::L, 1, &[("p1", rat(1, 3))])),
        (
            "L2",
            l_class(2).polynomial.homogeneous(8),
            stated(GenusKind::L, 2, &[("p2", rat(7, 45)), ("p1^2", rat(-1, 45))]),
        ),
        ("Ahat1", a_hat_class(1).polynomial.homogeneous(4), stated(GenusKind::AHat, 1, &[("p1", rat(-1, 24))])),
        (
            "Ahat2",
            a_hat_class(2).polynomial.homogeneous(8),
            stated(GenusKind::AHat, 2, &[("p1^2", rat(7, 5760)), ("p2", rat(-4, 5760))]),
        ),
        (
            "Td2",
            todd_class(2).polynomial.homogeneous(4),
            stated(GenusKind::Todd, 2, &[("c1^2", rat(1, 12)), ("c2", rat(1, 12))]),
        ),
        (
            "Td3",
            todd_class(3).polynomial.homogeneous(6),
            stated(GenusKind::Todd, 3, &[("c1·c2", rat(1, 24))]),
        ),
    ];
    for (name, computed, expected) in cases {
        r.push_eq(format!("5 {name}"), expected.to_string(), computed.to_string());
    }
    r.push_timing("5", Duration::from_secs(5), start.elapsed());
}

fn find<'a>(cat: &'a [Descriptor], name: &str) -> Option<&'a Descriptor> {
    cat.iter().find(|d| d.manifold.name() == name)
}

fn criterion_catalog_values(r: &mut VerifyReport) {
    let start = Instant::now();
    let cat = builtin_catalog();
    let int = |v: i64| pretty_int(&BigInt::from(v));
    let show = |rep: Result<crate::index::IndexReport>| rep.map(|x| pretty_int(&x.integer_value));
    let cases: [(&str, &str, i64); 9] = [
        ("signature", "cp2", 1),
        ("signature", "k3", -16),
        ("signature", "cp1xcp1", 0),
        ("todd", "cp1", 1),
        ("todd", "cp2", 1),
        ("todd", "cp3", 1),
        ("todd", "k3", 2),
        ("a_hat", "k3", 2),
        ("euler", "k3", 24),
    ];
    for (what, name, expected) in cases {
        let label = format!("6 {what}({name})");
        let Some(d) = find(&cat, name) else {
            r.push(label, int(expected), "missing from catalog", false);
            continue;
        };
        let m = &d.manifold;
        let computed = match what {
            "signature" => show(signature_index(m)),
            "todd" => show(dolbeault_index(m, &BundleDescriptor::trivial(1, m))),
            "a_hat" => show(spin_index(m, None)),
            _ => show(de_rham_euler(m)),
        };
        r.push_result(label, int(expected), computed);
    }
    if let Some(d) = find(&cat, "cp1") {
        for k in -2i64..=3 {
            let name = if k == 0 { "O".to_string() } else { format!("O({k})") };
            let computed = d
                .bundle(&name)
                .and_then(|b| dolbeault_index(&d.manifold, b))
                .map(|x| pretty_int(&x.integer_value));
            r.push_result(format!("6 dolbeault(cp1, O({k}))"), int(k + 1), computed);
        }
    } else {
        r.push("6 dolbeault(cp1, O(k))", "present", "missing from catalog", false);
    }
    r.push_timing("6", Duration::from_secs(5), start.elapsed());
}

fn criterion_vanishing(r: &mut VerifyReport, cat: &[Descriptor]) {
    for d in cat.iter().filter(|d| d.manifold.real_dim() % 4 == 2) {
        r.push_result(
            format!("7 signature({}) dim {}", d.manifold.name(), d.manifold.real_dim()),
            "0".into(),
            signature_index(&d.manifold).map(|x| pretty(&x.value)),
        );
    }
}

fn criterion_beta(r: &mut VerifyReport) {
    for beta in [0.1, 1.0, 10.0] {
        let name = format!("8 Z_F(omega=0, beta={beta})");
        match fermion_partition(0.0, beta) {
            Ok(v) => r.push(name, "2", format!("{v}"), v == 2.0),
            Err(e) => r.push(name, "2", format!("error: {e}"), false),
        }
    }
}

/// Every acceptance criterion, in order.
pub fn verify_acceptance() -> Result<VerifyReport> {
    let mut r = VerifyReport::default();
    criterion_determinants(&mut r);
    criterion_ratio(&mut r);
    criterion_fermions(&mut r);
    criterion_integrand(&mut r, 4);
    criterion_genera(&mut r);
    criterion_catalog_values(&mut r);
    criterion_vanishing(&mut r, &catalog()?);
    criterion_beta(&mut r);
    Ok(r)
}

/// Every expected value recorded in the given catalog, plus the
/// two-route signature check on complex entries of dimension 0 mod 4.
pub fn verify_catalog(cat: &[Descriptor]) -> VerifyReport {
    let mut r = VerifyReport::default();
    let show = |rep: Result<crate::index::IndexReport>| rep.map(|x| pretty(&x.value));
    let int = |v: i64| pretty_int(&BigInt::from(v));
    for d in cat {
        let m = &d.manifold;
        let name = m.name();
        let e = &m.expected;
        if let Some(v) = e.signature {
            r.push_result(format!("catalog {name} signature"), int(v), show(signature_index(m)));
        }
        if let Some(v) = e.todd {
            r.push_result(
                format!("catalog {name} todd"),
                int(v),
                show(dolbeault_index(m, &BundleDescriptor::trivial(1, m))),
            );
        }
        if let Some(v) = e.a_hat {
            r.push_result(format!("catalog {name} a_hat"), int(v), show(spin_index(m, None)));
        }
        if let Some(v) = e.euler {
            r.push_result(format!("catalog {name} euler"), int(v), show(de_rham_euler(m)));
        }
        for (bname, b) in &d.bundles {
            if let Some(v) = b.expected_dolbeault {
                r.push_result(format!("catalog {name} dolbeault {bname}"), int(v), show(dolbeault_index(m, b)));
            }
            if let Some(v) = b.expected_spin {
                r.push_result(format!("catalog {name} spin {bname}"), int(v), show(spin_index(m, Some(b))));
            }
        }
        if m.kind() == ManifoldKind::Complex && m.real_dim() % 4 == 0 {
            let label = format!("catalog {name} signature two routes");
            match hirzebruch_consistency(m) {
                Ok(c) => r.push(
                    label,
                    pretty_int(&c.via_pontryagin),
                    pretty(&c.via_chern_roots),
                    c.consistent,
                ),
                Err(err) => r.push(label, "consistent", format!("error: {err}"), false),
            }
        }
    }
    r
}

/// Acceptance criteria, the identity up to `l = 6`, and the catalog sweep.
pub fn verify_all() -> Result<VerifyReport> {
    let mut r = verify_acceptance()?;
    let mut extra = VerifyReport::default();
    for l in 5..=6 {
        extra.push_result(
            format!("identity l={l}"),
            "true".into(),
            signature_integrand_identity_check(l),
        );
    }
    r.extend(extra);
    r.extend(verify_catalog(&catalog()?));
    Ok(r)
}
