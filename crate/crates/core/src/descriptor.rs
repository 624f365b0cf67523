//! JSON descriptor files and the built-in catalog.
//!
//! ```json
//! {
//!   "schema_version": 1,
//!   "manifold": {
//!     "name": "cp2",
//!     "real_dim": 4,
//!     "kind": "complex",
//!     "generators": [{ "name": "h", "degree": 2 }],
//!     "evaluation": { "h^2": 1 },
//!     "tangent_class": { "1": "1", "h": "3", "h^2": "3" },
//!     "expected": { "signature": 1, "todd": 1, "euler": 3 }
//!   },
//!   "bundles": {
//!     "O(1)": { "rank": 1, "total_chern": { "1": "1", "h": "1" }, "expected": { "dolbeault": 3 } }
//!   }
//! }
//! ```
//!
//! Coefficients are exact rational strings. Saving writes keys in printing
//! order, so a saved file loads and saves back byte for byte.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use indexmap::IndexMap;
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::algebra::poly::{Basis, Generator, GradedPolynomial};
use crate::algebra::rational::parse_rational;
use crate::error::{Error, Result};
use crate::index::{BundleDescriptor, ExpectedIndices, ManifoldDescriptor, ManifoldKind};

pub const SCHEMA_VERSION: u32 = 1;

/// Environment variable naming a directory of `*.json` descriptors that
/// replaces the built-in catalog.
pub const CATALOG_DIR_ENV: &str = "INDEXCALC_CATALOG_DIR";

#[derive(Clone, Debug, PartialEq)]
pub struct Descriptor {
    pub manifold: ManifoldDescriptor,
    pub bundles: IndexMap<String, BundleDescriptor>,
}

impl Descriptor {
    pub fn bundle(&self, name: &str) -> Result<&BundleDescriptor> {
        self.bundles.get(name).ok_or_else(|| Error::UnknownBundle {
            manifold: self.manifold.name().to_string(),
            bundle: name.to_string(),
        })
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFile {
    schema_version: u32,
    manifold: RawManifold,
    #[serde(default, skip_serializing_if = "IndexMap::is_empty")]
    bundles: IndexMap<String, RawBundle>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawManifold {
    name: String,
    real_dim: u32,
    kind: RawKind,
    generators: Vec<RawGenerator>,
    evaluation: IndexMap<String, i64>,
    tangent_class: IndexMap<String, String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    euler_class: Option<IndexMap<String, String>>,
    #[serde(default, skip_serializing_if = "RawManifoldExpected::is_empty")]
    expected: RawManifoldExpected,
}

#[derive(Serialize, Deserialize, Clone, Copy)]
#[serde(rename_all = "snake_case")]
enum RawKind {
    OrientedReal,
    Complex,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawGenerator {
    name: String,
    degree: u32,
}

#[derive(Serialize, Deserialize, Default)]
#[serde(deny_unknown_fields)]
struct RawManifoldExpected {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    signature: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    todd: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    a_hat: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    euler: Option<i64>,
}

impl RawManifoldExpected {
    fn is_empty(&self) -> bool {
        self.signature.is_none() && self.todd.is_none() && self.a_hat.is_none() && self.euler.is_none()
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawBundle {
    rank: u32,
    total_chern: IndexMap<String, String>,
    #[serde(default, skip_serializing_if = "RawBundleExpected::is_empty")]
    expected: RawBundleExpected,
}

#[derive(Serialize, Deserialize, Default)]
#[serde(deny_unknown_fields)]
struct RawBundleExpected {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    dolbeault: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    spin: Option<i64>,
}

impl RawBundleExpected {
    fn is_empty(&self) -> bool {
        self.dolbeault.is_none() && self.spin.is_none()
    }
}

fn parse_error(e: serde_json::Error) -> Error {
    Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string().split(" at line ").next().unwrap_or_default().to_string(),
    }
}

fn field_error(field: &str, e: Error) -> Error {
    match e {
        // Basis violations keep their own wording.
        Error::OddGeneratorDegree { .. } | Error::ZeroGeneratorDegree { .. } | Error::DuplicateGenerator(_) => e,
        Error::InvalidField { .. } => e,
        other => Error::InvalidField {
            field: field.to_string(),
            reason: other.to_string(),
        },
    }
}

fn polynomial(basis: &std::sync::Arc<Basis>, raw: &IndexMap<String, String>, field: &str) -> Result<GradedPolynomial> {
    let mut out = GradedPolynomial::zero(basis);
    for (key, value) in raw {
        let m = basis.parse_monomial(key).map_err(|e| field_error(field, e))?;
        let c = parse_rational(value).map_err(|e| field_error(field, e))?;
        out = &out + &GradedPolynomial::monomial(basis, m, c);
    }
    Ok(out)
}

fn raw_polynomial(p: &GradedPolynomial) -> IndexMap<String, String> {
    p.sorted_terms()
        .into_iter()
        .map(|(m, c)| (p.basis().format_monomial(m), c.to_string()))
        .collect()
}

/// Parses descriptor text. The schema version is checked before the rest
/// of the document is interpreted.
pub fn parse_descriptor(text: &str) -> Result<Descriptor> {
    let value: serde_json::Value = serde_json::from_str(text).map_err(parse_error)?;
    match value.get("schema_version").map(|v| v.as_u64()) {
        None => {
            return Err(Error::InvalidField {
                field: "schema_version".into(),
                reason: "missing".into(),
            })
        }
        Some(Some(v)) if v == SCHEMA_VERSION as u64 => {}
        Some(Some(v)) => return Err(Error::SchemaVersion(v.min(u32::MAX as u64) as u32)),
        Some(None) => {
            return Err(Error::InvalidField {
                field: "schema_version".into(),
                reason: "must be a non-negative integer".into(),
            })
        }
    }
    let raw: RawFile = serde_json::from_str(text).map_err(parse_error)?;
    from_raw(raw)
}

fn from_raw(raw: RawFile) -> Result<Descriptor> {
    let rm = raw.manifold;
    let generators = rm
        .generators
        .iter()
        .map(|g| Generator::new(g.name.clone(), g.degree))
        .collect();
    let basis = Basis::new(generators, rm.real_dim).map_err(|e| field_error("manifold.generators", e))?;
    let mut evaluation = BTreeMap::new();
    for (key, value) in &rm.evaluation {
        let m = basis
            .parse_monomial(key)
            .map_err(|e| field_error("manifold.evaluation", e))?;
        if evaluation.insert(m, BigInt::from(*value)).is_some() {
            return Err(Error::InvalidField {
                field: "manifold.evaluation".into(),
                reason: format!("monomial `{key}` listed twice"),
            });
        }
    }
    let tangent = polynomial(&basis, &rm.tangent_class, "manifold.tangent_class")?;
    let euler = rm
        .euler_class
        .as_ref()
        .map(|e| polynomial(&basis, e, "manifold.euler_class"))
        .transpose()?;
    let kind = match rm.kind {
        RawKind::OrientedReal => ManifoldKind::OrientedReal,
        RawKind::Complex => ManifoldKind::Complex,
    };
    let manifold = ManifoldDescriptor::new(rm.name, rm.real_dim, kind, &basis, evaluation, &tangent, euler.as_ref())
        .map_err(|e| match e {
            Error::InvalidField { field, reason } => Error::InvalidField {
                field: format!("manifold.{field}"),
                reason,
            },
            other => other,
        })?
        .with_expected(ExpectedIndices {
            signature: rm.expected.signature,
            todd: rm.expected.todd,
            a_hat: rm.expected.a_hat,
            euler: rm.expected.euler,
        });
    let mut bundles = IndexMap::new();
    for (name, rb) in raw.bundles {
        let field = format!("bundles.{name}.total_chern");
        let total = polynomial(manifold.basis(), &rb.total_chern, &field)?;
        let mut b = BundleDescriptor::new(name.clone(), rb.rank, &total, &manifold).map_err(|e| match e {
            Error::InvalidField { reason, .. } => Error::InvalidField {
                field: field.clone(),
                reason,
            },
            other => other,
        })?;
        b.expected_dolbeault = rb.expected.dolbeault;
        b.expected_spin = rb.expected.spin;
        bundles.insert(name, b);
    }
    Ok(Descriptor { manifold, bundles })
}

fn to_raw(d: &Descriptor) -> Result<RawFile> {
    let m = &d.manifold;
    let basis = m.basis();
    let mut evaluation = IndexMap::new();
    let mut keys: Vec<_> = m.evaluation().iter().collect();
    keys.sort_by(|a, b| a.0.cmp(b.0));
    for (mono, v) in keys {
        let v = i64::try_from(v).map_err(|_| Error::InvalidField {
            field: "manifold.evaluation".into(),
            reason: format!("value {v} does not fit in 64 bits"),
        })?;
        evaluation.insert(basis.format_monomial(mono), v);
    }
    let e = &m.expected;
    Ok(RawFile {
        schema_version: SCHEMA_VERSION,
        manifold: RawManifold {
            name: m.name().to_string(),
            real_dim: m.real_dim(),
            kind: match m.kind() {
                ManifoldKind::OrientedReal => RawKind::OrientedReal,
                ManifoldKind::Complex => RawKind::Complex,
            },
            generators: basis
                .generators()
                .iter()
                .map(|g| RawGenerator {
                    name: g.name.clone(),
                    degree: g.degree,
                })
                .collect(),
            evaluation,
            tangent_class: raw_polynomial(m.tangent_class()),
            euler_class: m.euler_class().map(raw_polynomial),
            expected: RawManifoldExpected {
                signature: e.signature,
                todd: e.todd,
                a_hat: e.a_hat,
                euler: e.euler,
            },
        },
        bundles: d
            .bundles
            .iter()
            .map(|(name, b)| {
                (
                    name.clone(),
                    RawBundle {
                        rank: b.rank,
                        total_chern: raw_polynomial(b.total_chern()),
                        expected: RawBundleExpected {
                            dolbeault: b.expected_dolbeault,
                            spin: b.expected_spin,
                        },
                    },
                )
            })
            .collect(),
    })
}

/// Canonical text: two-space indentation, trailing newline.
pub fn to_canonical_string(d: &Descriptor) -> Result<String> {
    let mut s = serde_json::to_string_pretty(&to_raw(d)?).expect("descriptor serializes");
    s.push('\n');
    Ok(s)
}

fn io_error(path: &Path, e: std::io::Error) -> Error {
    Error::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    }
}

pub fn load_descriptor(path: impl AsRef<Path>) -> Result<Descriptor> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|e| io_error(path, e))?;
    parse_descriptor(&text)
}

pub fn save_descriptor(d: &Descriptor, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    fs::write(path, to_canonical_string(d)?).map_err(|e| io_error(path, e))
}

pub const BUILTIN_SOURCES: [(&str, &str); 10] = [
    ("cp1", include_str!("../catalog/cp1.json")),
    ("cp2", include_str!("../catalog/cp2.json")),
    ("cp3", include_str!("../catalog/cp3.json")),
    ("cp1xcp1", include_str!("../catalog/cp1xcp1.json")),
    ("k3", include_str!("../catalog/k3.json")),
    ("t2", include_str!("../catalog/t2.json")),
    ("t4", include_str!("../catalog/t4.json")),
    ("s4", include_str!("../catalog/s4.json")),
    ("cp2xcp2", include_str!("../catalog/cp2xcp2.json")),
    ("hp2", include_str!("../catalog/hp2.json")),
];

/// The embedded catalog, in a fixed order.
pub fn builtin_catalog() -> Vec<Descriptor> {
    BUILTIN_SOURCES
        .iter()
        .map(|(name, text)| {
            parse_descriptor(text).unwrap_or_else(|e| panic!("built-in descriptor {name}: {e}"))
        })
        .collect()
}

/// Every `*.json` file in `dir`, sorted by file name.
pub fn load_catalog_dir(dir: impl AsRef<Path>) -> Result<Vec<Descriptor>> {
    let dir = dir.as_ref();
    let mut paths: Vec<_> = fs::read_dir(dir)
        .map_err(|e| io_error(dir, e))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    paths.sort();
    paths.iter().map(load_descriptor).collect()
}

/// The catalog directory named by the environment, or the built-in one.
pub fn catalog() -> Result<Vec<Descriptor>> {
    match std::env::var_os(CATALOG_DIR_ENV) {
        Some(dir) if !dir.is_empty() => load_catalog_dir(dir),
        _ => Ok(builtin_catalog()),
    }
}

/// A catalog name, or a path to a descriptor file.
pub fn resolve_manifold(name_or_path: &str) -> Result<Descriptor> {
    let path = Path::new(name_or_path);
    if path.is_file() {
        return load_descriptor(path);
    }
    catalog()?
        .into_iter()
        .find(|d| d.manifold.name() == name_or_path)
        .ok_or_else(|| Error::UnknownManifold(name_or_path.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::int;

    #[test]
    fn builtin_sources_are_canonical() {
        for (name, text) in BUILTIN_SOURCES {
            let d = parse_descriptor(text).unwrap();
            assert_eq!(d.manifold.name(), name);
            assert_eq!(to_canonical_string(&d).unwrap(), text, "{name}");
        }
    }

    #[test]
    fn cp2_tangent_class() {
        let d = resolve_manifold("cp2").unwrap();
        let t = d.manifold.tangent_class();
        assert_eq!(t.coefficient_of("h").unwrap(), int(3));
        assert_eq!(t.coefficient_of("h^2").unwrap(), int(3));
        assert_eq!(t.to_string(), "1 + 3·h + 3·h^2");
    }

    #[test]
    fn schema_version_checked_first() {
        let text = r#"{"schema_version": 2, "bogus": true}"#;
        assert_eq!(parse_descriptor(text), Err(Error::SchemaVersion(2)));
        let text = r#"{"manifold": {}}"#;
        assert!(matches!(parse_descriptor(text), Err(Error::InvalidField { ref field, .. }) if field == "schema_version"));
    }

    #[test]
    fn syntax_errors_carry_position() {
        let text = "{\n  \"schema_version\": 1,\n  \"manifold\": [\n}";
        match parse_descriptor(text) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 4),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn odd_degree_generator() {
        let text = BUILTIN_SOURCES[1].1.replace("\"degree\": 2", "\"degree\": 3");
        let err = parse_descriptor(&text).unwrap_err();
        assert!(err.to_string().starts_with("odd generator degree"), "{err}");
    }

    #[test]
    fn missing_evaluation_names_field() {
        let text = r#"{"schema_version": 1, "manifold": {"name": "x", "real_dim": 2, "kind": "complex",
            "generators": [{"name": "h", "degree": 2}], "tangent_class": {"1": "1"}}}"#;
        let err = parse_descriptor(text).unwrap_err();
        assert!(err.to_string().contains("evaluation"), "{err}");
    }

    #[test]
    fn unknown_fields_rejected() {
        let text = BUILTIN_SOURCES[0].1.replace("\"real_dim\"", "\"extra\": 1,\n    \"real_dim\"");
        assert!(matches!(parse_descriptor(&text), Err(Error::Parse { .. })));
    }

    #[test]
    fn unknown_manifold() {
        assert_eq!(
            resolve_manifold("no-such-space").unwrap_err(),
            Error::UnknownManifold("no-such-space".into())
        );
    }
}
