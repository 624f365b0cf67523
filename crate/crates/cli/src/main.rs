use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use indexcalc::algebra::rational::{pretty_int, Rational};
use indexcalc::algebra::GradedPolynomial;
use indexcalc::clifford::run_fermion_checks;
use indexcalc::descriptor::{catalog, resolve_manifold};
use indexcalc::genera::{genus_class, GenusKind};
use indexcalc::index::{de_rham_euler, dolbeault_index, signature_index, spin_index, BundleDescriptor, IndexReport};
use indexcalc::verify::{verify_acceptance, verify_all, VerifyReport};
use indexcalc::zeta_det::{regularize, OperatorKind, OperatorSpec};
use indexcalc::Error;

#[derive(Parser)]
#[command(name = "indexcalc", version, about = "Characteristic classes, regularized determinants and index checks")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Complex {
    Signature,
    Dolbeault,
    Spin,
    Euler,
}

#[derive(Subcommand)]
enum Command {
    /// Print a genus as a polynomial in characteristic classes.
    Genus {
        /// L, Ahat or Todd.
        #[arg(long)]
        kind: String,
        #[arg(long)]
        half_dim: usize,
    },
    /// Evaluate an index on a catalog manifold or descriptor file.
    Index {
        /// Catalog name or path to a descriptor file.
        #[arg(long)]
        manifold: String,
        #[arg(long, value_enum)]
        complex: Complex,
        /// Bundle name from the descriptor (trivial line bundle if omitted).
        #[arg(long)]
        bundle: Option<String>,
    },
    /// Zeta-regularized determinant against its truncated-product oracle.
    Detreg {
        #[arg(long)]
        op: String,
        #[arg(long, allow_negative_numbers = true)]
        beta: f64,
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        param: f64,
        #[arg(long, default_value_t = 100_000)]
        oracle_modes: usize,
    },
    /// Gamma-matrix and Berezin normalization identities.
    FermionChecks {
        #[arg(long, default_value_t = 5)]
        max_n: usize,
    },
    /// Run the acceptance suite.
    Verify {
        /// Also sweep every expected value in the catalog.
        #[arg(long)]
        all: bool,
    },
    /// List the active catalog.
    Catalog,
}

enum Failure {
    /// Usage or descriptor problem.
    Usage(Error),
    /// A check ran and did not pass.
    Check,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check) => ExitCode::from(1),
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn emit(format: Format, text: impl FnOnce() -> String, value: impl FnOnce() -> Value) {
    match format {
        Format::Text => println!("{}", text()),
        Format::Json => println!("{}", serde_json::to_string_pretty(&value()).expect("json output")),
    }
}

fn terms_json(p: &GradedPolynomial) -> Value {
    let map: Map<String, Value> = p
        .sorted_terms()
        .into_iter()
        .map(|(m, c)| (p.basis().format_monomial(m), Value::String(c.to_string())))
        .collect();
    Value::Object(map)
}

fn rational_json(q: &Rational) -> Value {
    Value::String(q.to_string())
}

fn run(cli: &Cli) -> Result<(), Failure> {
    let format = cli.format;
    match &cli.command {
        Command::Genus { kind, half_dim } => {
            let kind: GenusKind = kind.parse()?;
            if *half_dim == 0 {
                return Err(Error::OutOfRange("half-dim must be at least 1".into()).into());
            }
            let g = genus_class(kind, *half_dim);
            emit(
                format,
                || g.polynomial.to_string(),
                || {
                    json!({
                        "kind": kind.name(),
                        "half_dim": half_dim,
                        "truncation": g.truncation,
                        "polynomial": g.polynomial.to_string(),
                        "terms": terms_json(&g.polynomial),
                    })
                },
            );
        }
        Command::Index {
            manifold,
            complex,
            bundle,
        } => {
            let d = resolve_manifold(manifold)?;
            let m = &d.manifold;
            let chosen = bundle.as_deref().map(|b| d.bundle(b)).transpose()?;
            let trivial = BundleDescriptor::trivial(1, m);
            let report: IndexReport = match complex {
                Complex::Signature => signature_index(m)?,
                Complex::Dolbeault => dolbeault_index(m, chosen.unwrap_or(&trivial))?,
                Complex::Spin => spin_index(m, chosen)?,
                Complex::Euler => de_rham_euler(m)?,
            };
            emit(
                format,
                || pretty_int(&report.integer_value),
                || {
                    let integer = i64::try_from(&report.integer_value)
                        .map(Value::from)
                        .unwrap_or_else(|_| Value::String(report.integer_value.to_string()));
                    json!({
                        "manifold": m.name(),
                        "kind": report.kind.name(),
                        "bundle": chosen.map(|b| b.name.clone()),
                        "value": rational_json(&report.value),
                        "integer_value": integer,
                        "density": report.density.to_string(),
                        "density_terms": terms_json(&report.density),
                    })
                },
            );
        }
        Command::Detreg {
            op,
            beta,
            param,
            oracle_modes,
        } => {
            let kind: OperatorKind = op.parse()?;
            let spec = OperatorSpec::new(kind, *beta, *param)?;
            let r = regularize(&spec, *oracle_modes)?;
            emit(
                format,
                || {
                    format!(
                        "closed={}\noracle={}\ndelta={:.3e}\ntolerance={:.3e}\nmodes={}",
                        r.closed_form,
                        r.oracle_value,
                        r.delta(),
                        r.tolerance(),
                        r.oracle_modes
                    )
                },
                || {
                    json!({
                        "op": kind.name(),
                        "beta": beta,
                        "param": param,
                        "closed": r.closed_form,
                        "oracle": r.oracle_value,
                        "delta": r.delta(),
                        "tolerance": r.tolerance(),
                        "modes": r.oracle_modes,
                        "within_tolerance": r.within_tolerance(),
                    })
                },
            );
            if !r.within_tolerance() {
                return Err(Failure::Check);
            }
        }
        Command::FermionChecks { max_n } => {
            let checks = run_fermion_checks(*max_n)?;
            let ok = checks.iter().all(|c| c.passed);
            emit(
                format,
                || {
                    let mut lines = vec![format!("{:<3} {:<24} {:<10} {:<10} status", "n", "check", "expected", "computed")];
                    for c in &checks {
                        lines.push(format!(
                            "{:<3} {:<24} {:<10} {:<10} {}",
                            c.n,
                            c.name,
                            c.expected,
                            c.computed,
                            if c.passed { "PASS" } else { "FAIL" }
                        ));
                    }
                    lines.join("\n")
                },
                || {
                    json!({
                        "passed": ok,
                        "checks": checks.iter().map(|c| json!({
                            "n": c.n,
                            "check": c.name,
                            "expected": c.expected,
                            "computed": c.computed,
                            "passed": c.passed,
                        })).collect::<Vec<_>>(),
                    })
                },
            );
            if !ok {
                return Err(Failure::Check);
            }
        }
        Command::Verify { all } => {
            let report = if *all { verify_all()? } else { verify_acceptance()? };
            emit(format, || report.to_string(), || report_json(&report));
            if !report.all_passed() {
                return Err(Failure::Check);
            }
        }
        Command::Catalog => {
            let cat = catalog()?;
            emit(
                format,
                || {
                    cat.iter()
                        .map(|d| {
                            let m = &d.manifold;
                            let bundles: Vec<&str> = d.bundles.keys().map(String::as_str).collect();
                            format!(
                                "{:<8} dim {:<2} {:<13} c = {}{}",
                                m.name(),
                                m.real_dim(),
                                m.kind().name(),
                                m.tangent_class(),
                                if bundles.is_empty() { String::new() } else { format!("  bundles: {}", bundles.join(", ")) }
                            )
                        })
                        .collect::<Vec<_>>()
                        .join("\n")
                },
                || {
                    Value::Array(
                        cat.iter()
                            .map(|d| {
                                let m = &d.manifold;
                                json!({
                                    "name": m.name(),
                                    "real_dim": m.real_dim(),
                                    "kind": m.kind().name(),
                                    "tangent_class": m.tangent_class().to_string(),
                                    "bundles": d.bundles.keys().collect::<Vec<_>>(),
                                    "expected": {
                                        "signature": m.expected.signature,
                                        "todd": m.expected.todd,
                                        "a_hat": m.expected.a_hat,
                                        "euler": m.expected.euler,
                                    },
                                })
                            })
                            .collect(),
                    )
                },
            );
        }
    }
    Ok(())
}

fn report_json(report: &VerifyReport) -> Value {
    json!({
        "passed": report.passed(),
        "failed": report.failed(),
        "all_passed": report.all_passed(),
        "checks": report.checks.iter().map(|c| json!({
            "name": c.name,
            "expected": c.expected,
            "computed": c.computed,
            "status": if c.passed { "pass" } else { "fail" },
        })).collect::<Vec<_>>(),
    })
}

