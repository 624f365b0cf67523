//! Zeta-regularized determinants of constant-coefficient operators on the
//! circle of circumference `beta`, each paired with a truncated-product
//! oracle.
//!
//! Periodic modes have frequencies `2πn/β`, antiperiodic ones `π(2n+1)/β`.
//! The closed forms go through the spectral zeta function; the oracle only
//! multiplies eigenvalues.

use std::f64::consts::PI;

use crate::algebra::rational::{rat, Rational};
use crate::error::{Error, Result};
use num_traits::{ToPrimitive, Zero};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OperatorKind {
    /// `-d²/dt²`, periodic, zero mode removed.
    PbcLaplacian,
    /// `d/dt`, periodic, zero mode removed.
    PbcFirstOrder,
    /// `d/dt + ω`, antiperiodic.
    ApbcFirstOrderShifted,
    /// `[[-d/dt, y], [-y, -d/dt]]`, periodic, zero mode removed.
    PbcCurvatureBlock,
    /// The same block with antiperiodic conditions.
    ApbcCurvatureBlock,
}

impl OperatorKind {
    pub const ALL: [OperatorKind; 5] = [
        OperatorKind::PbcLaplacian,
        OperatorKind::PbcFirstOrder,
        OperatorKind::ApbcFirstOrderShifted,
        OperatorKind::PbcCurvatureBlock,
        OperatorKind::ApbcCurvatureBlock,
    ];

    pub fn name(self) -> &'static str {
        match self {
            OperatorKind::PbcLaplacian => "pbc_laplacian",
            OperatorKind::PbcFirstOrder => "pbc_first_order",
            OperatorKind::ApbcFirstOrderShifted => "apbc_first_order_shifted",
            OperatorKind::PbcCurvatureBlock => "pbc_curvature_block",
            OperatorKind::ApbcCurvatureBlock => "apbc_curvature_block",
        }
    }

    pub fn is_periodic(self) -> bool {
        matches!(
            self,
            OperatorKind::PbcLaplacian | OperatorKind::PbcFirstOrder | OperatorKind::PbcCurvatureBlock
        )
    }
}

impl std::str::FromStr for OperatorKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.to_ascii_lowercase().replace('-', "_");
        OperatorKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .or(match s.as_str() {
                "apbc_first_order" => Some(OperatorKind::ApbcFirstOrderShifted),
                _ => None,
            })
            .ok_or_else(|| Error::OutOfRange(format!("unknown operator `{s}`")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OperatorSpec {
    pub kind: OperatorKind,
    pub beta: f64,
    /// `y` for curvature blocks, `ω` for the shifted first-order operator.
    pub parameter: f64,
    /// Whether the periodic zero mode is excluded.
    pub prime: bool,
}

impl OperatorSpec {
    /// Periodic kinds are primed, antiperiodic kinds have no zero mode.
    pub fn new(kind: OperatorKind, beta: f64, parameter: f64) -> Result<Self> {
        Self::with_prime(kind, beta, parameter, kind.is_periodic())
    }

    pub fn with_prime(kind: OperatorKind, beta: f64, parameter: f64, prime: bool) -> Result<Self> {
        check_beta(beta)?;
        if kind.is_periodic() && !prime {
            // n = 0 is a zero mode at parameter 0.
            return Err(Error::SingularDeterminant { mode: 0 });
        }
        Ok(OperatorSpec {
            kind,
            beta,
            parameter,
            prime,
        })
    }

    /// Mode frequency: `2πn/β` (periodic) or `π(2n+1)/β` (antiperiodic).
    pub fn mode_frequency(&self, n: i64) -> f64 {
        if self.kind.is_periodic() {
            2.0 * PI * n as f64 / self.beta
        } else {
            PI * (2 * n + 1) as f64 / self.beta
        }
    }
}

fn check_beta(beta: f64) -> Result<()> {
    if beta > 0.0 && beta.is_finite() {
        Ok(())
    } else {
        Err(Error::NonPositiveBeta(beta))
    }
}

/// A real combination `a·ln β + b·ln 2 + c·ln π` with rational weights.
///
/// `ζ'(0)` of every spectrum here lands in this span, so the closed form
/// `exp(-ζ'(0)) = β^{-a} 2^{-b} π^{-c}` is evaluated with integer powers
/// whenever the weights are integers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LogCombination {
    pub log_beta: Rational,
    pub log_two: Rational,
    pub log_pi: Rational,
}

impl LogCombination {
    fn zero() -> Self {
        LogCombination {
            log_beta: Rational::zero(),
            log_two: Rational::zero(),
            log_pi: Rational::zero(),
        }
    }

    fn scaled(&self, c: &Rational) -> Self {
        LogCombination {
            log_beta: &self.log_beta * c,
            log_two: &self.log_two * c,
            log_pi: &self.log_pi * c,
        }
    }

    fn plus(&self, o: &Self) -> Self {
        LogCombination {
            log_beta: &self.log_beta + &o.log_beta,
            log_two: &self.log_two + &o.log_two,
            log_pi: &self.log_pi + &o.log_pi,
        }
    }

    /// `exp(-self)` at the given `β`.
    pub fn exp_neg(&self, beta: f64) -> f64 {
        fn power(base: f64, e: &Rational) -> f64 {
            if e.is_integer() {
                base.powi(e.to_integer().to_i32().expect("small exponent"))
            } else {
                base.powf(e.to_f64().expect("finite exponent"))
            }
        }
        power(beta, &-&self.log_beta) * power(2.0, &-&self.log_two) * power(PI, &-&self.log_pi)
    }
}

/// `ζ_R(0) = -1/2`.
fn riemann_zeta_at_zero() -> Rational {
    rat(-1, 2)
}

/// `ζ_R'(0) = -½ ln 2π`.
fn riemann_zeta_prime_at_zero() -> LogCombination {
    LogCombination {
        log_beta: Rational::zero(),
        log_two: rat(-1, 2),
        log_pi: rat(-1, 2),
    }
}

/// `ζ'(0)` for `|λ_n| = (2π|n|/β)^k`, `n ≠ 0`.
///
/// `ζ(s) = 2 (β/2π)^{ks} ζ_R(ks)`, so
/// `ζ'(0) = 2k [ζ_R(0) ln(β/2π) + ζ_R'(0)]`.
pub fn periodic_zeta_prime(k: u32) -> LogCombination {
    let log_beta_over_2pi = LogCombination {
        log_beta: rat(1, 1),
        log_two: rat(-1, 1),
        log_pi: rat(-1, 1),
    };
    log_beta_over_2pi
        .scaled(&riemann_zeta_at_zero())
        .plus(&riemann_zeta_prime_at_zero())
        .scaled(&Rational::from_integer((2 * k).into()))
}

/// `ζ'(0)` for `|λ_m| = (π|2m+1|/β)^k`, `m ∈ ℤ`.
///
/// `ζ(s) = 2 (β/π)^{ks} (1 - 2^{-ks}) ζ_R(ks)`; the factor `1 - 2^{-ks}`
/// vanishes at 0 and leaves `ζ'(0) = 2k ln 2 · ζ_R(0)`.
pub fn antiperiodic_zeta_prime(k: u32) -> LogCombination {
    let mut out = LogCombination::zero();
    out.log_two = riemann_zeta_at_zero() * Rational::from_integer((2 * k).into());
    out
}

/// `Det'_PBC(-d²/dt²) = β²` through the spectral zeta function.
pub fn det_pbc_laplacian(beta: f64) -> Result<f64> {
    check_beta(beta)?;
    Ok(periodic_zeta_prime(2).exp_neg(beta))
}

/// `Det'_PBC(d/dt) = β`; eigenvalues `±2πin/β` pair into `(2πn/β)²`.
pub fn det_pbc_first_order(beta: f64) -> Result<f64> {
    check_beta(beta)?;
    Ok(periodic_zeta_prime(1).exp_neg(beta))
}

/// Distance of `x` to the nearest integer, relative to its size.
fn near_integer(x: f64) -> Option<i64> {
    let r = x.round();
    ((x - r).abs() <= 1e-12 * x.abs().max(1.0)).then_some(r as i64)
}

/// `(sin(βy/2) / (y/2))²`: primed periodic determinant of one curvature
/// block. Tends to `β²` as `y → 0`.
pub fn det_pbc_curvature_block(y: f64, beta: f64) -> Result<f64> {
    check_beta(beta)?;
    let z = beta * y / 2.0;
    if let Some(n) = near_integer(z / PI) {
        if n != 0 {
            return Err(Error::SingularDeterminant { mode: n.abs() });
        }
    }
    let reference = det_pbc_laplacian(beta)?;
    Ok(reference * sinc(z).powi(2))
}

fn sinc(z: f64) -> f64 {
    if z.abs() < 1e-8 {
        1.0 - z * z / 6.0
    } else {
        z.sin() / z
    }
}

/// Antiperiodic determinant of one curvature block, `(2 cos(βy/2))²`.
pub fn det_apbc_curvature_block(y: f64, beta: f64) -> Result<f64> {
    check_beta(beta)?;
    let z = beta * y / 2.0;
    // Mode m vanishes when π(2m+1)/β = |y|.
    if let Some(odd) = near_integer(2.0 * z.abs() / PI) {
        if odd % 2 != 0 {
            return Err(Error::SingularDeterminant { mode: (odd - 1) / 2 });
        }
    }
    let reference = antiperiodic_zeta_prime(2).exp_neg(beta);
    Ok(reference * z.cos().powi(2))
}

/// The same determinant obtained as `I(2β)/I(β)` from periodic blocks:
/// doubling the period doubles the mode density, and the extra modes are
/// exactly the antiperiodic ones.
pub fn apbc_block_via_ratio(y: f64, beta: f64) -> Result<f64> {
    let doubled = det_pbc_curvature_block(y, 2.0 * beta)?;
    let single = det_pbc_curvature_block(y, beta)?;
    if single == 0.0 {
        return Err(Error::SingularDeterminant { mode: 0 });
    }
    Ok(doubled / single)
}

/// `Tr (-1)^F e^{-βH}` style trace over the two levels `±ω/2`.
pub fn fermion_partition(omega: f64, beta: f64) -> Result<f64> {
    check_beta(beta)?;
    Ok((beta * omega / 2.0).exp() + (-beta * omega / 2.0).exp())
}

/// `Det_APBC(d/dt + ω) = 2 cosh(βω/2)`; the reference value 2 at `ω = 0` is
/// the zeta-regularized product of `π|2m+1|/β`.
pub fn det_apbc_first_order(omega: f64, beta: f64) -> Result<f64> {
    check_beta(beta)?;
    let reference = antiperiodic_zeta_prime(1).exp_neg(beta);
    Ok(reference * (beta * omega / 2.0).cosh())
}

pub fn closed_form(spec: &OperatorSpec) -> Result<f64> {
    match spec.kind {
        OperatorKind::PbcLaplacian => det_pbc_laplacian(spec.beta),
        OperatorKind::PbcFirstOrder => det_pbc_first_order(spec.beta),
        OperatorKind::ApbcFirstOrderShifted => det_apbc_first_order(spec.parameter, spec.beta),
        OperatorKind::PbcCurvatureBlock => det_pbc_curvature_block(spec.parameter, spec.beta),
        OperatorKind::ApbcCurvatureBlock => det_apbc_curvature_block(spec.parameter, spec.beta),
    }
}

/// Sum of `f(0..n)` by recursive halving, so the rounding pattern depends
/// only on `n`.
pub fn pairwise_sum(n: usize, f: &impl Fn(usize) -> f64) -> f64 {
    fn go(lo: usize, hi: usize, f: &impl Fn(usize) -> f64) -> f64 {
        if hi - lo <= 64 {
            (lo..hi).map(f).sum()
        } else {
            let mid = lo + (hi - lo) / 2;
            go(lo, mid, f) + go(mid, hi, f)
        }
    }
    go(0, n, f)
}

/// Product of `1 - (a/j)²` over the mode list, as `(sign, ln|·|)`.
fn log_product(n: usize, factor: impl Fn(usize) -> f64) -> Result<(f64, f64)> {
    let mut negatives = 0usize;
    for i in 0..n {
        if factor(i) < 0.0 {
            negatives += 1;
        }
    }
    let log = pairwise_sum(n, &|i| factor(i).abs().ln());
    let sign = if negatives.is_multiple_of(2) { 1.0 } else { -1.0 };
    Ok((sign, log))
}

/// Truncated-product value of the determinant with `modes` modes.
///
/// Blocks and the shifted operator use ratio regularization: the product of
/// eigenvalues over the first `modes` positive frequencies divided by the
/// same product at parameter 0, times the zeta value at parameter 0. For
/// `-d²/dt²` and `d/dt` there is no parameter; their oracle instead
/// evaluates `ζ_R'(0)` numerically from the truncated spectrum with the
/// Stirling counterterms `(N + ½) ln N - N`, and feeds it to the zeta
/// formula with `ζ_R(0) = -1/2`.
pub fn oracle_product(spec: &OperatorSpec, modes: usize) -> Result<f64> {
    if modes == 0 {
        return Err(Error::OutOfRange("oracle needs at least one mode".into()));
    }
    let beta = spec.beta;
    let y = spec.parameter;
    match spec.kind {
        OperatorKind::PbcLaplacian | OperatorKind::PbcFirstOrder => {
            let k = if spec.kind == OperatorKind::PbcLaplacian { 2.0 } else { 1.0 };
            let n = modes as f64;
            let log_factorial = pairwise_sum(modes, &|i| ((i + 1) as f64).ln());
            let zeta_prime_numeric = -(log_factorial - (n + 0.5) * n.ln() + n);
            let zeta_at_zero = -0.5;
            let zeta_a_prime = 2.0 * k * (zeta_at_zero * (beta / (2.0 * PI)).ln() + zeta_prime_numeric);
            Ok((-zeta_a_prime).exp())
        }
        OperatorKind::ApbcFirstOrderShifted => {
            // Modes m and -m-1 pair into ω² + λ_m².
            let a = beta * y / PI;
            let (_, log) = log_product(modes, |m| 1.0 + (a / (2 * m + 1) as f64).powi(2))?;
            Ok(antiperiodic_zeta_prime(1).exp_neg(beta) * log.exp())
        }
        OperatorKind::PbcCurvatureBlock => {
            let b = beta * y / (2.0 * PI);
            if let Some(n) = near_integer(b) {
                if n != 0 && (n.unsigned_abs() as usize) <= modes {
                    return Err(Error::SingularDeterminant { mode: n.abs() });
                }
            }
            // Modes n and -n give the same eigenvalue y² - (2πn/β)².
            let (_, log) = log_product(modes, |i| 1.0 - (b / (i + 1) as f64).powi(2))?;
            Ok(det_pbc_laplacian(beta)? * (2.0 * log).exp())
        }
        OperatorKind::ApbcCurvatureBlock => {
            let c = beta * y / PI;
            if let Some(odd) = near_integer(c.abs()) {
                if odd % 2 != 0 && ((odd as usize - 1) / 2) < modes {
                    return Err(Error::SingularDeterminant { mode: (odd - 1) / 2 });
                }
            }
            let (_, log) = log_product(modes, |m| 1.0 - (c / (2 * m + 1) as f64).powi(2))?;
            Ok(antiperiodic_zeta_prime(2).exp_neg(beta) * (2.0 * log).exp())
        }
    }
}

/// Closed form and oracle side by side.
#[derive(Clone, Debug, PartialEq)]
pub struct RegularizedDet {
    pub spec: OperatorSpec,
    pub closed_form: f64,
    pub oracle_value: f64,
    pub oracle_modes: usize,
}

impl RegularizedDet {
    pub fn delta(&self) -> f64 {
        (self.closed_form - self.oracle_value).abs()
    }

    /// `C/N` bound on the truncation error, from the leading tail term of
    /// each product (with a factor of at least 2 to spare):
    ///
    /// * `-d²/dt²`, `d/dt`: Stirling remainder `1/(12N)` per unit of `2k`,
    ///   `C = k·|det|`
    /// * shifted first order: tail `a²/(4N)`, `a = βω/π`, `C = a²·|det|/2`
    /// * periodic block: tail `2b²/N`, `b = βy/2π`, `C = 4b²·|det|`
    /// * antiperiodic block: tail `c²/(2N)`, `c = βy/π`, `C = c²·|det|`
    pub fn tolerance(&self) -> f64 {
        let det = self.closed_form.abs();
        let beta = self.spec.beta;
        let p = self.spec.parameter;
        let c = match self.spec.kind {
            OperatorKind::PbcLaplacian => 2.0 * det,
            OperatorKind::PbcFirstOrder => det,
            OperatorKind::ApbcFirstOrderShifted => (beta * p / PI).powi(2) * det / 2.0,
            OperatorKind::PbcCurvatureBlock => 4.0 * (beta * p / (2.0 * PI)).powi(2) * det,
            OperatorKind::ApbcCurvatureBlock => (beta * p / PI).powi(2) * det,
        };
        c / self.oracle_modes as f64 + 1e-12 * det.max(1.0)
    }

    pub fn within_tolerance(&self) -> bool {
        self.delta() <= self.tolerance()
    }
}

pub fn regularize(spec: &OperatorSpec, modes: usize) -> Result<RegularizedDet> {
    Ok(RegularizedDet {
        spec: *spec,
        closed_form: closed_form(spec)?,
        oracle_value: oracle_product(spec, modes)?,
        oracle_modes: modes,
    })
}
