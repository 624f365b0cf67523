//! Finite-dimensional checks of fermionic normalizations: chirality traces
//! from gamma matrices and the Berezin normalization of the zero modes.

pub mod gamma;
pub mod grassmann;

pub use gamma::{build_gamma, chirality, GammaRep, Matrix};
pub use grassmann::{
    berezin_integrate, berezin_integrate_with, format_gaussian, i_pow, normalization_psi2,
    Gaussian, GrassmannElement, MeasureConvention,
};

use crate::error::Result;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FermionCheck {
    pub n: usize,
    pub name: &'static str,
    pub expected: String,
    pub computed: String,
    pub passed: bool,
}

fn check(n: usize, name: &'static str, expected: String, computed: String) -> FermionCheck {
    let passed = expected == computed;
    FermionCheck {
        n,
        name,
        expected,
        computed,
        passed,
    }
}

fn entry_str(z: gamma::Entry) -> String {
    if z.im == 0 {
        z.re.to_string()
    } else {
        z.to_string()
    }
}

/// Clifford relations, Hermiticity, chirality identities and the
/// normalization `i^n`, for each `n` in `1..=max_n`.
pub fn run_fermion_checks(max_n: usize) -> Result<Vec<FermionCheck>> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        let rep = build_gamma(n)?;
        let size = rep.size();
        let id = Matrix::identity(size);
        let gs = rep.matrices();

        let clifford_ok = gs.iter().enumerate().all(|(a, ga)| {
            gs.iter().enumerate().all(|(b, gb)| {
                let ac = ga.anticommutator(gb);
                if a == b {
                    ac == id.scale(2.into())
                } else {
                    ac.is_zero()
                }
            })
        });
        out.push(check(n, "clifford", "true".into(), clifford_ok.to_string()));
        let hermitian = gs.iter().all(|g| g.adjoint() == *g);
        out.push(check(n, "hermitian", "true".into(), hermitian.to_string()));

        let chir = chirality(&rep);
        let squared = &chir * &chir;
        out.push(check(n, "chirality_squared", "true".into(), (squared == id).to_string()));
        let anti = gs.iter().all(|g| chir.anticommutator(g).is_zero());
        out.push(check(n, "chirality_anticommutes", "true".into(), anti.to_string()));
        out.push(check(n, "trace_chirality", "0".into(), entry_str(chir.trace())));
        out.push(check(
            n,
            "trace_chirality_squared",
            (1u64 << n).to_string(),
            entry_str(squared.trace()),
        ));

        let norm = normalization_psi2(n as u32)?;
        out.push(check(
            n,
            "normalization",
            format_gaussian(&i_pow(n as u32)),
            format_gaussian(&norm),
        ));
    }
    Ok(out)
}
