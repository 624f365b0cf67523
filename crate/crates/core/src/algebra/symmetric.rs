//! Rewriting symmetric polynomials in formal roots as polynomials in the
//! elementary symmetric classes.

use std::collections::HashMap;
use std::sync::Arc;

use super::poly::{Basis, Generator, GradedPolynomial, Monomial};
use crate::error::{Error, Result};

/// `e_k(x_1, ..., x_n)` in the root basis.
pub fn elementary_symmetric(roots: &Arc<Basis>, k: usize) -> GradedPolynomial {
    let n = roots.len();
    let mut out = GradedPolynomial::zero(roots);
    if k > n {
        return out;
    }
    // Walk all k-subsets in lexicographic order.
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        let mut m = vec![0; n];
        for &i in &idx {
            m[i] = 1;
        }
        out = &out + &GradedPolynomial::monomial(roots, m, num_traits::One::one());
        let Some(pos) = (0..k).rev().find(|&i| idx[i] != i + n - k) else {
            break;
        };
        idx[pos] += 1;
        for j in pos + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
    out
}

/// Checks invariance under every adjacent transposition, which generate the
/// symmetric group.
pub fn check_symmetric(p: &GradedPolynomial) -> Result<()> {
    let basis = p.basis();
    let n = basis.len();
    for i in 0..n.saturating_sub(1) {
        let mut perm: Vec<usize> = (0..n).collect();
        perm.swap(i, i + 1);
        if p.permute(&perm) != *p {
            let g = basis.generators();
            return Err(Error::NotSymmetric(g[i].name.clone(), g[i + 1].name.clone()));
        }
    }
    Ok(())
}

/// Expresses a symmetric polynomial in `n_roots` roots of equal degree `d`
/// through `e_1..e_n`, named `target_names[k-1]` with degree `k·d`.
///
/// Gauss's leading-term elimination: the lex-largest monomial
/// `x^a` (with `a_1 >= ... >= a_n`) is cancelled by
/// `e_1^{a_1-a_2} e_2^{a_2-a_3} ... e_n^{a_n}`, which has the same leading
/// monomial. The leading monomial strictly decreases, so the loop ends.
pub fn symmetric_reduce(
    p: &GradedPolynomial,
    n_roots: usize,
    target_names: &[&str],
) -> Result<GradedPolynomial> {
    let roots = p.basis().clone();
    let gens = roots.generators();
    if gens.len() != n_roots || gens.windows(2).any(|w| w[0].degree != w[1].degree) {
        return Err(Error::NotRootBasis { expected: n_roots });
    }
    if target_names.len() != n_roots {
        return Err(Error::ClassNameCount {
            expected: n_roots,
            got: target_names.len(),
        });
    }
    check_symmetric(p)?;

    let root_degree = gens.first().map(|g| g.degree).unwrap_or(2);
    let classes = Basis::new(
        target_names
            .iter()
            .enumerate()
            .map(|(k, name)| Generator::new(*name, root_degree * (k as u32 + 1)))
            .collect(),
        roots.truncation(),
    )?;
    let elementary: Vec<GradedPolynomial> =
        (1..=n_roots).map(|k| elementary_symmetric(&roots, k)).collect();
    let mut cache: HashMap<Monomial, GradedPolynomial> = HashMap::new();

    let mut rest = p.clone();
    let mut out = GradedPolynomial::zero(&classes);
    while let Some((lead, c)) = rest.leading_term().map(|(m, c)| (m.clone(), c.clone())) {
        // Exponents of e_k in the cancelling product.
        let mut class_exps = vec![0u32; n_roots];
        for k in 0..n_roots {
            let next = if k + 1 < n_roots { lead[k + 1] } else { 0 };
            if lead[k] < next {
                // Cannot happen for a symmetric input, checked above.
                return Err(Error::NotSymmetric(
                    gens[k].name.clone(),
                    gens[k + 1].name.clone(),
                ));
            }
            class_exps[k] = lead[k] - next;
        }
        let expansion = cache
            .entry(class_exps.clone())
            .or_insert_with(|| {
                class_exps
                    .iter()
                    .zip(&elementary)
                    .fold(GradedPolynomial::one(&roots), |acc, (&e, ek)| &acc * &ek.pow(e))
            })
            .clone();
        rest = &rest - &expansion.scale(&c);
        out = &out + &GradedPolynomial::monomial(&classes, class_exps, c);
    }
    Ok(out)
}

/// Substitutes `e_k(roots)` back for the class generators.
pub fn expand_in_roots(
    classes: &GradedPolynomial,
    roots: &Arc<Basis>,
) -> Result<GradedPolynomial> {
    let images: Vec<GradedPolynomial> = (1..=classes.basis().len())
        .map(|k| elementary_symmetric(roots, k))
        .collect();
    if images.is_empty() {
        return Ok(GradedPolynomial::constant(roots, classes.constant_term()));
    }
    classes.substitute(&images)
}
