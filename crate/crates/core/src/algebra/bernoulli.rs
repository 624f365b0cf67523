use num_traits::Zero;

use super::rational::{binomial, Rational};

/// Bernoulli numbers `B_0..=B_k` with `B_1 = -1/2`.
///
/// Uses `sum_{j=0}^{k} C(k+1, j) B_j = 0` solved for `B_k`.
pub fn bernoulli_table(k: usize) -> Vec<Rational> {
    let mut table: Vec<Rational> = Vec::with_capacity(k + 1);
    for m in 0..=k {
        if m == 0 {
            table.push(Rational::from_integer(1.into()));
            continue;
        }
        if m >= 3 && m % 2 == 1 {
            table.push(Rational::zero());
            continue;
        }
        let acc = table
            .iter()
            .enumerate()
            .fold(Rational::zero(), |acc, (j, b)| {
                acc + Rational::from_integer(binomial(m + 1, j)) * b
            });
        table.push(-acc / Rational::from_integer((m + 1).into()));
    }
    table
}

pub fn bernoulli(k: usize) -> Rational {
    bernoulli_table(k).swap_remove(k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{int, rat};

    #[test]
    fn small_values() {
        assert_eq!(bernoulli(0), int(1));
        assert_eq!(bernoulli(1), rat(-1, 2));
        assert_eq!(bernoulli(2), rat(1, 6));
        assert_eq!(bernoulli(4), rat(-1, 30));
        assert_eq!(bernoulli(6), rat(1, 42));
        assert_eq!(bernoulli(12), rat(-691, 2730));
    }

    #[test]
    fn odd_values_vanish() {
        let t = bernoulli_table(31);
        for k in (3..=31).step_by(2) {
            assert!(t[k].is_zero(), "B_{k}");
        }
    }

    // Recurrence skipping the odd shortcut, so the shortcut itself is tested.
    #[test]
    fn recurrence_holds_for_every_k() {
        let t = bernoulli_table(20);
        for k in 1..=20 {
            let s = (0..=k).fold(Rational::zero(), |acc, j| {
                acc + Rational::from_integer(binomial(k + 1, j)) * &t[j]
            });
            assert!(s.is_zero(), "k = {k}");
        }
    }
}
