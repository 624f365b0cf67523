//! Brute-force reference computations that share no code with the library
//! beyond the rational type.

#![allow(dead_code)]

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Pow, Zero};

use indexcalc::algebra::rational::Rational;
use indexcalc::algebra::GradedPolynomial;

pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

fn fact(n: usize) -> Rational {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= k;
    }
    Rational::from_integer(acc)
}

/// `a / b` for power series with `b[0] != 0`, by schoolbook long division.
pub fn divide(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let n = a.len().min(b.len());
    let mut rem: Vec<Rational> = a[..n].to_vec();
    let mut out = vec![Rational::zero(); n];
    for k in 0..n {
        let c = &rem[k] / &b[0];
        for j in k..n {
            let t = &c * &b[j - k];
            rem[j] -= t;
        }
        out[k] = c;
    }
    out
}

/// `x / tanh x = cosh x / (sinh x / x)`.
pub fn x_over_tanh(order: usize) -> Vec<Rational> {
    let cosh: Vec<Rational> = (0..=order)
        .map(|k| if k % 2 == 0 { Rational::one() / fact(k) } else { Rational::zero() })
        .collect();
    let sinhc: Vec<Rational> = (0..=order)
        .map(|k| if k % 2 == 0 { Rational::one() / fact(k + 1) } else { Rational::zero() })
        .collect();
    divide(&cosh, &sinhc)
}

/// `(x/2) / sinh(x/2)`.
pub fn a_hat_root(order: usize) -> Vec<Rational> {
    let one: Vec<Rational> = (0..=order).map(|k| if k == 0 { Rational::one() } else { Rational::zero() }).collect();
    let sinhc: Vec<Rational> = (0..=order)
        .map(|k| {
            if k % 2 == 0 {
                let two_k = Rational::from_integer(BigInt::from(2).pow(k as u32));
                Rational::one() / (fact(k + 1) * two_k)
            } else {
                Rational::zero()
            }
        })
        .collect();
    divide(&one, &sinhc)
}

/// `x / (1 - e^{-x})`.
pub fn todd_root(order: usize) -> Vec<Rational> {
    let one: Vec<Rational> = (0..=order).map(|k| if k == 0 { Rational::one() } else { Rational::zero() }).collect();
    let denom: Vec<Rational> = (0..=order)
        .map(|k| {
            let s = if k % 2 == 0 { Rational::one() } else { -Rational::one() };
            s / fact(k + 1)
        })
        .collect();
    divide(&one, &denom)
}

pub fn exp_series(order: usize) -> Vec<Rational> {
    (0..=order).map(|k| Rational::one() / fact(k)).collect()
}

/// `f(c x)`.
pub fn rescale(f: &[Rational], c: &Rational) -> Vec<Rational> {
    let mut p = Rational::one();
    f.iter()
        .map(|a| {
            let out = a * &p;
            p *= c;
            out
        })
        .collect()
}

/// Polynomial in `n` variables of degree one each, truncated at total
/// degree `max`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    pub n: usize,
    pub max: u32,
    pub terms: BTreeMap<Vec<u32>, Rational>,
}

impl Poly {
    pub fn zero(n: usize, max: u32) -> Self {
        Poly { n, max, terms: BTreeMap::new() }
    }

    pub fn constant(n: usize, max: u32, c: Rational) -> Self {
        let mut p = Self::zero(n, max);
        p.add(vec![0; n], c);
        p
    }

    pub fn var(n: usize, max: u32, i: usize) -> Self {
        let mut m = vec![0; n];
        m[i] = 1;
        let mut p = Self::zero(n, max);
        p.add(m, Rational::one());
        p
    }

    pub fn add(&mut self, m: Vec<u32>, c: Rational) {
        if m.iter().sum::<u32>() > self.max || c.is_zero() {
            return;
        }
        let e = self.terms.entry(m.clone()).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn plus(&self, o: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add(m.clone(), c.clone());
        }
        out
    }

    pub fn times(&self, o: &Poly) -> Poly {
        let mut out = Poly::zero(self.n, self.max);
        for (a, x) in &self.terms {
            for (b, y) in &o.terms {
                let m: Vec<u32> = a.iter().zip(b).map(|(i, j)| i + j).collect();
                out.add(m, x * y);
            }
        }
        out
    }

    pub fn scaled(&self, c: &Rational) -> Poly {
        let mut out = Poly::zero(self.n, self.max);
        for (m, x) in &self.terms {
            out.add(m.clone(), x * c);
        }
        out
    }

    pub fn top(&self, d: u32) -> Poly {
        let mut out = Poly::zero(self.n, self.max);
        for (m, x) in &self.terms {
            if m.iter().sum::<u32>() == d {
                out.add(m.clone(), x.clone());
            }
        }
        out
    }

    /// `sum_k f[k] x_i^k`.
    pub fn series_in(n: usize, max: u32, i: usize, f: &[Rational]) -> Poly {
        let mut out = Poly::zero(n, max);
        for (k, c) in f.iter().enumerate() {
            let mut m = vec![0; n];
            m[i] = k as u32;
            out.add(m, c.clone());
        }
        out
    }

    /// `prod_i f(x_i)`.
    pub fn root_product(n: usize, max: u32, f: &[Rational]) -> Poly {
        (0..n).fold(Poly::constant(n, max, Rational::one()), |acc, i| {
            acc.times(&Poly::series_in(n, max, i, f))
        })
    }

    /// `e_k` of the given polynomials, by expanding `prod (1 + t·y_i)`
    /// term by term over subsets.
    pub fn elementary(ys: &[Poly], k: usize, n: usize, max: u32) -> Poly {
        let mut out = Poly::zero(n, max);
        for mask in 0u32..(1 << ys.len()) {
            if mask.count_ones() as usize != k {
                continue;
            }
            let mut t = Poly::constant(n, max, Rational::one());
            for (i, y) in ys.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    t = t.times(y);
                }
            }
            out = out.plus(&t);
        }
        out
    }

    pub fn pow(&self, k: u32) -> Poly {
        (0..k).fold(Poly::constant(self.n, self.max, Rational::one()), |acc, _| acc.times(self))
    }
}

/// A library polynomial in classes `p_j` or `c_j`, expanded over `n` roots
/// with `p_j = e_j(x^2)` and `c_j = e_j(x)`.
pub fn classes_to_roots(p: &GradedPolynomial, n: usize, max: u32) -> Poly {
    let xs: Vec<Poly> = (0..n).map(|i| Poly::var(n, max, i)).collect();
    let squares: Vec<Poly> = xs.iter().map(|x| x.times(x)).collect();
    let basis = p.basis();
    let images: Vec<Poly> = basis
        .generators()
        .iter()
        .map(|g| {
            let j: usize = g.name[1..].parse().expect("class index");
            match &g.name[..1] {
                "p" => Poly::elementary(&squares, j, n, max),
                "c" => Poly::elementary(&xs, j, n, max),
                other => panic!("unexpected class prefix {other}"),
            }
        })
        .collect();
    let mut out = Poly::zero(n, max);
    for (m, c) in p.terms() {
        let mut t = Poly::constant(n, max, c.clone());
        for (img, &e) in images.iter().zip(m) {
            t = t.times(&img.pow(e));
        }
        out = out.plus(&t);
    }
    out
}

/// `sum_{n=1}^{N} ln n` with Kahan compensation.
pub fn kahan_log_factorial(n: usize) -> f64 {
    let (mut sum, mut comp) = (0.0f64, 0.0f64);
    for k in 1..=n {
        let y = (k as f64).ln() - comp;
        let t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    sum
}

/// `ζ_R'(0)` from Euler–Maclaurin with `N` terms and the first two
/// correction terms: `-(ln N! - (N+½) ln N + N - 1/(12N) + 1/(360N³))`.
pub fn zeta_prime_zero(n: usize) -> f64 {
    let nf = n as f64;
    -(kahan_log_factorial(n) - (nf + 0.5) * nf.ln() + nf - 1.0 / (12.0 * nf) + 1.0 / (360.0 * nf.powi(3)))
}

/// `Det'(-d²/dt²)` on a circle of length `β` from the spectrum `(2πn/β)²`,
/// `n ≠ 0`: `exp(-4[ζ_R(0) ln(β/2π) + ζ_R'(0)])`.
pub fn laplacian_det(beta: f64, n: usize) -> f64 {
    let zeta0 = -0.5;
    (-4.0 * (zeta0 * (beta / (2.0 * std::f64::consts::PI)).ln() + zeta_prime_zero(n))).exp()
}

/// `prod_{n=1}^{N} (1 - (y β / 2πn)^2)^2 · β²`, straight multiplication.
pub fn periodic_block(y: f64, beta: f64, n: usize) -> f64 {
    let b = y * beta / (2.0 * std::f64::consts::PI);
    let mut p = 1.0f64;
    for k in 1..=n {
        let r = b / k as f64;
        p *= 1.0 - r * r;
    }
    p * p * beta * beta
}

/// `4 prod_{m=0}^{N-1} (1 - (y β / π(2m+1))^2)^2`.
pub fn antiperiodic_block(y: f64, beta: f64, n: usize) -> f64 {
    let c = y * beta / std::f64::consts::PI;
    let mut p = 1.0f64;
    for m in 0..n {
        let r = c / (2 * m + 1) as f64;
        p *= 1.0 - r * r;
    }
    4.0 * p * p
}

/// Gaussian integer.
pub type Gi = (i64, i64);

pub fn gi_mul(a: Gi, b: Gi) -> Gi {
    (a.0 * b.0 - a.1 * b.1, a.0 * b.1 + a.1 * b.0)
}

/// Dense complex-integer matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat {
    pub n: usize,
    pub a: Vec<Gi>,
}

impl Mat {
    pub fn id(n: usize) -> Mat {
        let mut a = vec![(0, 0); n * n];
        for i in 0..n {
            a[i * n + i] = (1, 0);
        }
        Mat { n, a }
    }

    pub fn mul(&self, o: &Mat) -> Mat {
        let n = self.n;
        let mut a = vec![(0, 0); n * n];
        for i in 0..n {
            for k in 0..n {
                let x = self.a[i * n + k];
                if x == (0, 0) {
                    continue;
                }
                for j in 0..n {
                    let y = gi_mul(x, o.a[k * n + j]);
                    let e = &mut a[i * n + j];
                    e.0 += y.0;
                    e.1 += y.1;
                }
            }
        }
        Mat { n, a }
    }

    pub fn kron(&self, o: &Mat) -> Mat {
        let n = self.n * o.n;
        let mut a = vec![(0, 0); n * n];
        for i in 0..self.n {
            for j in 0..self.n {
                for k in 0..o.n {
                    for l in 0..o.n {
                        a[(i * o.n + k) * n + j * o.n + l] = gi_mul(self.a[i * self.n + j], o.a[k * o.n + l]);
                    }
                }
            }
        }
        Mat { n, a }
    }

    pub fn scale(&self, c: Gi) -> Mat {
        Mat { n: self.n, a: self.a.iter().map(|&x| gi_mul(x, c)).collect() }
    }

    pub fn trace(&self) -> Gi {
        (0..self.n).fold((0, 0), |acc, i| {
            let x = self.a[i * self.n + i];
            (acc.0 + x.0, acc.1 + x.1)
        })
    }
}

/// Jordan–Wigner gamma matrices: `γ^{2k+1} = σ3^{⊗k} ⊗ σ1 ⊗ I`,
/// `γ^{2k+2} = σ3^{⊗k} ⊗ σ2 ⊗ I`.
pub fn jordan_wigner(n: usize) -> Vec<Mat> {
    let s1 = Mat { n: 2, a: vec![(0, 0), (1, 0), (1, 0), (0, 0)] };
    let s2 = Mat { n: 2, a: vec![(0, 0), (0, -1), (0, 1), (0, 0)] };
    let s3 = Mat { n: 2, a: vec![(1, 0), (0, 0), (0, 0), (-1, 0)] };
    let mut out = Vec::new();
    for k in 0..n {
        for s in [&s1, &s2] {
            let mut m = Mat::id(1);
            for _ in 0..k {
                m = m.kron(&s3);
            }
            m = m.kron(s);
            for _ in k + 1..n {
                m = m.kron(&Mat::id(2));
            }
            out.push(m);
        }
    }
    out
}

/// Parity of the permutation reversing `len` items, by counting inversions.
pub fn reversal_is_odd(len: usize) -> bool {
    let p: Vec<usize> = (0..len).rev().collect();
    let mut inv = 0usize;
    for i in 0..len {
        for j in i + 1..len {
            if p[i] > p[j] {
                inv += 1;
            }
        }
    }
    inv % 2 == 1
}

/// `χ(CP^n, O(k)) = (k+1)(k+2)⋯(k+n) / n!`, valid for every integer `k`.
pub fn projective_euler_characteristic(n: i64, k: i64) -> i64 {
    let num: i64 = (1..=n).map(|i| k + i).product();
    let den: i64 = (1..=n).product();
    num / den
}
