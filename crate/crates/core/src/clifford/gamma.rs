//! Euclidean gamma matrices in even dimension with entries in `{0, ±1, ±i}`.

use std::fmt;
use std::ops::{Add, Mul};

use num_complex::Complex;

use crate::error::{Error, Result};

pub type Entry = Complex<i64>;

/// Dense square matrix over the Gaussian integers.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    dim: usize,
    data: Vec<Entry>,
}

impl Matrix {
    pub fn zeros(dim: usize) -> Self {
        Matrix {
            dim,
            data: vec![Entry::new(0, 0); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.data[i * dim + i] = Entry::new(1, 0);
        }
        m
    }

    pub fn from_rows(rows: &[&[Entry]]) -> Self {
        let dim = rows.len();
        assert!(rows.iter().all(|r| r.len() == dim), "square matrix");
        Matrix {
            dim,
            data: rows.iter().flat_map(|r| r.iter().copied()).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> Entry {
        self.data[i * self.dim + j]
    }

    pub fn trace(&self) -> Entry {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        let mut out = Self::zeros(self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                out.data[j * self.dim + i] = self.get(i, j).conj();
            }
        }
        out
    }

    pub fn scale(&self, c: Entry) -> Self {
        Matrix {
            dim: self.dim,
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }

    pub fn kron(&self, other: &Matrix) -> Self {
        let d = self.dim * other.dim;
        let mut out = Self::zeros(d);
        for i in 0..self.dim {
            for j in 0..self.dim {
                let a = self.get(i, j);
                if a == Entry::new(0, 0) {
                    continue;
                }
                for k in 0..other.dim {
                    for l in 0..other.dim {
                        out.data[(i * other.dim + k) * d + j * other.dim + l] = a * other.get(k, l);
                    }
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| *x == Entry::new(0, 0))
    }

    pub fn anticommutator(&self, other: &Matrix) -> Matrix {
        &(self * other) + &(other * self)
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        Matrix {
            dim: self.dim,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        let n = self.dim;
        let mut out = Matrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a == Entry::new(0, 0) {
                    continue;
                }
                for j in 0..n {
                    out.data[i * n + j] += a * rhs.get(k, j);
                }
            }
        }
        out
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.dim {
            let row: Vec<String> = (0..self.dim).map(|j| format_entry(self.get(i, j))).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

fn format_entry(z: Entry) -> String {
    match (z.re, z.im) {
        (re, 0) => re.to_string(),
        (0, 1) => "i".into(),
        (0, -1) => "-i".into(),
        (0, im) => format!("{im}i"),
        (re, im) => format!("{re}{im:+}i"),
    }
}

fn pauli_1() -> Matrix {
    let (o, l) = (Entry::new(0, 0), Entry::new(1, 0));
    Matrix::from_rows(&[&[o, l], &[l, o]])
}

fn pauli_2() -> Matrix {
    let (o, i) = (Entry::new(0, 0), Entry::new(0, 1));
    Matrix::from_rows(&[&[o, -i], &[i, o]])
}

pub const MAX_HALF_DIM: usize = 5;

/// `2n` Hermitian matrices of size `2^n` with `{γ^a, γ^b} = 2δ^{ab}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaRep {
    n: usize,
    matrices: Vec<Matrix>,
}

impl GammaRep {
    pub fn half_dim(&self) -> usize {
        self.n
    }

    pub fn matrices(&self) -> &[Matrix] {
        &self.matrices
    }

    pub fn size(&self) -> usize {
        1 << self.n
    }
}

/// Pauli pair for `n = 1`, then `γ^a ⊗ σ1`, `γ_chir ⊗ σ1`, `I ⊗ σ2`.
pub fn build_gamma(n: usize) -> Result<GammaRep> {
    if !(1..=MAX_HALF_DIM).contains(&n) {
        return Err(Error::OutOfRange(format!(
            "gamma matrices need 1 <= n <= {MAX_HALF_DIM}, got {n}"
        )));
    }
    let mut rep = GammaRep {
        n: 1,
        matrices: vec![pauli_1(), pauli_2()],
    };
    while rep.n < n {
        let s1 = pauli_1();
        let mut next: Vec<Matrix> = rep.matrices.iter().map(|g| g.kron(&s1)).collect();
        next.push(chirality(&rep).kron(&s1));
        next.push(Matrix::identity(rep.size()).kron(&pauli_2()));
        rep = GammaRep {
            n: rep.n + 1,
            matrices: next,
        };
    }
    Ok(rep)
}

/// `γ_{2n+1} = i^n γ^1 ⋯ γ^{2n}`.
pub fn chirality(rep: &GammaRep) -> Matrix {
    let product = rep
        .matrices
        .iter()
        .fold(Matrix::identity(rep.size()), |acc, g| &acc * g);
    let phase = [Entry::new(1, 0), Entry::new(0, 1), Entry::new(-1, 0), Entry::new(0, -1)][rep.n % 4];
    product.scale(phase)
}
