//! Dense square matrices over [`ExactScalar`].

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::scalar::ExactScalar;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExactMatrix {
    n: usize,
    entries: Vec<ExactScalar>,
}

impl ExactMatrix {
    pub fn zeros(n: usize) -> Self {
        ExactMatrix { n, entries: vec![ExactScalar::zero(); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.set(i, i, ExactScalar::one());
        }
        m
    }

    pub fn diag(d: &[ExactScalar]) -> Self {
        let mut m = Self::zeros(d.len());
        for (i, v) in d.iter().enumerate() {
            m.set(i, i, v.clone());
        }
        m
    }

    /// Builds from `(row, col, value)` with 1-based indices, the way
    /// matrices are usually printed.
    pub fn from_entries(n: usize, entries: &[(usize, usize, ExactScalar)]) -> Self {
        let mut m = Self::zeros(n);
        for (r, c, v) in entries {
            assert!(*r >= 1 && *c >= 1 && *r <= n && *c <= n, "entry ({r},{c}) outside {n}x{n}");
            m.set(r - 1, c - 1, v.clone());
        }
        m
    }

    /// Row-major nested rows.
    pub fn from_rows(rows: Vec<Vec<ExactScalar>>) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        ExactMatrix { n, entries: rows.into_iter().flatten().collect() }
    }

    pub fn from_ints(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| ExactScalar::int(v)).collect())
                .collect(),
        )
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// 0-based access.
    pub fn get(&self, r: usize, c: usize) -> &ExactScalar {
        &self.entries[r * self.n + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: ExactScalar) {
        self.entries[r * self.n + c] = v;
    }

    pub fn entries(&self) -> &[ExactScalar] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(ExactScalar::is_zero)
    }

    /// Nonzero entries as `(row, col, value)`, 0-based, row-major.
    pub fn nonzeros(&self) -> Vec<(usize, usize, ExactScalar)> {
        self.entries
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(k, v)| (k / self.n, k % self.n, v.clone()))
            .collect()
    }

    pub fn scale(&self, c: &ExactScalar) -> Self {
        ExactMatrix { n: self.n, entries: self.entries.iter().map(|v| v * c).collect() }
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.n);
        for r in 0..self.n {
            for c in 0..self.n {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        let mut t = self.transpose();
        for v in &mut t.entries {
            *v = v.conj();
        }
        t
    }

    pub fn trace(&self) -> ExactScalar {
        let mut acc = ExactScalar::zero();
        for i in 0..self.n {
            acc += self.get(i, i);
        }
        acc
    }

    pub fn commutator(&self, other: &Self) -> Self {
        &(self * other) - &(other * self)
    }

    /// Kronecker product `self (x) other`.
    pub fn kron(&self, other: &Self) -> Self {
        let (n, m) = (self.n, other.n);
        let mut k = Self::zeros(n * m);
        for i in 0..n {
            for j in 0..n {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for p in 0..m {
                    for q in 0..m {
                        k.set(i * m + p, j * m + q, a * other.get(p, q));
                    }
                }
            }
        }
        k
    }

    /// Leading principal block on the given 0-based index set.
    pub fn restrict(&self, idx: &[usize]) -> Self {
        let mut m = Self::zeros(idx.len());
        for (a, &r) in idx.iter().enumerate() {
            for (b, &c) in idx.iter().enumerate() {
                m.set(a, b, self.get(r, c).clone());
            }
        }
        m
    }

    /// `exp(self)` when `self` is nilpotent: the series is summed exactly
    /// until the power vanishes. `None` if `self^n != 0`.
    pub fn nilpotent_exp(&self) -> Option<Self> {
        let mut sum = Self::identity(self.n);
        let mut term = Self::identity(self.n);
        for k in 1..=self.n {
            term = (&term * self).scale(&ExactScalar::ratio(1, k as i64));
            if term.is_zero() {
                return Some(sum);
            }
            sum = &sum + &term;
        }
        None
    }

    pub fn mul_vec(&self, v: &[ExactScalar]) -> Vec<ExactScalar> {
        assert_eq!(v.len(), self.n, "dimension mismatch");
        (0..self.n)
            .map(|r| {
                let mut acc = ExactScalar::zero();
                for (c, x) in v.iter().enumerate() {
                    let a = self.get(r, c);
                    if !a.is_zero() && !x.is_zero() {
                        acc += &(a * x);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn to_complex(&self) -> DMatrix<Complex64> {
        DMatrix::from_fn(self.n, self.n, |r, c| self.get(r, c).to_complex())
    }
}

impl<'a> Add<&'a ExactMatrix> for &'a ExactMatrix {
    type Output = ExactMatrix;
    fn add(self, rhs: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.n, rhs.n, "dimension mismatch");
        ExactMatrix {
            n: self.n,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a + b).collect(),
        }
    }
}

impl<'a> Sub<&'a ExactMatrix> for &'a ExactMatrix {
    type Output = ExactMatrix;
    fn sub(self, rhs: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.n, rhs.n, "dimension mismatch");
        ExactMatrix {
            n: self.n,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a - b).collect(),
        }
    }
}

impl<'a> Mul<&'a ExactMatrix> for &'a ExactMatrix {
    type Output = ExactMatrix;
    fn mul(self, rhs: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.n, rhs.n, "dimension mismatch");
        let n = self.n;
        let mut out = ExactMatrix::zeros(n);
        for r in 0..n {
            for k in 0..n {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..n {
                    let b = rhs.get(k, c);
                    if !b.is_zero() {
                        out.entries[r * n + c] += &(a * b);
                    }
                }
            }
        }
        out
    }
}

impl Neg for &ExactMatrix {
    type Output = ExactMatrix;
    fn neg(self) -> ExactMatrix {
        self.scale(&ExactScalar::int(-1))
    }
}

/// Column-aligned rendering, one row per line.
impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.entries.iter().map(ToString::to_string).collect();
        let width = cells.iter().map(|s| s.chars().count()).max().unwrap_or(1);
        for r in 0..self.n {
            let row: Vec<String> = (0..self.n)
                .map(|c| format!("{:>width$}", cells[r * self.n + c]))
                .collect();
            writeln!(f, "[ {} ]", row.join("  "))?;
        }
        Ok(())
    }
}
