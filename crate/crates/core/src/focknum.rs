//! Truncated Fock-space matrices for ladder-operator expressions.
//!
//! Each mode keeps the number states `|0>, ..., |N-1>`; `a†|N-1> = 0`. Modes
//! are combined by the tensor product with mode 1 as the most significant
//! index. Commutators of truncated matrices are only exact away from the
//! cutoff, so checks run on columns with few enough total quanta.

use nalgebra::DMatrix;
use num_complex::Complex64;
use thiserror::Error;

use crate::opalg::{commutator, LadderKind, LadderSymbol, Monomial, OpAlgError, OperatorExpr};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FockError {
    #[error("expression uses {expr} modes but the realization has {fock}")]
    TooManyModes { expr: usize, fock: usize },
    #[error("guard {guard} leaves no protected states at cutoff {cutoff}")]
    GuardTooLarge { guard: usize, cutoff: usize },
    #[error("cutoff must be at least 1")]
    ZeroCutoff,
    #[error("expression of degree {0} is not quadratic")]
    NotQuadratic(u32),
    #[error(transparent)]
    Algebra(#[from] OpAlgError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FockRealization {
    cutoff: usize,
    modes: usize,
}

impl FockRealization {
    pub fn new(cutoff: usize, modes: usize) -> Result<Self, FockError> {
        if cutoff == 0 {
            return Err(FockError::ZeroCutoff);
        }
        Ok(FockRealization { cutoff, modes })
    }

    pub fn cutoff(&self) -> usize {
        self.cutoff
    }

    pub fn modes(&self) -> usize {
        self.modes
    }

    /// `N^M`.
    pub fn dim(&self) -> usize {
        self.cutoff.pow(self.modes as u32)
    }

    /// Occupation numbers of basis state `index`.
    pub fn occupations(&self, mut index: usize) -> Vec<usize> {
        let mut occ = vec![0; self.modes];
        for m in (0..self.modes).rev() {
            occ[m] = index % self.cutoff;
            index /= self.cutoff;
        }
        occ
    }

    pub fn index(&self, occ: &[usize]) -> usize {
        occ.iter().fold(0, |acc, &n| acc * self.cutoff + n)
    }

    /// Truncated `a` or `a†` on one mode, `N x N`.
    pub fn single_mode_ladder(&self, kind: LadderKind) -> DMatrix<Complex64> {
        let n = self.cutoff;
        let mut m = DMatrix::zeros(n, n);
        for k in 1..n {
            let v = Complex64::new((k as f64).sqrt(), 0.0);
            match kind {
                LadderKind::Annihilation => m[(k - 1, k)] = v,
                LadderKind::Creation => m[(k, k - 1)] = v,
            }
        }
        m
    }

    /// Ladder matrix of one mode on the full tensor space, built by Kronecker
    /// products with identities.
    pub fn ladder(&self, sym: LadderSymbol) -> DMatrix<Complex64> {
        let id = DMatrix::<Complex64>::identity(self.cutoff, self.cutoff);
        let one = self.single_mode_ladder(sym.kind);
        let mut out = DMatrix::<Complex64>::identity(1, 1);
        for m in 1..=self.modes {
            out = out.kronecker(if m == sym.mode { &one } else { &id });
        }
        out
    }

    /// Image of one basis column under a normal-ordered monomial, or `None`
    /// when the truncation kills it. Equals the product of truncated ladder
    /// matrices in the order `a†...a†a...a`.
    fn apply_monomial(&self, mono: &Monomial, occ: &[usize]) -> Option<(usize, f64)> {
        let mut target = Vec::with_capacity(self.modes);
        let mut amp = 1.0;
        for m in 0..self.modes {
            let (c, d) = (mono.cdeg()[m] as usize, mono.adeg()[m] as usize);
            let n = occ[m];
            if d > n || n - d + c >= self.cutoff {
                return None;
            }
            // n!/(n-d)! * (n-d+c)!/(n-d)!, exact in f64 at these sizes
            let mut prod = 1.0;
            for k in 0..d {
                prod *= (n - k) as f64;
            }
            for k in 1..=c {
                prod *= (n - d + k) as f64;
            }
            amp *= prod.sqrt();
            target.push(n - d + c);
        }
        Some((self.index(&target), amp))
    }

    /// Column `j` of `realize(expr)` as sparse `(row, value)` pairs.
    fn column(&self, expr: &OperatorExpr, j: usize) -> Vec<(usize, Complex64)> {
        let occ = self.occupations(j);
        let mut out: Vec<(usize, Complex64)> = Vec::new();
        for (mono, c) in expr.terms() {
            let mono = if mono.modes() == self.modes {
                mono.clone()
            } else {
                let mut cd = mono.cdeg().to_vec();
                let mut ad = mono.adeg().to_vec();
                cd.resize(self.modes, 0);
                ad.resize(self.modes, 0);
                Monomial::new(cd, ad)
            };
            if let Some((row, amp)) = self.apply_monomial(&mono, &occ) {
                let v = c.to_complex() * amp;
                match out.iter_mut().find(|(r, _)| *r == row) {
                    Some(slot) => slot.1 += v,
                    None => out.push((row, v)),
                }
            }
        }
        out
    }

    /// Dense matrix of `expr`: each normal-ordered monomial becomes the
    /// product of truncated ladder matrices.
    pub fn realize(&self, expr: &OperatorExpr) -> Result<DMatrix<Complex64>, FockError> {
        if expr.modes() > self.modes {
            return Err(FockError::TooManyModes { expr: expr.modes(), fock: self.modes });
        }
        let d = self.dim();
        let mut m = DMatrix::zeros(d, d);
        for j in 0..d {
            for (r, v) in self.column(expr, j) {
                m[(r, j)] += v;
            }
        }
        Ok(m)
    }

    /// Basis indices with total quanta `<= N - 1 - guard`.
    pub fn protected_states(&self, guard: usize) -> Result<Vec<usize>, FockError> {
        if guard + 1 > self.cutoff {
            return Err(FockError::GuardTooLarge { guard, cutoff: self.cutoff });
        }
        let limit = self.cutoff - 1 - guard;
        Ok((0..self.dim())
            .filter(|&j| self.occupations(j).iter().sum::<usize>() <= limit)
            .collect())
    }
}

/// `A * B` restricted to columns `cols`, skipping zero entries.
fn product_columns(a: &DMatrix<Complex64>, b: &DMatrix<Complex64>, cols: &[usize]) -> DMatrix<Complex64> {
    let n = a.nrows();
    let mut out = DMatrix::zeros(n, cols.len());
    for (jj, &j) in cols.iter().enumerate() {
        for k in 0..b.nrows() {
            let bk = b[(k, j)];
            if bk == Complex64::new(0.0, 0.0) {
                continue;
            }
            for r in 0..n {
                let ark = a[(r, k)];
                if ark != Complex64::new(0.0, 0.0) {
                    out[(r, jj)] += ark * bk;
                }
            }
        }
    }
    out
}

/// `[A, B]` of two dense matrices on the given columns.
pub fn matrix_commutator_columns(
    a: &DMatrix<Complex64>,
    b: &DMatrix<Complex64>,
    cols: &[usize],
) -> DMatrix<Complex64> {
    product_columns(a, b, cols) - product_columns(b, a, cols)
}

/// Full matrix commutator.
pub fn matrix_commutator(a: &DMatrix<Complex64>, b: &DMatrix<Complex64>) -> DMatrix<Complex64> {
    let cols: Vec<usize> = (0..b.ncols()).collect();
    matrix_commutator_columns(a, b, &cols)
}

fn max_abs(m: &DMatrix<Complex64>) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// Max entry of `realize([A,B]) - [realize(A), realize(B)]` over the columns
/// with total quanta `<= N - 1 - guard`.
pub fn protected_commutator_check(
    a: &OperatorExpr,
    b: &OperatorExpr,
    fock: &FockRealization,
    guard: usize,
) -> Result<f64, FockError> {
    for e in [a, b] {
        if e.degree() > 2 {
            return Err(FockError::NotQuadratic(e.degree()));
        }
    }
    let cols = fock.protected_states(guard)?;
    let ra = fock.realize(a)?;
    let rb = fock.realize(b)?;
    let symbolic = fock.realize(&commutator(a, b)?)?;
    let numeric = matrix_commutator_columns(&ra, &rb, &cols);
    let sym_cols = DMatrix::from_fn(symbolic.nrows(), cols.len(), |r, jj| symbolic[(r, cols[jj])]);
    Ok(max_abs(&(sym_cols - numeric)))
}

/// Max entry of `M - M^dagger`.
pub fn hermiticity_defect(m: &DMatrix<Complex64>) -> f64 {
    max_abs(&(m - m.adjoint()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::opalg::parse_expr;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn number_operator_is_diagonal() {
        let f = FockRealization::new(6, 1).unwrap();
        let m = f.realize(&parse_expr("ad1*a1", 1).unwrap()).unwrap();
        let want = DMatrix::from_fn(6, 6, |r, k| if r == k { c(r as f64) } else { c(0.0) });
        assert_eq!(m, want);
    }

    #[test]
    fn truncation_edge_of_matrix_commutator() {
        let n = 5;
        let f = FockRealization::new(n, 1).unwrap();
        let a = f.ladder(LadderSymbol::annihilate(1));
        let ad = f.ladder(LadderSymbol::create(1));
        let comm = matrix_commutator(&a, &ad);
        for r in 0..n {
            for k in 0..n {
                let want = match (r == k, r == n - 1) {
                    (true, true) => 1.0 - n as f64,
                    (true, false) => 1.0,
                    _ => 0.0,
                };
                assert!((comm[(r, k)] - c(want)).norm() < 1e-12, "({r},{k})");
            }
        }
        // the symbolic commutator is the constant 1
        let sym = commutator(&OperatorExpr::a(1, 1), &OperatorExpr::ad(1, 1)).unwrap();
        assert_eq!(f.realize(&sym).unwrap(), DMatrix::identity(n, n));
    }

    #[test]
    fn realize_matches_ladder_products() {
        let f = FockRealization::new(4, 2).unwrap();
        let e = parse_expr("ad1*ad1*a2 + (2 - i)*ad2*a1*a2 + 3", 2).unwrap();
        let mut want = DMatrix::<Complex64>::zeros(16, 16);
        for (mono, coeff) in e.terms() {
            let mut p = DMatrix::<Complex64>::identity(16, 16);
            for s in mono.symbols() {
                p *= f.ladder(s);
            }
            want += p * coeff.to_complex();
        }
        let got = f.realize(&e).unwrap();
        assert!(max_abs(&(got - want)) < 1e-12);
    }

    #[test]
    fn index_round_trip() {
        let f = FockRealization::new(3, 3).unwrap();
        for j in 0..f.dim() {
            assert_eq!(f.index(&f.occupations(j)), j);
        }
        assert_eq!(f.occupations(5), vec![0, 1, 2]);
    }

    #[test]
    fn guard_limits() {
        let f = FockRealization::new(4, 1).unwrap();
        assert!(matches!(f.protected_states(4), Err(FockError::GuardTooLarge { .. })));
        assert_eq!(f.protected_states(3).unwrap(), vec![0]);
        let cubic = parse_expr("ad1^3", 1).unwrap();
        assert_eq!(
            protected_commutator_check(&cubic, &cubic, &f, 0),
            Err(FockError::NotQuadratic(3))
        );
    }

    #[test]
    fn too_many_modes() {
        let f = FockRealization::new(4, 1).unwrap();
        assert!(matches!(
            f.realize(&OperatorExpr::a(2, 2)),
            Err(FockError::TooManyModes { expr: 2, fock: 1 })
        ));
    }
}
