//! Inonu-Wigner contraction of the 5x5 O(3,2) generators by the squeeze
//! `C(eps) = diag(1/eps, 1/eps, 1/eps, 1/eps, eps)`.
//!
//! Entries are Laurent polynomials in `eps`, so `eps -> 0` is an exact
//! operation: keep the constant terms, drop positive powers, and fail on any
//! surviving negative power.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul};

use nalgebra::DMatrix;
use num_complex::Complex64;
use thiserror::Error;

use crate::catalog::{self, Element, GeneratorFamily, Variant};
use crate::liecore::StructureConstants;
use crate::matrix::ExactMatrix;
use crate::scalar::ExactScalar;

/// Finite Laurent polynomial `sum_k c_k eps^k`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Laurent(BTreeMap<i32, ExactScalar>);

impl Laurent {
    pub fn zero() -> Self {
        Laurent(BTreeMap::new())
    }

    pub fn monomial(c: ExactScalar, power: i32) -> Self {
        let mut l = Self::zero();
        l.add_term(power, c);
        l
    }

    pub fn constant(c: ExactScalar) -> Self {
        Self::monomial(c, 0)
    }

    fn add_term(&mut self, power: i32, c: ExactScalar) {
        if c.is_zero() {
            return;
        }
        let slot = self.0.entry(power).or_insert_with(ExactScalar::zero);
        *slot += &c;
        if slot.is_zero() {
            self.0.remove(&power);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, &ExactScalar)> {
        self.0.iter().map(|(k, v)| (*k, v))
    }

    pub fn coeff(&self, power: i32) -> ExactScalar {
        self.0.get(&power).cloned().unwrap_or_else(ExactScalar::zero)
    }

    pub fn min_power(&self) -> Option<i32> {
        self.0.keys().next().copied()
    }

    /// Multiplies by `eps^k`.
    pub fn shift(&self, k: i32) -> Self {
        Laurent(self.0.iter().map(|(p, c)| (p + k, c.clone())).collect())
    }

    /// Drops every positive power.
    pub fn truncate_nonpositive(&self) -> Self {
        Laurent(self.0.iter().filter(|(p, _)| **p <= 0).map(|(p, c)| (*p, c.clone())).collect())
    }

    pub fn eval(&self, eps: f64) -> Complex64 {
        self.0.iter().map(|(p, c)| c.to_complex() * eps.powi(*p)).sum()
    }
}

impl Add for &Laurent {
    type Output = Laurent;
    fn add(self, rhs: &Laurent) -> Laurent {
        let mut out = self.clone();
        for (p, c) in rhs.terms() {
            out.add_term(p, c.clone());
        }
        out
    }
}

impl Mul for &Laurent {
    type Output = Laurent;
    fn mul(self, rhs: &Laurent) -> Laurent {
        let mut out = Laurent::zero();
        for (p, a) in self.terms() {
            for (q, b) in rhs.terms() {
                out.add_term(p + q, a * b);
            }
        }
        out
    }
}

impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms()
            .map(|(p, c)| {
                let c = if c.is_compound() { format!("({c})") } else { c.to_string() };
                match p {
                    0 => c,
                    1 => format!("{c}*eps"),
                    _ => format!("{c}*eps^{p}"),
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Square matrix of Laurent polynomials in `eps`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EpsMatrix {
    n: usize,
    entries: Vec<Laurent>,
}

/// An entry `(row, col, power, coeff)`, 0-based, of a Laurent matrix.
pub type TrajectoryRow = (usize, usize, i32, ExactScalar);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ContractError {
    /// Entries `(row, col, power)` (0-based) with a surviving negative power.
    #[error("limit eps -> 0 diverges at {0:?}")]
    Divergent(Vec<(usize, usize, i32)>),
    #[error("expected a {expected}x{expected} matrix, got {got}x{got}")]
    Dimension { expected: usize, got: usize },
    #[error("generator '{0}' not found")]
    UnknownGenerator(String),
    #[error("family does not hold matrices")]
    NotMatrix,
}

impl EpsMatrix {
    pub fn zeros(n: usize) -> Self {
        EpsMatrix { n, entries: vec![Laurent::zero(); n * n] }
    }

    pub fn from_exact(m: &ExactMatrix) -> Self {
        EpsMatrix { n: m.n(), entries: m.entries().iter().map(|c| Laurent::constant(c.clone())).collect() }
    }

    /// `diag(c_k eps^{p_k})`.
    pub fn diag_monomials(d: &[(ExactScalar, i32)]) -> Self {
        let mut m = Self::zeros(d.len());
        for (k, (c, p)) in d.iter().enumerate() {
            m.entries[k * d.len() + k] = Laurent::monomial(c.clone(), *p);
        }
        m
    }

    pub fn identity(n: usize) -> Self {
        Self::from_exact(&ExactMatrix::identity(n))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, r: usize, c: usize) -> &Laurent {
        &self.entries[r * self.n + c]
    }

    pub fn shift(&self, k: i32) -> Self {
        EpsMatrix { n: self.n, entries: self.entries.iter().map(|l| l.shift(k)).collect() }
    }

    pub fn truncate_nonpositive(&self) -> Self {
        EpsMatrix { n: self.n, entries: self.entries.iter().map(Laurent::truncate_nonpositive).collect() }
    }

    /// Nonzero `(row, col, power, coeff)` in row-major, then power order.
    pub fn trajectory(&self) -> Vec<TrajectoryRow> {
        let mut out = Vec::new();
        for r in 0..self.n {
            for c in 0..self.n {
                for (p, v) in self.get(r, c).terms() {
                    out.push((r, c, p, v.clone()));
                }
            }
        }
        out
    }

    /// Laplace expansion; fine at 5x5.
    pub fn det(&self) -> Laurent {
        fn rec(m: &EpsMatrix, rows: &[usize], cols: &[usize]) -> Laurent {
            if rows.is_empty() {
                return Laurent::constant(ExactScalar::one());
            }
            let r = rows[0];
            let mut acc = Laurent::zero();
            for (k, &c) in cols.iter().enumerate() {
                let e = m.get(r, c);
                if e.is_zero() {
                    continue;
                }
                let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
                let minor = rec(m, &rows[1..], &rest);
                let sign = if k % 2 == 0 { 1 } else { -1 };
                acc = &acc + &(&(e * &minor) * &Laurent::constant(ExactScalar::int(sign)));
            }
            acc
        }
        let idx: Vec<usize> = (0..self.n).collect();
        rec(self, &idx, &idx)
    }

    /// `eps -> 0`.
    pub fn limit(&self) -> Result<ExactMatrix, ContractError> {
        let mut bad = Vec::new();
        let mut out = ExactMatrix::zeros(self.n);
        for r in 0..self.n {
            for c in 0..self.n {
                let e = self.get(r, c);
                bad.extend(e.terms().filter(|(p, _)| *p < 0).map(|(p, _)| (r, c, p)));
                out.set(r, c, e.coeff(0));
            }
        }
        if bad.is_empty() {
            Ok(out)
        } else {
            Err(ContractError::Divergent(bad))
        }
    }

    /// Substitutes a numeric `eps`.
    pub fn eval(&self, eps: f64) -> DMatrix<Complex64> {
        DMatrix::from_fn(self.n, self.n, |r, c| self.get(r, c).eval(eps))
    }
}

impl Mul for &EpsMatrix {
    type Output = EpsMatrix;
    fn mul(self, rhs: &EpsMatrix) -> EpsMatrix {
        assert_eq!(self.n, rhs.n, "dimension mismatch");
        let n = self.n;
        let mut out = EpsMatrix::zeros(n);
        for r in 0..n {
            for k in 0..n {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..n {
                    let b = rhs.get(k, c);
                    if !b.is_zero() {
                        out.entries[r * n + c] = &out.entries[r * n + c] + &(a * b);
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for EpsMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.entries.iter().map(ToString::to_string).collect();
        let width = cells.iter().map(|s| s.chars().count()).max().unwrap_or(1);
        for r in 0..self.n {
            let row: Vec<String> = (0..self.n).map(|c| format!("{:>width$}", cells[r * self.n + c])).collect();
            writeln!(f, "[ {} ]", row.join("  "))?;
        }
        Ok(())
    }
}

/// `diag(eps^-1 x (n-1), eps)`.
pub fn squeeze_matrix(n: usize) -> EpsMatrix {
    let d: Vec<(ExactScalar, i32)> =
        (0..n).map(|k| (ExactScalar::one(), if k + 1 == n { 1 } else { -1 })).collect();
    EpsMatrix::diag_monomials(&d)
}

/// Exact inverse of [`squeeze_matrix`].
pub fn squeeze_inverse(n: usize) -> EpsMatrix {
    let d: Vec<(ExactScalar, i32)> =
        (0..n).map(|k| (ExactScalar::one(), if k + 1 == n { -1 } else { 1 })).collect();
    EpsMatrix::diag_monomials(&d)
}

fn check_dim(g: &ExactMatrix) -> Result<(), ContractError> {
    if g.n() != 5 {
        return Err(ContractError::Dimension { expected: 5, got: g.n() });
    }
    Ok(())
}

/// `eps^power * C G C^-1`.
pub fn conjugate(g: &ExactMatrix, power: i32) -> Result<EpsMatrix, ContractError> {
    check_dim(g)?;
    let c = squeeze_matrix(5);
    let ci = squeeze_inverse(5);
    Ok((&(&c * &EpsMatrix::from_exact(g)) * &ci).shift(power))
}

/// Contracted generator `lim eps^power C G C^-1`.
pub fn contract_generator(g: &ExactMatrix, power: i32) -> Result<ExactMatrix, ContractError> {
    conjugate(g, power)?.limit()
}

/// Squeeze, drop the vanishing terms, then squeeze back:
/// `lim C^-1 trunc(C G C^-1) C`.
pub fn conjugate_back(g: &ExactMatrix) -> Result<ExactMatrix, ContractError> {
    let squeezed = conjugate(g, 0)?.truncate_nonpositive();
    (&(&squeeze_inverse(5) * &squeezed) * &squeeze_matrix(5)).limit()
}

/// What a given power does to one generator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PowerOutcome {
    Divergent,
    Vanishes,
    Finite(ExactMatrix),
}

/// Outcome of `lim eps^p C G C^-1` for each `p` in `powers`.
pub fn power_scan(g: &ExactMatrix, powers: impl IntoIterator<Item = i32>) -> Result<Vec<(i32, PowerOutcome)>, ContractError> {
    powers
        .into_iter()
        .map(|p| {
            let o = match contract_generator(g, p) {
                Ok(m) if m.is_zero() => PowerOutcome::Vanishes,
                Ok(m) => PowerOutcome::Finite(m),
                Err(ContractError::Divergent(_)) => PowerOutcome::Divergent,
                Err(e) => return Err(e),
            };
            Ok((p, o))
        })
        .collect()
}

/// One contraction step: `to = lim eps^power C from C^-1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Step {
    pub from: String,
    pub to: String,
    pub power: i32,
}

impl Step {
    pub fn new(from: &str, to: &str, power: i32) -> Self {
        Step { from: from.to_string(), to: to.to_string(), power }
    }
}

pub const POINCARE_LABELS: [&str; 10] = ["J1", "J2", "J3", "K1", "K2", "K3", "P1", "P2", "P3", "P0"];

/// J and K kept (power 0), `Q_i -> P_i` and `S0 -> P0` at power 2.
pub fn o32_plan() -> Vec<Step> {
    let mut plan: Vec<Step> = ["J1", "J2", "J3", "K1", "K2", "K3"].iter().map(|l| Step::new(l, l, 0)).collect();
    plan.extend([
        Step::new("Q1", "P1", 2),
        Step::new("Q2", "P2", 2),
        Step::new("Q3", "P3", 2),
        Step::new("S0", "P0", 2),
    ]);
    plan
}

/// The same scheme expressed on the contracted labels, for re-contraction.
pub fn poincare_plan() -> Vec<Step> {
    POINCARE_LABELS
        .iter()
        .map(|l| Step::new(l, l, if l.starts_with('P') { 2 } else { 0 }))
        .collect()
}

/// Applies `plan` to a family of 5x5 matrices.
pub fn contract_family(family: &GeneratorFamily, plan: &[Step], name: &str) -> Result<GeneratorFamily, ContractError> {
    let mut labels = Vec::new();
    let mut elements = Vec::new();
    for s in plan {
        let g = family
            .get(&s.from)
            .ok_or_else(|| ContractError::UnknownGenerator(s.from.clone()))?
            .as_matrix()
            .ok_or(ContractError::NotMatrix)?;
        labels.push(s.to.clone());
        elements.push(Element::Matrix(contract_generator(g, s.power)?));
    }
    Ok(GeneratorFamily::new(
        name,
        labels,
        elements,
        "squeeze contraction of the five-by-five de Sitter generators",
        Variant::Canonical,
    )
    .expect("plan labels are distinct"))
}

/// The ten contracted generators `{J, K, P}` from the canonical O(3,2) family.
pub fn contract_o32() -> Result<GeneratorFamily, ContractError> {
    Ok(contract_family(&catalog::o32_matrices(), &o32_plan(), "poincare")?
        .with_note("computed [K_i, P_j] = -i delta_ij P0 and [K_i, P0] = -i P_i; the printed [P_i, K_i] = i delta_0i P0 vanishes for spatial i"))
}

/// Max entrywise distance between the numeric conjugate at `eps` and `limit`.
pub fn numeric_gap(g: &ExactMatrix, power: i32, eps: f64) -> Result<f64, ContractError> {
    let m = conjugate(g, power)?;
    let lim = m.limit()?.to_complex();
    Ok((m.eval(eps) - lim).iter().map(|z| z.norm()).fold(0.0, f64::max))
}

/// Compares the boost-translation brackets of a contracted table with the
/// printed relation `[P_i, K_j] = i delta_0i P0` (zero for spatial `i`).
/// Returns one line per bracket where the two differ.
pub fn boost_translation_discrepancies(sc: &StructureConstants) -> Vec<String> {
    let mut out = Vec::new();
    for i in 1..=3 {
        for j in 1..=3 {
            let (Some(p), Some(k)) = (sc.index_of(&format!("P{i}")), sc.index_of(&format!("K{j}"))) else {
                continue;
            };
            let computed = sc.bracket(p, k);
            if !computed.is_empty() {
                out.push(format!(
                    "[P{i}, K{j}] = {} (printed form gives 0)",
                    sc.render_combination(&computed)
                ));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn o32(label: &str) -> ExactMatrix {
        catalog::o32_matrices().get(label).unwrap().as_matrix().unwrap().clone()
    }

    #[test]
    fn squeeze_inverse_and_det() {
        let c = squeeze_matrix(5);
        assert_eq!(&c * &squeeze_inverse(5), EpsMatrix::identity(5));
        assert_eq!(c.det(), Laurent::monomial(ExactScalar::one(), -3));
        assert_eq!(c.get(4, 4), &Laurent::monomial(ExactScalar::one(), 1));
    }

    #[test]
    fn q1_conjugate_powers() {
        let m = conjugate(&o32("Q1"), 0).unwrap();
        assert_eq!(m.get(0, 4), &Laurent::monomial(ExactScalar::i(), -2));
        assert_eq!(m.get(4, 0), &Laurent::monomial(ExactScalar::i(), 2));
        assert_eq!(m.limit().unwrap_err(), ContractError::Divergent(vec![(0, 4, -2)]));
    }

    #[test]
    fn rotations_and_boosts_commute_with_squeeze() {
        for l in ["J1", "J2", "J3", "K1", "K2", "K3"] {
            let g = o32(l);
            assert_eq!(conjugate(&g, 0).unwrap(), EpsMatrix::from_exact(&g), "{l}");
        }
    }

    #[test]
    fn direct_and_back_conjugation_agree() {
        for l in ["Q1", "Q2", "Q3", "S0"] {
            let g = o32(l);
            assert_eq!(contract_generator(&g, 2).unwrap(), conjugate_back(&g).unwrap(), "{l}");
        }
    }

    #[test]
    fn power_two_is_the_only_finite_nonzero_choice() {
        for l in ["Q1", "S0"] {
            let scan = power_scan(&o32(l), -1..=4).unwrap();
            for (p, o) in scan {
                match p {
                    p if p < 2 => assert_eq!(o, PowerOutcome::Divergent, "{l} {p}"),
                    2 => assert!(matches!(o, PowerOutcome::Finite(_))),
                    _ => assert_eq!(o, PowerOutcome::Vanishes, "{l} {p}"),
                }
            }
        }
    }

    #[test]
    fn wrong_dimension_is_rejected() {
        assert!(matches!(
            conjugate(&ExactMatrix::identity(4), 0),
            Err(ContractError::Dimension { expected: 5, got: 4 })
        ));
    }

    #[test]
    fn laurent_display() {
        let l = &Laurent::monomial(ExactScalar::i(), -2) + &Laurent::monomial(ExactScalar::int(3), 1);
        assert_eq!(l.to_string(), "i*eps^-2 + 3*eps");
        assert_eq!(l.eval(0.5).im, 4.0);
    }
}
