//! Structure constants, closure, Jacobi and cross-representation comparison
//! for any [`GeneratorFamily`].
//!
//! Expansion in a basis is an exact linear solve over Q(i, sqrt2), so a
//! closed table is a proof rather than a tolerance check.

use std::collections::BTreeMap;
use std::fmt;

use serde_json::{json, Value};
use thiserror::Error;

use crate::catalog::{Element, ElementKind, GeneratorFamily};
use crate::matrix::ExactMatrix;
use crate::opalg::{Monomial, OperatorExpr};
use crate::scalar::ExactScalar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LieError {
    #[error("element shape does not match the basis")]
    ShapeMismatch,
    #[error("basis is empty")]
    EmptyBasis,
    #[error("basis is linearly dependent at {0:?}")]
    LinearlyDependent(Vec<String>),
    #[error("label '{0}' not found")]
    UnknownLabel(String),
    #[error("label count mismatch ({0} vs {1})")]
    LabelCount(usize, usize),
}

/// Result of expanding an element in a basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expansion {
    InSpan(Vec<ExactScalar>),
    /// Coefficients fitted on the pivot coordinates and the exact remainder.
    NotInSpan { coeffs: Vec<ExactScalar>, residual: Element },
}

impl Expansion {
    pub fn coeffs(&self) -> Option<&[ExactScalar]> {
        match self {
            Expansion::InSpan(c) => Some(c),
            Expansion::NotInSpan { .. } => None,
        }
    }

    pub fn in_span(&self) -> bool {
        matches!(self, Expansion::InSpan(_))
    }
}

/// Coordinates of an element: monomials for operators, entry index for matrices.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
enum Coord {
    Mono(Monomial),
    Entry(usize),
}

fn coordinates(e: &Element) -> Vec<(Coord, ExactScalar)> {
    match e {
        Element::Operator(op) => op
            .terms()
            .map(|(m, c)| (Coord::Mono(m.clone()), c.clone()))
            .collect(),
        Element::Matrix(m) => m
            .entries()
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(k, v)| (Coord::Entry(k), v.clone()))
            .collect(),
    }
}

fn combine(basis: &[Element], coeffs: &[ExactScalar]) -> Element {
    let mut acc = basis[0].scale(&ExactScalar::zero());
    for (b, c) in basis.iter().zip(coeffs) {
        if !c.is_zero() {
            acc = acc.add(&b.scale(c)).expect("basis shares one shape");
        }
    }
    acc
}

/// Gauss-Jordan inverse of a square matrix given as rows. `None` if singular.
fn invert(mut a: Vec<Vec<ExactScalar>>) -> Option<Vec<Vec<ExactScalar>>> {
    let n = a.len();
    let mut inv: Vec<Vec<ExactScalar>> = (0..n)
        .map(|r| (0..n).map(|c| if r == c { ExactScalar::one() } else { ExactScalar::zero() }).collect())
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, piv);
        inv.swap(col, piv);
        let p = a[col][col].inv()?;
        for k in 0..n {
            a[col][k] = &a[col][k] * &p;
            inv[col][k] = &inv[col][k] * &p;
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone();
            for k in 0..n {
                let t = &f * &a[col][k];
                a[r][k] -= &t;
                let t = &f * &inv[col][k];
                inv[r][k] -= &t;
            }
        }
    }
    Some(inv)
}

/// Precomputed solver for expansions in one basis.
///
/// Picks `m` coordinates on which the basis is invertible; coefficients are
/// solved there and the residual is checked on the full element.
#[derive(Debug, Clone)]
pub struct BasisSolver {
    elements: Vec<Element>,
    pivots: Vec<Coord>,
    inverse: Vec<Vec<ExactScalar>>,
}

impl BasisSolver {
    pub fn new(basis: &GeneratorFamily) -> Result<Self, LieError> {
        let elements = basis.elements().to_vec();
        if elements.is_empty() {
            return Err(LieError::EmptyBasis);
        }
        let m = elements.len();
        let cols: Vec<BTreeMap<Coord, ExactScalar>> =
            elements.iter().map(|e| coordinates(e).into_iter().collect()).collect();
        let mut keys: Vec<Coord> = cols.iter().flat_map(|c| c.keys().cloned()).collect();
        keys.sort();
        keys.dedup();

        // rows = coordinates, columns = basis elements
        let mut rows: Vec<(Coord, Vec<ExactScalar>)> = keys
            .iter()
            .map(|k| {
                let row = cols.iter().map(|c| c.get(k).cloned().unwrap_or_else(ExactScalar::zero)).collect();
                (k.clone(), row)
            })
            .collect();
        let original: Vec<(Coord, Vec<ExactScalar>)> = rows.clone();

        let mut dependent = Vec::new();
        let mut pivot_rows: Vec<Coord> = Vec::new();
        let mut next = 0;
        for col in 0..m {
            let Some(p) = (next..rows.len()).find(|&r| !rows[r].1[col].is_zero()) else {
                dependent.push(basis.labels()[col].clone());
                continue;
            };
            rows.swap(next, p);
            let pinv = rows[next].1[col].inv().expect("nonzero pivot");
            for r in next + 1..rows.len() {
                if rows[r].1[col].is_zero() {
                    continue;
                }
                let f = &rows[r].1[col] * &pinv;
                for k in col..m {
                    let t = &f * &rows[next].1[k];
                    rows[r].1[k] -= &t;
                }
            }
            pivot_rows.push(rows[next].0.clone());
            next += 1;
        }
        if !dependent.is_empty() {
            return Err(LieError::LinearlyDependent(dependent));
        }
        let lookup: BTreeMap<&Coord, &Vec<ExactScalar>> = original.iter().map(|(k, v)| (k, v)).collect();
        let square: Vec<Vec<ExactScalar>> = pivot_rows.iter().map(|k| lookup[k].clone()).collect();
        let inverse = invert(square).expect("pivot rows are independent");
        Ok(BasisSolver { elements, pivots: pivot_rows, inverse })
    }

    pub fn expand(&self, x: &Element) -> Result<Expansion, LieError> {
        if !x.same_shape(&self.elements[0]) {
            return Err(LieError::ShapeMismatch);
        }
        let v: BTreeMap<Coord, ExactScalar> = coordinates(x).into_iter().collect();
        let rhs: Vec<ExactScalar> = self
            .pivots
            .iter()
            .map(|k| v.get(k).cloned().unwrap_or_else(ExactScalar::zero))
            .collect();
        let coeffs: Vec<ExactScalar> = self
            .inverse
            .iter()
            .map(|row| {
                let mut acc = ExactScalar::zero();
                for (a, b) in row.iter().zip(&rhs) {
                    acc += &(a * b);
                }
                acc
            })
            .collect();
        let fitted = combine(&self.elements, &coeffs);
        let residual = x.add(&fitted.scale(&ExactScalar::int(-1))).expect("same shape");
        if residual.is_zero() {
            Ok(Expansion::InSpan(coeffs))
        } else {
            Ok(Expansion::NotInSpan { coeffs, residual })
        }
    }
}

/// Expands `x` in the span of `basis`.
pub fn expand_in_basis(x: &Element, basis: &GeneratorFamily) -> Result<Expansion, LieError> {
    BasisSolver::new(basis)?.expand(x)
}

/// `f[a][b][c]` with `[X_a, X_b] = sum_c f_ab^c X_c`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureConstants {
    labels: Vec<String>,
    f: Vec<ExactScalar>,
}

impl StructureConstants {
    pub fn zero(labels: Vec<String>) -> Self {
        let n = labels.len();
        StructureConstants { labels, f: vec![ExactScalar::zero(); n * n * n] }
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    fn idx(&self, a: usize, b: usize, c: usize) -> usize {
        let n = self.dim();
        (a * n + b) * n + c
    }

    pub fn get(&self, a: usize, b: usize, c: usize) -> &ExactScalar {
        &self.f[self.idx(a, b, c)]
    }

    /// Sets one entry only; see [`StructureConstants::set_bracket`].
    pub fn set(&mut self, a: usize, b: usize, c: usize, v: ExactScalar) {
        let i = self.idx(a, b, c);
        self.f[i] = v;
    }

    /// Sets `f_ab^c = v` and `f_ba^c = -v`.
    pub fn set_bracket(&mut self, a: usize, b: usize, c: usize, v: ExactScalar) {
        self.set(b, a, c, -&v);
        self.set(a, b, c, v);
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// `[X_a, X_b]` as `(c, coefficient)` pairs with nonzero coefficient.
    pub fn bracket(&self, a: usize, b: usize) -> Vec<(usize, ExactScalar)> {
        (0..self.dim())
            .filter_map(|c| {
                let v = self.get(a, b, c);
                (!v.is_zero()).then(|| (c, v.clone()))
            })
            .collect()
    }

    /// All nonzero `(a, b, c, f)` in row-major order.
    pub fn nonzero_triplets(&self) -> Vec<(usize, usize, usize, ExactScalar)> {
        let n = self.dim();
        let mut out = Vec::new();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let v = self.get(a, b, c);
                    if !v.is_zero() {
                        out.push((a, b, c, v.clone()));
                    }
                }
            }
        }
        out
    }

    pub fn is_antisymmetric(&self) -> bool {
        let n = self.dim();
        (0..n).all(|a| {
            (0..n).all(|b| (0..n).all(|c| *self.get(a, b, c) == -self.get(b, a, c)))
        })
    }

    pub fn is_abelian(&self) -> bool {
        self.f.iter().all(ExactScalar::is_zero)
    }

    /// `c_1 L_1 + c_2 L_2 + ...` with the labels of this table.
    pub fn render_combination(&self, terms: &[(usize, ExactScalar)]) -> String {
        render_combination(&self.labels, terms)
    }

    /// One line per pair `a < b`: `[A, B] = ...`.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for a in 0..self.dim() {
            for b in a + 1..self.dim() {
                out.push_str(&format!(
                    "[{}, {}] = {}\n",
                    self.labels[a],
                    self.labels[b],
                    self.render_combination(&self.bracket(a, b))
                ));
            }
        }
        out
    }

    /// Sparse JSON form, both orderings of each pair included.
    pub fn to_json(&self, family: &str) -> Value {
        let triplets: Vec<Value> = self
            .nonzero_triplets()
            .into_iter()
            .map(|(a, b, c, v)| {
                let q = v.components();
                json!({
                    "a": self.labels[a],
                    "b": self.labels[b],
                    "c": self.labels[c],
                    "coeff": v.to_string(),
                    "q": q.iter().map(|r| r.to_string()).collect::<Vec<_>>(),
                })
            })
            .collect();
        json!({
            "schema": 1,
            "family": family,
            "labels": self.labels,
            "f": triplets,
        })
    }
}

impl fmt::Display for StructureConstants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render_text())
    }
}

pub fn render_combination(labels: &[String], terms: &[(usize, ExactScalar)]) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (n, (c, v)) in terms.iter().enumerate() {
        let label = &labels[*c];
        let neg = !v.is_compound() && v.to_string().starts_with('-');
        let mag = if neg { -v } else { v.clone() };
        let sep = match (n == 0, neg) {
            (true, true) => "-",
            (true, false) => "",
            (false, true) => " - ",
            (false, false) => " + ",
        };
        let body = if mag.is_one() {
            label.clone()
        } else if mag.is_compound() {
            format!("({mag}) {label}")
        } else {
            format!("{mag} {label}")
        };
        out.push_str(sep);
        out.push_str(&body);
    }
    out
}

/// A bracket whose commutator left the span.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosureFailure {
    pub a: String,
    pub b: String,
    pub residual: Element,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosureReport {
    pub closed: bool,
    pub failures: Vec<ClosureFailure>,
    /// Labels that are linear combinations of earlier ones; closure is not
    /// assessed for a dependent basis.
    pub dependent: Vec<String>,
    pub table: Option<StructureConstants>,
}

impl ClosureReport {
    pub fn pairs_checked(&self) -> usize {
        self.table.as_ref().map_or(0, |t| t.dim() * (t.dim().saturating_sub(1)) / 2)
    }
}

/// Expands every commutator `[X_a, X_b]`, `a < b`, in the family's basis.
pub fn structure_constants(basis: &GeneratorFamily) -> ClosureReport {
    let solver = match BasisSolver::new(basis) {
        Ok(s) => s,
        Err(LieError::LinearlyDependent(dep)) => {
            return ClosureReport { closed: false, failures: Vec::new(), dependent: dep, table: None };
        }
        Err(_) => {
            return ClosureReport {
                closed: basis.is_empty(),
                failures: Vec::new(),
                dependent: Vec::new(),
                table: Some(StructureConstants::zero(Vec::new())),
            };
        }
    };
    let labels = basis.labels().to_vec();
    let els = basis.elements();
    let n = els.len();
    let mut table = StructureConstants::zero(labels.clone());
    let mut failures = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            let br = els[a].commutator(&els[b]).expect("family elements share a shape");
            match solver.expand(&br).expect("commutator has the basis shape") {
                Expansion::InSpan(coeffs) => {
                    for (c, v) in coeffs.into_iter().enumerate() {
                        if !v.is_zero() {
                            table.set_bracket(a, b, c, v);
                        }
                    }
                }
                Expansion::NotInSpan { residual, .. } => failures.push(ClosureFailure {
                    a: labels[a].clone(),
                    b: labels[b].clone(),
                    residual,
                }),
            }
        }
    }
    let closed = failures.is_empty();
    ClosureReport { closed, failures, dependent: Vec::new(), table: closed.then_some(table) }
}

/// `(a, b, c, e)` index tuples where the Jacobi contraction is nonzero.
pub fn jacobi_violations(sc: &StructureConstants) -> Vec<(usize, usize, usize, usize)> {
    let n = sc.dim();
    let mut out = Vec::new();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for e in 0..n {
                    let mut acc = ExactScalar::zero();
                    for d in 0..n {
                        for (x, y, z) in [(a, b, c), (b, c, a), (c, a, b)] {
                            let f1 = sc.get(x, y, d);
                            if f1.is_zero() {
                                continue;
                            }
                            let f2 = sc.get(d, z, e);
                            if !f2.is_zero() {
                                acc += &(f1 * f2);
                            }
                        }
                    }
                    if !acc.is_zero() {
                        out.push((a, b, c, e));
                    }
                }
            }
        }
    }
    out
}

/// True iff the Jacobi contraction vanishes identically.
pub fn jacobi_check(sc: &StructureConstants) -> bool {
    jacobi_violations(sc).is_empty()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub a: String,
    pub b: String,
    pub c: String,
    pub left: ExactScalar,
    pub right: ExactScalar,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "f[{},{}]^{}: {} vs {}", self.a, self.b, self.c, self.left, self.right)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Comparison {
    Match,
    Mismatch(Vec<Mismatch>),
}

impl Comparison {
    pub fn is_match(&self) -> bool {
        matches!(self, Comparison::Match)
    }

    pub fn mismatches(&self) -> &[Mismatch] {
        match self {
            Comparison::Match => &[],
            Comparison::Mismatch(m) => m,
        }
    }
}

/// Compares `f_A` with `f_B` under `correspondence` (label of A -> label of B).
/// Mismatches are reported for `a <= b` only, since both tables are antisymmetric.
pub fn compare(
    lhs: &StructureConstants,
    rhs: &StructureConstants,
    correspondence: &[(&str, &str)],
) -> Result<Comparison, LieError> {
    if lhs.dim() != rhs.dim() || correspondence.len() != lhs.dim() {
        return Err(LieError::LabelCount(lhs.dim(), rhs.dim()));
    }
    let mut map = vec![usize::MAX; lhs.dim()];
    for (l, r) in correspondence {
        let li = lhs.index_of(l).ok_or_else(|| LieError::UnknownLabel(l.to_string()))?;
        let ri = rhs.index_of(r).ok_or_else(|| LieError::UnknownLabel(r.to_string()))?;
        map[li] = ri;
    }
    if map.contains(&usize::MAX) {
        return Err(LieError::LabelCount(lhs.dim(), correspondence.len()));
    }
    let n = lhs.dim();
    let mut out = Vec::new();
    for a in 0..n {
        for b in a..n {
            for c in 0..n {
                let left = lhs.get(a, b, c);
                let right = rhs.get(map[a], map[b], map[c]);
                if left != right {
                    out.push(Mismatch {
                        a: lhs.labels[a].clone(),
                        b: lhs.labels[b].clone(),
                        c: lhs.labels[c].clone(),
                        left: left.clone(),
                        right: right.clone(),
                    });
                }
            }
        }
    }
    Ok(if out.is_empty() { Comparison::Match } else { Comparison::Mismatch(out) })
}

/// Compares two tables whose labels correspond by name.
pub fn compare_by_label(lhs: &StructureConstants, rhs: &StructureConstants) -> Result<Comparison, LieError> {
    let pairs: Vec<(&str, &str)> = lhs.labels.iter().map(|l| (l.as_str(), l.as_str())).collect();
    compare(lhs, rhs, &pairs)
}

/// Copy of `sc` with two labels' roles exchanged (rows, columns and outputs).
pub fn swap_labels(sc: &StructureConstants, x: &str, y: &str) -> Option<StructureConstants> {
    let (i, j) = (sc.index_of(x)?, sc.index_of(y)?);
    let p = |k: usize| if k == i { j } else if k == j { i } else { k };
    let n = sc.dim();
    let mut out = StructureConstants::zero(sc.labels.clone());
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                out.set(p(a), p(b), p(c), sc.get(a, b, c).clone());
            }
        }
    }
    Some(out)
}

/// Reference bracket tables built from the epsilon/delta formulas, used as an
/// oracle independent of any representation.
pub mod reference {
    use super::StructureConstants;
    use crate::scalar::ExactScalar;

    fn levi_civita(i: usize, j: usize, k: usize) -> i64 {
        match (i, j, k) {
            (0, 1, 2) | (1, 2, 0) | (2, 0, 1) => 1,
            (0, 2, 1) | (2, 1, 0) | (1, 0, 2) => -1,
            _ => 0,
        }
    }

    fn table(labels: &[&str]) -> StructureConstants {
        StructureConstants::zero(labels.iter().map(|s| s.to_string()).collect())
    }

    fn ix(sc: &StructureConstants, l: &str) -> usize {
        sc.index_of(l).expect("reference label")
    }

    /// `[A_i, B_j] = coeff * eps_ijk C_k` for all i, j.
    fn eps_rule(sc: &mut StructureConstants, a: &str, b: &str, c: &str, coeff: &ExactScalar) {
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    let e = levi_civita(i, j, k);
                    if e == 0 {
                        continue;
                    }
                    let (ai, bj, ck) = (
                        ix(sc, &format!("{a}{}", i + 1)),
                        ix(sc, &format!("{b}{}", j + 1)),
                        ix(sc, &format!("{c}{}", k + 1)),
                    );
                    sc.set_bracket(ai, bj, ck, coeff * &ExactScalar::int(e));
                }
            }
        }
    }

    fn i() -> ExactScalar {
        ExactScalar::i()
    }

    /// `[J2,K1] = -iK3`, `[J2,K3] = iK1`, `[K1,K3] = iJ2`.
    pub fn sp2() -> StructureConstants {
        let mut sc = table(&["J2", "K1", "K3"]);
        sc.set_bracket(0, 1, 2, -i());
        sc.set_bracket(0, 2, 1, i());
        sc.set_bracket(1, 2, 0, i());
        sc
    }

    /// The ten-generator O(3,2) bracket table on
    /// `J1 J2 J3 S0 K1 K2 K3 Q1 Q2 Q3`.
    pub fn ten_generator() -> StructureConstants {
        let mut sc = table(&crate::catalog::TEN_LABELS);
        let mi = -i();
        eps_rule(&mut sc, "J", "J", "J", &i());
        eps_rule(&mut sc, "J", "K", "K", &i());
        eps_rule(&mut sc, "J", "Q", "Q", &i());
        eps_rule(&mut sc, "K", "K", "J", &mi);
        eps_rule(&mut sc, "Q", "Q", "J", &mi);
        let s0 = ix(&sc, "S0");
        for n in 1..=3 {
            let (k, q) = (ix(&sc, &format!("K{n}")), ix(&sc, &format!("Q{n}")));
            sc.set_bracket(k, q, s0, mi.clone());
            sc.set_bracket(k, s0, q, mi.clone());
            sc.set_bracket(q, s0, k, i());
        }
        sc
    }

    /// Rotation, boost and translation brackets of the Poincare algebra on
    /// `J1 J2 J3 K1 K2 K3 P1 P2 P3 P0`. The boost-translation part is
    /// `[K_i, P_j] = -i delta_ij P0`, `[K_i, P0] = -i P_i`.
    pub fn poincare() -> StructureConstants {
        let mut sc = table(&["J1", "J2", "J3", "K1", "K2", "K3", "P1", "P2", "P3", "P0"]);
        let mi = -i();
        eps_rule(&mut sc, "J", "J", "J", &i());
        eps_rule(&mut sc, "J", "P", "P", &i());
        eps_rule(&mut sc, "K", "K", "J", &mi);
        eps_rule(&mut sc, "J", "K", "K", &i());
        let p0 = ix(&sc, "P0");
        for n in 1..=3 {
            let (k, p) = (ix(&sc, &format!("K{n}")), ix(&sc, &format!("P{n}")));
            sc.set_bracket(k, p, p0, mi.clone());
            sc.set_bracket(k, p0, p, mi.clone());
        }
        sc
    }
}

/// Convenience: the closed table of a family, or `None`.
pub fn table_of(family: &GeneratorFamily) -> Option<StructureConstants> {
    structure_constants(family).table
}

/// `X = sum_a c_a X_a` evaluated for a family.
pub fn combination(family: &GeneratorFamily, coeffs: &[ExactScalar]) -> Element {
    combine(family.elements(), coeffs)
}

/// The kind-specific zero of a family.
pub fn zero_like(family: &GeneratorFamily) -> Option<Element> {
    Some(match family.kind()? {
        ElementKind::Operator => Element::Operator(OperatorExpr::zero(family.dim()?)),
        ElementKind::Matrix => Element::Matrix(ExactMatrix::zeros(family.dim()?)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{self, Variant};
    use crate::opalg::parse_expr;

    #[test]
    fn expand_scaled_basis_element() {
        let f = catalog::sp2_pauli();
        let x = f.get("K3").unwrap().scale(&-ExactScalar::i());
        let e = expand_in_basis(&x, &f).unwrap();
        assert_eq!(
            e.coeffs().unwrap(),
            &[ExactScalar::zero(), ExactScalar::zero(), -ExactScalar::i()]
        );
    }

    #[test]
    fn identity_not_in_traceless_span() {
        let f = catalog::sp2_pauli();
        let id = Element::Matrix(ExactMatrix::identity(2));
        match expand_in_basis(&id, &f).unwrap() {
            Expansion::NotInSpan { residual, .. } => assert!(!residual.is_zero()),
            other => panic!("expected NotInSpan, got {other:?}"),
        }
    }

    #[test]
    fn shape_mismatch() {
        let f = catalog::sp2_pauli();
        let x = Element::Matrix(ExactMatrix::identity(3));
        assert_eq!(expand_in_basis(&x, &f).unwrap_err(), LieError::ShapeMismatch);
    }

    #[test]
    fn number_and_creation_not_closed_in_quadratic_basis() {
        let f = GeneratorFamily::new(
            "n-ad",
            vec!["N".into(), "Ad".into()],
            vec![
                Element::Operator(parse_expr("ad1*a1", 1).unwrap()),
                Element::Operator(parse_expr("ad1*ad1", 1).unwrap()),
            ],
            "",
            Variant::Canonical,
        )
        .unwrap();
        // [N, ad^2] = 2 ad^2 closes; swapping in ad alone does not close under a quadratic basis
        assert!(structure_constants(&f).closed);
        let g = GeneratorFamily::new(
            "n-ad1",
            vec!["N".into(), "Ad".into(), "Q".into()],
            vec![
                Element::Operator(parse_expr("ad1*a1", 1).unwrap()),
                Element::Operator(parse_expr("ad1", 1).unwrap()),
                Element::Operator(parse_expr("a1*a1", 1).unwrap()),
            ],
            "",
            Variant::Canonical,
        )
        .unwrap();
        let r = structure_constants(&g);
        assert!(!r.closed);
        assert!(r.failures.iter().any(|f| f.a == "Ad" && f.b == "Q"));
    }

    #[test]
    fn dependent_basis_is_reported() {
        let r = structure_constants(&catalog::sp4_matrices_table_printed());
        assert!(!r.closed);
        assert_eq!(r.dependent, vec!["Q3".to_string()]);
    }

    #[test]
    fn pauli_table_matches_reference() {
        let t = table_of(&catalog::sp2_pauli()).unwrap();
        assert_eq!(t, reference::sp2());
        assert_eq!(t.nonzero_triplets().len(), 6);
        assert!(t.is_antisymmetric());
    }

    #[test]
    fn render_lines() {
        let t = reference::ten_generator();
        let text = t.render_text();
        assert!(text.contains("[K1, Q1] = -i S0\n"), "{text}");
        assert!(text.contains("[J1, S0] = 0\n"));
        assert_eq!(text.lines().count(), 45);
        let labels: Vec<String> = vec!["A".into(), "B".into()];
        let s = render_combination(
            &labels,
            &[(0, ExactScalar::ratio(1, 2)), (1, -ExactScalar::i())],
        );
        assert_eq!(s, "1/2 A - i B");
    }

    #[test]
    fn reference_tables_satisfy_jacobi() {
        for t in [reference::sp2(), reference::ten_generator(), reference::poincare()] {
            assert!(t.is_antisymmetric());
            assert!(jacobi_check(&t));
        }
    }

    #[test]
    fn corrupted_table_fails_jacobi() {
        let mut t = reference::ten_generator();
        // flip the sign of [J1, J2] = i J3 only
        t.set_bracket(0, 1, 2, -ExactScalar::i());
        assert!(!jacobi_check(&t));
    }

    #[test]
    fn abelian_translations() {
        let t = table_of(&catalog::translation_matrices()).unwrap();
        assert!(t.is_abelian());
        assert!(jacobi_check(&t));
    }

    #[test]
    fn swap_detects_s0_q3_ambiguity() {
        let t = reference::ten_generator();
        let swapped = swap_labels(&t, "S0", "Q3").unwrap();
        assert!(!compare_by_label(&t, &swapped).unwrap().is_match());
        // swapping roles of the correspondence undoes it
        let corr: Vec<(&str, &str)> = catalog::TEN_LABELS
            .iter()
            .map(|l| match *l {
                "S0" => ("S0", "Q3"),
                "Q3" => ("Q3", "S0"),
                o => (o, o),
            })
            .collect();
        assert!(compare(&t, &swapped, &corr).unwrap().is_match());
    }

    #[test]
    fn compare_errors() {
        let a = reference::sp2();
        let b = reference::ten_generator();
        assert!(compare_by_label(&a, &b).is_err());
        assert!(matches!(
            compare(&a, &a, &[("J2", "J2"), ("K1", "K1"), ("X", "K3")]),
            Err(LieError::UnknownLabel(_))
        ));
    }

    #[test]
    fn json_has_schema_and_triplets() {
        let v = reference::sp2().to_json("sp2-pauli");
        assert_eq!(v["schema"], 1);
        assert_eq!(v["f"].as_array().unwrap().len(), 6);
        assert_eq!(v["f"][0]["coeff"], "-i");
    }
}
