//! Exact algebra of multi-mode bosonic ladder operators.
//!
//! Every [`OperatorExpr`] is kept in normal order (all creation operators to
//! the left of all annihilation operators) with coefficients in
//! [`ExactScalar`]. Two expressions are equal iff their canonical forms are
//! structurally equal.

mod order;
mod parse;

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use thiserror::Error;

use crate::scalar::ExactScalar;

pub use order::normal_order;
pub use parse::parse_expr;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OpAlgError {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("mode index {mode} at position {pos} is out of range 1..={modes}")]
    ModeOutOfRange { mode: usize, modes: usize, pos: usize },
    #[error("mode count mismatch: {left} vs {right}")]
    ModeMismatch { left: usize, right: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LadderKind {
    Creation,
    Annihilation,
}

/// `a_mode` or `a†_mode`; modes are 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LadderSymbol {
    pub mode: usize,
    pub kind: LadderKind,
}

impl LadderSymbol {
    pub fn create(mode: usize) -> Self {
        assert!(mode >= 1, "modes are 1-based");
        LadderSymbol { mode, kind: LadderKind::Creation }
    }

    pub fn annihilate(mode: usize) -> Self {
        assert!(mode >= 1, "modes are 1-based");
        LadderSymbol { mode, kind: LadderKind::Annihilation }
    }

    pub fn dagger(self) -> Self {
        let kind = match self.kind {
            LadderKind::Creation => LadderKind::Annihilation,
            LadderKind::Annihilation => LadderKind::Creation,
        };
        LadderSymbol { kind, ..self }
    }
}

impl fmt::Display for LadderSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            LadderKind::Creation => write!(f, "ad{}", self.mode),
            LadderKind::Annihilation => write!(f, "a{}", self.mode),
        }
    }
}

/// Exponent pattern `prod (a†_i)^cdeg[i] * prod (a_j)^adeg[j]`.
///
/// The ordering puts higher total degree first, then larger creation
/// exponents, then larger annihilation exponents; this is the rendering order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    cdeg: Vec<u32>,
    adeg: Vec<u32>,
}

impl Monomial {
    pub fn identity(modes: usize) -> Self {
        Monomial { cdeg: vec![0; modes], adeg: vec![0; modes] }
    }

    pub fn new(cdeg: Vec<u32>, adeg: Vec<u32>) -> Self {
        assert_eq!(cdeg.len(), adeg.len(), "creation/annihilation exponent lengths differ");
        Monomial { cdeg, adeg }
    }

    pub fn cdeg(&self) -> &[u32] {
        &self.cdeg
    }

    pub fn adeg(&self) -> &[u32] {
        &self.adeg
    }

    pub fn modes(&self) -> usize {
        self.cdeg.len()
    }

    pub fn degree(&self) -> u32 {
        self.cdeg.iter().chain(&self.adeg).sum()
    }

    pub fn is_identity(&self) -> bool {
        self.degree() == 0
    }

    /// Symbols in canonical order: creations by ascending mode, then
    /// annihilations by ascending mode.
    pub fn symbols(&self) -> Vec<LadderSymbol> {
        let mut out = Vec::new();
        for (m, &c) in self.cdeg.iter().enumerate() {
            out.extend(std::iter::repeat_n(LadderSymbol::create(m + 1), c as usize));
        }
        for (m, &a) in self.adeg.iter().enumerate() {
            out.extend(std::iter::repeat_n(LadderSymbol::annihilate(m + 1), a as usize));
        }
        out
    }

    /// Net change of the total quantum number.
    pub fn quanta_shift(&self) -> i64 {
        self.cdeg.iter().map(|&c| c as i64).sum::<i64>()
            - self.adeg.iter().map(|&a| a as i64).sum::<i64>()
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .degree()
            .cmp(&self.degree())
            .then_with(|| other.cdeg.cmp(&self.cdeg))
            .then_with(|| other.adeg.cmp(&self.adeg))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return write!(f, "1");
        }
        let mut parts = Vec::new();
        let mut push = |name: &str, m: usize, e: u32| match e {
            0 => {}
            1 => parts.push(format!("{name}{}", m + 1)),
            _ => parts.push(format!("{name}{}^{e}", m + 1)),
        };
        for (m, &c) in self.cdeg.iter().enumerate() {
            push("ad", m, c);
        }
        for (m, &a) in self.adeg.iter().enumerate() {
            push("a", m, a);
        }
        write!(f, "{}", parts.join("*"))
    }
}

/// One term `coeff * monomial` of a canonical expression.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalMonomial {
    pub coeff: ExactScalar,
    pub monomial: Monomial,
}

/// Normal-ordered polynomial in ladder operators over a fixed number of modes.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OperatorExpr {
    modes: usize,
    terms: BTreeMap<Monomial, ExactScalar>,
}

fn binom(n: u32, k: u32) -> i64 {
    let mut acc: i64 = 1;
    for j in 0..k {
        acc = acc * (n - j) as i64 / (j + 1) as i64;
    }
    acc
}

fn factorial(k: u32) -> i64 {
    (1..=k as i64).product()
}

/// `a^m (a†)^n = sum_k C(m,k) C(n,k) k! (a†)^(n-k) a^(m-k)`, as `(k, weight)`.
fn wick_weights(m: u32, n: u32) -> Vec<(u32, i64)> {
    (0..=m.min(n))
        .map(|k| (k, binom(m, k) * binom(n, k) * factorial(k)))
        .collect()
}

impl OperatorExpr {
    pub fn zero(modes: usize) -> Self {
        OperatorExpr { modes, terms: BTreeMap::new() }
    }

    pub fn constant(modes: usize, c: ExactScalar) -> Self {
        let mut e = Self::zero(modes);
        e.add_term(Monomial::identity(modes), c);
        e
    }

    pub fn one(modes: usize) -> Self {
        Self::constant(modes, ExactScalar::one())
    }

    pub fn ladder(modes: usize, sym: LadderSymbol) -> Self {
        assert!(sym.mode >= 1 && sym.mode <= modes, "mode {} out of range", sym.mode);
        let mut mono = Monomial::identity(modes);
        match sym.kind {
            LadderKind::Creation => mono.cdeg[sym.mode - 1] = 1,
            LadderKind::Annihilation => mono.adeg[sym.mode - 1] = 1,
        }
        let mut e = Self::zero(modes);
        e.add_term(mono, ExactScalar::one());
        e
    }

    /// `a_mode`.
    pub fn a(modes: usize, mode: usize) -> Self {
        Self::ladder(modes, LadderSymbol::annihilate(mode))
    }

    /// `a†_mode`.
    pub fn ad(modes: usize, mode: usize) -> Self {
        Self::ladder(modes, LadderSymbol::create(mode))
    }

    /// `x = (a + a†)/sqrt2`.
    pub fn position(modes: usize, mode: usize) -> Self {
        let s = ExactScalar::sqrt2().inv().expect("sqrt2 is invertible");
        (&Self::a(modes, mode) + &Self::ad(modes, mode)).scale(&s)
    }

    /// `p = i(a† - a)/sqrt2`.
    pub fn momentum(modes: usize, mode: usize) -> Self {
        let s = &ExactScalar::i() * &ExactScalar::sqrt2().inv().expect("sqrt2 is invertible");
        (&Self::ad(modes, mode) - &Self::a(modes, mode)).scale(&s)
    }

    pub fn from_terms(modes: usize, terms: impl IntoIterator<Item = NormalMonomial>) -> Self {
        let mut e = Self::zero(modes);
        for t in terms {
            assert_eq!(t.monomial.modes(), modes, "monomial mode count mismatch");
            e.add_term(t.monomial, t.coeff);
        }
        e
    }

    pub(crate) fn add_term(&mut self, mono: Monomial, c: ExactScalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn modes(&self) -> usize {
        self.modes
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &ExactScalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, mono: &Monomial) -> ExactScalar {
        self.terms.get(mono).cloned().unwrap_or_else(ExactScalar::zero)
    }

    /// Coefficient of the identity monomial.
    pub fn constant_term(&self) -> ExactScalar {
        self.coeff(&Monomial::identity(self.modes))
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    /// Returns `Some(c)` when the expression is the constant `c` (including 0).
    pub fn as_constant(&self) -> Option<ExactScalar> {
        match self.terms.len() {
            0 => Some(ExactScalar::zero()),
            1 => self
                .terms
                .iter()
                .next()
                .filter(|(m, _)| m.is_identity())
                .map(|(_, c)| c.clone()),
            _ => None,
        }
    }

    pub fn scale(&self, c: &ExactScalar) -> Self {
        if c.is_zero() {
            return Self::zero(self.modes);
        }
        OperatorExpr {
            modes: self.modes,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    /// Same expression viewed over `modes >= self.modes()` modes.
    pub fn embed(&self, modes: usize) -> Self {
        assert!(modes >= self.modes, "cannot embed into fewer modes");
        let mut e = Self::zero(modes);
        for (m, c) in &self.terms {
            let mut cdeg = m.cdeg.clone();
            let mut adeg = m.adeg.clone();
            cdeg.resize(modes, 0);
            adeg.resize(modes, 0);
            e.add_term(Monomial { cdeg, adeg }, c.clone());
        }
        e
    }

    fn check_modes(&self, other: &Self) -> Result<(), OpAlgError> {
        if self.modes != other.modes {
            return Err(OpAlgError::ModeMismatch { left: self.modes, right: other.modes });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, OpAlgError> {
        self.check_modes(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, OpAlgError> {
        self.checked_add(&-other)
    }

    /// Product, normal ordered with the per-mode closed form of the
    /// contraction sum. Agrees with [`normal_order`] applied to the
    /// concatenated words.
    pub fn checked_mul(&self, other: &Self) -> Result<Self, OpAlgError> {
        self.check_modes(other)?;
        let mut out = Self::zero(self.modes);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let c = c1 * c2;
                multiply_monomials(m1, m2, &c, &mut out);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one(self.modes);
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Hermitian adjoint: conjugate coefficients and swap creation with
    /// annihilation exponents. The reversed word of a normal-ordered monomial
    /// is already normal ordered, so no reordering is needed.
    pub fn adjoint(&self) -> Self {
        let mut e = Self::zero(self.modes);
        for (m, c) in &self.terms {
            e.add_term(Monomial { cdeg: m.adeg.clone(), adeg: m.cdeg.clone() }, c.conj());
        }
        e
    }

    pub fn is_self_adjoint(&self) -> bool {
        self.adjoint() == *self
    }
}

fn multiply_monomials(m1: &Monomial, m2: &Monomial, c: &ExactScalar, out: &mut OperatorExpr) {
    let modes = m1.modes();
    // One list of (contraction count, weight) per mode; take the cartesian product.
    let per_mode: Vec<Vec<(u32, i64)>> = (0..modes)
        .map(|i| wick_weights(m1.adeg[i], m2.cdeg[i]))
        .collect();
    let mut idx = vec![0usize; modes];
    loop {
        let mut weight: i64 = 1;
        let mut cdeg = Vec::with_capacity(modes);
        let mut adeg = Vec::with_capacity(modes);
        for i in 0..modes {
            let (k, w) = per_mode[i][idx[i]];
            weight *= w;
            cdeg.push(m1.cdeg[i] + m2.cdeg[i] - k);
            adeg.push(m1.adeg[i] - k + m2.adeg[i]);
        }
        out.add_term(Monomial { cdeg, adeg }, c * &ExactScalar::int(weight));

        // odometer increment
        let mut i = 0;
        loop {
            if i == modes {
                return;
            }
            idx[i] += 1;
            if idx[i] < per_mode[i].len() {
                break;
            }
            idx[i] = 0;
            i += 1;
        }
    }
}

/// `[A, B] = AB - BA`, normal ordered.
pub fn commutator(a: &OperatorExpr, b: &OperatorExpr) -> Result<OperatorExpr, OpAlgError> {
    a.checked_mul(b)?.checked_sub(&b.checked_mul(a)?)
}

/// Adjoint of an expression; see [`OperatorExpr::adjoint`].
pub fn adjoint(a: &OperatorExpr) -> OperatorExpr {
    a.adjoint()
}

impl<'a> Add<&'a OperatorExpr> for &'a OperatorExpr {
    type Output = OperatorExpr;
    /// Panics on mode-count mismatch.
    fn add(self, rhs: &OperatorExpr) -> OperatorExpr {
        self.checked_add(rhs).expect("mode count mismatch")
    }
}

impl<'a> Sub<&'a OperatorExpr> for &'a OperatorExpr {
    type Output = OperatorExpr;
    /// Panics on mode-count mismatch.
    fn sub(self, rhs: &OperatorExpr) -> OperatorExpr {
        self.checked_sub(rhs).expect("mode count mismatch")
    }
}

impl<'a> Mul<&'a OperatorExpr> for &'a OperatorExpr {
    type Output = OperatorExpr;
    /// Panics on mode-count mismatch.
    fn mul(self, rhs: &OperatorExpr) -> OperatorExpr {
        self.checked_mul(rhs).expect("mode count mismatch")
    }
}

impl Neg for &OperatorExpr {
    type Output = OperatorExpr;
    fn neg(self) -> OperatorExpr {
        self.scale(&ExactScalar::int(-1))
    }
}

/// Sign of a single-part scalar; `None` for compound or zero scalars.
fn simple_sign(c: &ExactScalar) -> Option<bool> {
    if c.is_compound() || c.is_zero() {
        return None;
    }
    Some(c.to_string().starts_with('-'))
}

/// Canonical rendering, e.g. `ad1^2*a1^2 + 4*ad1*a1 + 2`. Term order is the
/// [`Monomial`] order, so the text is stable and parses back to the same value.
impl fmt::Display for OperatorExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (mono, c)) in self.terms.iter().enumerate() {
            let (neg, mag) = match simple_sign(c) {
                Some(true) => (true, -c),
                _ => (false, c.clone()),
            };
            let sep = match (n == 0, neg) {
                (true, true) => "-",
                (true, false) => "",
                (false, true) => " - ",
                (false, false) => " + ",
            };
            let coeff = if mag.is_compound() { format!("({mag})") } else { mag.to_string() };
            let body = if mono.is_identity() {
                coeff
            } else if mag.is_one() {
                mono.to_string()
            } else {
                format!("{coeff}*{mono}")
            };
            write!(f, "{sep}{body}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, modes: usize) -> OperatorExpr {
        parse_expr(s, modes).unwrap()
    }

    #[test]
    fn ccr_single_mode() {
        let c = commutator(&OperatorExpr::a(1, 1), &OperatorExpr::ad(1, 1)).unwrap();
        assert_eq!(c, OperatorExpr::one(1));
    }

    #[test]
    fn x_p_is_i() {
        let x = OperatorExpr::position(1, 1);
        let pm = OperatorExpr::momentum(1, 1);
        assert_eq!(
            commutator(&x, &pm).unwrap(),
            OperatorExpr::constant(1, ExactScalar::i())
        );
    }

    #[test]
    fn ccr_two_modes_is_kronecker_delta() {
        for i in 1..=2 {
            for j in 1..=2 {
                let c = commutator(&OperatorExpr::a(2, i), &OperatorExpr::ad(2, j)).unwrap();
                let expected = if i == j { OperatorExpr::one(2) } else { OperatorExpr::zero(2) };
                assert_eq!(c, expected, "[a{i}, ad{j}]");
            }
        }
    }

    #[test]
    fn product_example_wick() {
        // a a a† a† = a†² a² + 4 a†a + 2
        let e = p("a1*a1*ad1*ad1", 1);
        assert_eq!(e.to_string(), "ad1^2*a1^2 + 4*ad1*a1 + 2");
    }

    #[test]
    fn commutator_of_self_is_zero() {
        let e = p("ad1*a2 + 1/2*i*a1^2", 2);
        assert!(commutator(&e, &e).unwrap().is_zero());
    }

    #[test]
    fn mode_mismatch_is_reported() {
        let err = commutator(&OperatorExpr::a(1, 1), &OperatorExpr::a(2, 1)).unwrap_err();
        assert_eq!(err, OpAlgError::ModeMismatch { left: 1, right: 2 });
    }

    #[test]
    fn adjoint_examples() {
        assert_eq!(OperatorExpr::a(1, 1).adjoint(), OperatorExpr::ad(1, 1));
        assert_eq!(p("a1*a2", 2).adjoint(), p("ad2*ad1", 2));
        // J2 = (a†1 a2 - a†2 a1)/(2i) is self-adjoint
        let j2 = p("(ad1*a2 - ad2*a1)/(2*i)", 2);
        assert!(j2.is_self_adjoint());
        assert!(!p("i*ad1*a1", 1).is_self_adjoint());
    }

    #[test]
    fn render_zero_and_constants() {
        assert_eq!(OperatorExpr::zero(2).to_string(), "0");
        assert_eq!(p("-i", 1).to_string(), "-i");
        assert_eq!(p("(1/2)*(a1*ad1 + ad1*a1)", 1).to_string(), "ad1*a1 + 1/2");
        assert_eq!(p("ad1*a1 - (1 + i)", 1).to_string(), "ad1*a1 + (-1 - i)");
    }

    #[test]
    fn term_order_is_degree_then_exponents() {
        let e = p("1 + a2 + ad1 + ad2*ad2 + ad1*a2 + ad1*ad1", 2);
        assert_eq!(e.to_string(), "ad1^2 + ad1*a2 + ad2^2 + ad1 + a2 + 1");
    }

    #[test]
    fn embed_keeps_value() {
        let e = p("ad1*a1 + 1/2", 1).embed(2);
        assert_eq!(e, p("ad1*a1 + 1/2", 2));
    }
}
