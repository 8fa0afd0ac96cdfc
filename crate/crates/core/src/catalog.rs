//! Generator families: ladder-operator forms and their exact matrix
//! representations.
//!
//! Where a printed coefficient convention does not close into the advertised
//! algebra, both forms are kept: the printed one flagged
//! [`Variant::AsPrinted`] and the repaired one flagged [`Variant::Canonical`],
//! with [`GeneratorFamily::notes`] describing the difference.

use std::collections::HashSet;
use std::fmt;

use thiserror::Error;

use crate::matrix::ExactMatrix;
use crate::opalg::{commutator, parse_expr, OpAlgError, OperatorExpr};
use crate::scalar::ExactScalar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("duplicate label '{0}'")]
    DuplicateLabel(String),
    #[error("labels and elements differ in length ({labels} vs {elements})")]
    LengthMismatch { labels: usize, elements: usize },
    #[error("elements must share one representation kind and dimension")]
    MixedElements,
    #[error("unknown family '{0}'")]
    UnknownFamily(String),
    #[error(transparent)]
    Parse(#[from] OpAlgError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ElementKind {
    Operator,
    Matrix,
}

/// A generator in symbolic or matrix form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Element {
    Operator(OperatorExpr),
    Matrix(ExactMatrix),
}

impl Element {
    pub fn kind(&self) -> ElementKind {
        match self {
            Element::Operator(_) => ElementKind::Operator,
            Element::Matrix(_) => ElementKind::Matrix,
        }
    }

    /// Mode count for operators, matrix size for matrices.
    pub fn dim(&self) -> usize {
        match self {
            Element::Operator(e) => e.modes(),
            Element::Matrix(m) => m.n(),
        }
    }

    pub fn same_shape(&self, other: &Element) -> bool {
        self.kind() == other.kind() && self.dim() == other.dim()
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Element::Operator(e) => e.is_zero(),
            Element::Matrix(m) => m.is_zero(),
        }
    }

    /// `None` when the shapes differ.
    pub fn commutator(&self, other: &Element) -> Option<Element> {
        match (self, other) {
            (Element::Operator(a), Element::Operator(b)) => {
                commutator(a, b).ok().map(Element::Operator)
            }
            (Element::Matrix(a), Element::Matrix(b)) if a.n() == b.n() => {
                Some(Element::Matrix(a.commutator(b)))
            }
            _ => None,
        }
    }

    pub fn scale(&self, c: &ExactScalar) -> Element {
        match self {
            Element::Operator(e) => Element::Operator(e.scale(c)),
            Element::Matrix(m) => Element::Matrix(m.scale(c)),
        }
    }

    /// `None` when the shapes differ.
    pub fn add(&self, other: &Element) -> Option<Element> {
        match (self, other) {
            (Element::Operator(a), Element::Operator(b)) => a.checked_add(b).ok().map(Element::Operator),
            (Element::Matrix(a), Element::Matrix(b)) if a.n() == b.n() => Some(Element::Matrix(a + b)),
            _ => None,
        }
    }

    pub fn adjoint(&self) -> Element {
        match self {
            Element::Operator(e) => Element::Operator(e.adjoint()),
            Element::Matrix(m) => Element::Matrix(m.adjoint()),
        }
    }

    pub fn as_operator(&self) -> Option<&OperatorExpr> {
        match self {
            Element::Operator(e) => Some(e),
            Element::Matrix(_) => None,
        }
    }

    pub fn as_matrix(&self) -> Option<&ExactMatrix> {
        match self {
            Element::Matrix(m) => Some(m),
            Element::Operator(_) => None,
        }
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Operator(e) => write!(f, "{e}"),
            Element::Matrix(m) => write!(f, "{m}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variant {
    /// Closes into the advertised algebra; checks on it are hard failures.
    Canonical,
    /// Coefficients exactly as printed; failing checks are warnings.
    AsPrinted,
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Variant::Canonical => write!(f, "canonical"),
            Variant::AsPrinted => write!(f, "as-printed"),
        }
    }
}

/// Named ordered basis of generators sharing one representation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorFamily {
    name: String,
    labels: Vec<String>,
    elements: Vec<Element>,
    metric: Option<ExactMatrix>,
    provenance: String,
    variant: Variant,
    notes: Vec<String>,
}

impl GeneratorFamily {
    pub fn new(
        name: impl Into<String>,
        labels: Vec<String>,
        elements: Vec<Element>,
        provenance: impl Into<String>,
        variant: Variant,
    ) -> Result<Self, CatalogError> {
        if labels.len() != elements.len() {
            return Err(CatalogError::LengthMismatch { labels: labels.len(), elements: elements.len() });
        }
        let mut seen = HashSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(CatalogError::DuplicateLabel(l.clone()));
            }
        }
        if let Some(first) = elements.first() {
            if elements.iter().any(|e| !e.same_shape(first)) {
                return Err(CatalogError::MixedElements);
            }
        }
        Ok(GeneratorFamily {
            name: name.into(),
            labels,
            elements,
            metric: None,
            provenance: provenance.into(),
            variant,
            notes: Vec::new(),
        })
    }

    pub fn with_metric(mut self, metric: ExactMatrix) -> Self {
        self.metric = Some(metric);
        self
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn metric(&self) -> Option<&ExactMatrix> {
        self.metric.as_ref()
    }

    pub fn provenance(&self) -> &str {
        &self.provenance
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn notes(&self) -> &[String] {
        &self.notes
    }

    pub fn kind(&self) -> Option<ElementKind> {
        self.elements.first().map(Element::kind)
    }

    pub fn dim(&self) -> Option<usize> {
        self.elements.first().map(Element::dim)
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn get(&self, label: &str) -> Option<&Element> {
        self.index_of(label).map(|i| &self.elements[i])
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &Element)> {
        self.labels.iter().map(String::as_str).zip(&self.elements)
    }

    /// Sub-family on the given labels, in the given order.
    pub fn select(&self, labels: &[&str]) -> Option<GeneratorFamily> {
        let mut els = Vec::new();
        for l in labels {
            els.push(self.get(l)?.clone());
        }
        let mut f = GeneratorFamily::new(
            format!("{}[{}]", self.name, labels.join(",")),
            labels.iter().map(|s| s.to_string()).collect(),
            els,
            self.provenance.clone(),
            self.variant,
        )
        .ok()?;
        f.metric = self.metric.clone();
        Some(f)
    }

    /// Applies `f` to every element (e.g. restricting matrices to a block).
    pub fn map_elements(&self, name: impl Into<String>, f: impl Fn(&Element) -> Element) -> Self {
        GeneratorFamily {
            name: name.into(),
            labels: self.labels.clone(),
            elements: self.elements.iter().map(f).collect(),
            metric: None,
            provenance: self.provenance.clone(),
            variant: self.variant,
            notes: self.notes.clone(),
        }
    }
}

fn labels(ls: &[&str]) -> Vec<String> {
    ls.iter().map(|s| s.to_string()).collect()
}

fn ops(modes: usize, texts: &[&str]) -> Vec<Element> {
    texts
        .iter()
        .map(|t| Element::Operator(parse_expr(t, modes).expect("catalog expression parses")))
        .collect()
}

fn s(n: i64) -> ExactScalar {
    ExactScalar::int(n)
}

fn i_times(n: i64, d: i64) -> ExactScalar {
    &ExactScalar::i() * &ExactScalar::ratio(n, d)
}

pub fn pauli() -> [ExactMatrix; 3] {
    let i = ExactScalar::i();
    [
        ExactMatrix::from_ints(&[&[0, 1], &[1, 0]]),
        ExactMatrix::from_entries(2, &[(1, 2, -&i), (2, 1, i.clone())]),
        ExactMatrix::from_ints(&[&[1, 0], &[0, -1]]),
    ]
}

/// Coefficient convention for the single-mode quadratic generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sp2Variant {
    /// `J2 = (aa† + a†a)/2`, `K1 = (a†a† + aa)/2`, `K3 = (i/2)(a†a† - aa)`.
    Text,
    /// `J2 = (aa† + a†a)/2`, `K1 = (a†a† + aa)/(2i)`, `K3 = (a†a† - aa)/2`.
    Table,
    /// Text convention with every generator halved; the only normalization
    /// that closes as `[J2,K1] = -iK3`, `[J2,K3] = iK1`, `[K1,K3] = iJ2`.
    Canonical,
}

/// Single-mode Sp(2) generators `{J2, K1, K3}`.
pub fn sp2_oscillator(variant: Sp2Variant) -> GeneratorFamily {
    let ls = labels(&["J2", "K1", "K3"]);
    let prov = "single-mode quadratic forms of a, a†";
    let (name, texts, flag) = match variant {
        Sp2Variant::Text => (
            "sp2-oscillator-text",
            ["(a1*ad1 + ad1*a1)/2", "(ad1*ad1 + a1*a1)/2", "(i/2)*(ad1*ad1 - a1*a1)"],
            Variant::AsPrinted,
        ),
        Sp2Variant::Table => (
            "sp2-oscillator-table",
            ["(a1*ad1 + ad1*a1)/2", "(ad1*ad1 + a1*a1)/(2*i)", "(ad1*ad1 - a1*a1)/2"],
            Variant::AsPrinted,
        ),
        Sp2Variant::Canonical => (
            "sp2-oscillator",
            ["(a1*ad1 + ad1*a1)/4", "(ad1*ad1 + a1*a1)/4", "(i/4)*(ad1*ad1 - a1*a1)"],
            Variant::Canonical,
        ),
    };
    let fam = GeneratorFamily::new(name, ls, ops(1, &texts), prov, flag).expect("valid family");
    match variant {
        Sp2Variant::Canonical => fam.with_note("all three generators are half of the printed text form"),
        Sp2Variant::Text => fam.with_note("ad(J2) has eigenvalues +-2 here, so the printed brackets are off by a factor"),
        Sp2Variant::Table => fam.with_note("K1 and K3 differ from the text form by the factors -i and -i"),
    }
}

/// `{sigma2/2, i sigma1/2, i sigma3/2}` on the `(x, p)` phase plane.
pub fn sp2_pauli() -> GeneratorFamily {
    let [s1, s2, s3] = pauli();
    let half = ExactScalar::ratio(1, 2);
    let ihalf = i_times(1, 2);
    GeneratorFamily::new(
        "sp2-pauli",
        labels(&["J2", "K1", "K3"]),
        vec![
            Element::Matrix(s2.scale(&half)),
            Element::Matrix(s1.scale(&ihalf)),
            Element::Matrix(s3.scale(&ihalf)),
        ],
        "two-by-two phase-space generators of the Gaussian ground state",
        Variant::Canonical,
    )
    .expect("valid family")
}

fn minkowski4(j2_lower: ExactScalar, name: &str, variant: Variant) -> GeneratorFamily {
    let i = ExactScalar::i();
    GeneratorFamily::new(
        name,
        labels(&["J2", "K1", "K3"]),
        vec![
            Element::Matrix(ExactMatrix::from_entries(4, &[(1, 3, i.clone()), (3, 1, j2_lower)])),
            Element::Matrix(ExactMatrix::from_entries(4, &[(1, 4, i.clone()), (4, 1, i.clone())])),
            Element::Matrix(ExactMatrix::from_entries(4, &[(3, 4, i.clone()), (4, 3, i.clone())])),
        ],
        "four-by-four Lorentz generators on (x, y, z, t) with null y row and column",
        variant,
    )
    .expect("valid family")
    .with_metric(ExactMatrix::diag(&[s(1), s(1), s(1), s(-1)]))
}

/// 4x4 Lorentz form on `(x, y, z, t)`; `J2` is the antisymmetric rotation
/// in the x-z plane.
pub fn sp2_minkowski4() -> GeneratorFamily {
    minkowski4(-ExactScalar::i(), "sp2-minkowski4", Variant::Canonical)
        .with_note("J2 carries -i at (3,1); the printed +i there makes J2 symmetric and breaks closure")
}

/// 4x4 form with `J2` symmetric (`+i` at both (1,3) and (3,1)), as printed.
pub fn sp2_minkowski4_as_printed() -> GeneratorFamily {
    minkowski4(ExactScalar::i(), "sp2-minkowski4-printed", Variant::AsPrinted)
}

pub const TEN_LABELS: [&str; 10] = ["J1", "J2", "J3", "S0", "K1", "K2", "K3", "Q1", "Q2", "Q3"];

const TWO_MODE_PRINTED: [&str; 10] = [
    "(ad1*a2 + ad2*a1)/2",
    "(ad1*a2 - ad2*a1)/(2*i)",
    "(ad1*a1 - ad2*a2)/2",
    "(ad1*a1 + a2*ad2)/2",
    "-(1/4)*(ad1*ad1 + a1*a1 - ad2*ad2 - a2*a2)",
    "(i/4)*(ad1*ad1 - a1*a1 + ad2*ad2 - a2*a2)",
    "(1/2)*(ad1*ad2 + a1*a2)",
    "-(i/4)*(ad1*ad1 - a1*a1 - ad2*ad2 + a2*a2)",
    "-(1/4)*(ad1*ad1 + a1*a1 + ad2*ad2 + a2*a2)",
    "(i/2)*(ad1*ad2 - a1*a2)",
];

/// Ten two-mode generators with the squeeze-like `K_i` sign-flipped, which
/// makes the brackets agree with the Sp(4) and O(3,2) matrix forms
/// (`[K_i, Q_j] = -i delta_ij S0`, `[K_i, S0] = -i Q_i`, `[Q_i, S0] = i K_i`).
pub fn two_mode_oscillator() -> GeneratorFamily {
    let mut texts = TWO_MODE_PRINTED.map(String::from);
    for t in &mut texts[4..7] {
        *t = format!("-({t})");
    }
    let refs: Vec<&str> = texts.iter().map(String::as_str).collect();
    GeneratorFamily::new(
        "two-mode-oscillator",
        labels(&TEN_LABELS),
        ops(2, &refs),
        "two-oscillator rotation-like and squeeze-like quadratic forms",
        Variant::Canonical,
    )
    .expect("valid family")
    .with_note("K1, K2, K3 are the negatives of the printed forms")
}

/// The ten two-mode generators with printed signs.
pub fn two_mode_oscillator_as_printed() -> GeneratorFamily {
    GeneratorFamily::new(
        "two-mode-oscillator-printed",
        labels(&TEN_LABELS),
        ops(2, &TWO_MODE_PRINTED),
        "two-oscillator rotation-like and squeeze-like quadratic forms",
        Variant::AsPrinted,
    )
    .expect("valid family")
    .with_note("printed signs give [K_i,Q_i] = +i S0, opposite to the bracket table")
}

/// Hermitian 4x4 array of quadratic forms coupling two oscillators. The
/// upper-right 2x2 block is [`coupling_block`].
pub fn coupled_operator_matrix() -> [[OperatorExpr; 4]; 4] {
    let t = [
        ["(a1*ad1 + ad1*a1)/2", "a1*a1", "ad1*a2", "a1*a2"],
        ["ad1*ad1", "(a1*ad1 + ad1*a1)/2", "ad1*ad2", "a1*ad2"],
        ["a1*ad2", "a1*a2", "(a2*ad2 + ad2*a2)/2", "a2*a2"],
        ["ad1*ad2", "ad1*a2", "ad2*ad2", "(a2*ad2 + ad2*a2)/2"],
    ];
    t.map(|row| row.map(|s| parse_expr(s, 2).expect("catalog expression parses")))
}

/// Off-diagonal coupling block `[[a†1 a2, a1 a2], [a†1 a†2, a1 a†2]]`.
pub fn coupling_block() -> [[OperatorExpr; 2]; 2] {
    let t = [["ad1*a2", "a1*a2"], ["ad1*ad2", "a1*ad2"]];
    t.map(|row| row.map(|s| parse_expr(s, 2).expect("catalog expression parses")))
}

/// Sign pattern `[[a, b], [c, d]]` for a block matrix of 2x2 identities.
fn blocks(p: [[i64; 2]; 2]) -> ExactMatrix {
    ExactMatrix::from_ints(&[&p[0], &p[1]])
}

fn sp4_elements(q3_from_table: bool) -> Vec<Element> {
    let [s1, s2, s3] = pauli();
    let id = ExactMatrix::identity(2);
    let eye = blocks([[1, 0], [0, 1]]);
    let off = blocks([[0, 1], [1, 0]]);
    let dm = blocks([[1, 0], [0, -1]]);
    let half = ExactScalar::ratio(1, 2);
    let ih = i_times(1, 2);
    let mih = i_times(-1, 2);
    let q3 = if q3_from_table {
        eye.kron(&s2).scale(&half)
    } else {
        off.kron(&s3).scale(&ih)
    };
    [
        off.kron(&s2).scale(&ExactScalar::ratio(-1, 2)),
        blocks([[0, -1], [1, 0]]).kron(&id).scale(&ih),
        blocks([[-1, 0], [0, 1]]).kron(&s2).scale(&half),
        eye.kron(&s2).scale(&half),
        dm.kron(&s1).scale(&ih),
        eye.kron(&s3).scale(&ih),
        off.kron(&s1).scale(&mih),
        dm.kron(&s3).scale(&mih),
        eye.kron(&s1).scale(&ih),
        q3,
    ]
    .into_iter()
    .map(Element::Matrix)
    .collect()
}

/// Symplectic form on `(x1, p1, x2, p2)`.
pub fn symplectic_form() -> ExactMatrix {
    ExactMatrix::from_ints(&[&[0, 1, 0, 0], &[-1, 0, 0, 0], &[0, 0, 0, 1], &[0, 0, -1, 0]])
}

/// Ten 4x4 Sp(4) generators on `(x1, p1, x2, p2)`.
pub fn sp4_matrices() -> GeneratorFamily {
    GeneratorFamily::new(
        "sp4",
        labels(&TEN_LABELS),
        sp4_elements(false),
        "four-by-four phase-space generators of the two-oscillator system",
        Variant::Canonical,
    )
    .expect("valid family")
    .with_metric(symplectic_form())
}

/// Tabulated variant in which `Q3` repeats the `S0` matrix.
pub fn sp4_matrices_table_printed() -> GeneratorFamily {
    GeneratorFamily::new(
        "sp4-table-printed",
        labels(&TEN_LABELS),
        sp4_elements(true),
        "tabulated phase-space generators of the two-oscillator system",
        Variant::AsPrinted,
    )
    .expect("valid family")
    .with_metric(symplectic_form())
    .with_note("Q3 is listed with the same matrix as S0, (1/2)diag(I,I)sigma2")
}

/// `diag(1, 1, 1, -1, -1)` on `(x, y, z, t, s)`.
pub fn o32_metric() -> ExactMatrix {
    ExactMatrix::diag(&[s(1), s(1), s(1), s(-1), s(-1)])
}

/// Ten 5x5 O(3,2) generators on `(x, y, z, t, s)`.
pub fn o32_matrices() -> GeneratorFamily {
    let i = ExactScalar::i();
    let mi = -ExactScalar::i();
    let m = |e: &[(usize, usize, ExactScalar)]| Element::Matrix(ExactMatrix::from_entries(5, e));
    let elements = vec![
        m(&[(2, 3, mi.clone()), (3, 2, i.clone())]),
        m(&[(1, 3, i.clone()), (3, 1, mi.clone())]),
        m(&[(1, 2, mi.clone()), (2, 1, i.clone())]),
        m(&[(4, 5, mi.clone()), (5, 4, i.clone())]),
        m(&[(1, 4, i.clone()), (4, 1, i.clone())]),
        m(&[(2, 4, i.clone()), (4, 2, i.clone())]),
        m(&[(3, 4, i.clone()), (4, 3, i.clone())]),
        m(&[(1, 5, i.clone()), (5, 1, i.clone())]),
        m(&[(2, 5, i.clone()), (5, 2, i.clone())]),
        m(&[(3, 5, i.clone()), (5, 3, i.clone())]),
    ];
    GeneratorFamily::new(
        "o32",
        labels(&TEN_LABELS),
        elements,
        "five-by-five de Sitter generators with three space-like and two time-like directions",
        Variant::Canonical,
    )
    .expect("valid family")
    .with_metric(o32_metric())
}

/// Translation generators `{P1, P2, P3, P0}` on `(x, y, z, t, 1)`.
pub fn translation_matrices() -> GeneratorFamily {
    let i = ExactScalar::i();
    let m = |r: usize, v: ExactScalar| Element::Matrix(ExactMatrix::from_entries(5, &[(r, 5, v)]));
    GeneratorFamily::new(
        "translations",
        labels(&["P1", "P2", "P3", "P0"]),
        vec![m(1, i.clone()), m(2, i.clone()), m(3, i.clone()), m(4, -&i)],
        "space-time translation generators from the contracted time-like boosts",
        Variant::Canonical,
    )
    .expect("valid family")
}

pub const FAMILY_NAMES: [&str; 12] = [
    "sp2-oscillator",
    "sp2-oscillator-text",
    "sp2-oscillator-table",
    "sp2-pauli",
    "sp2-minkowski4",
    "sp2-minkowski4-printed",
    "two-mode-oscillator",
    "two-mode-oscillator-printed",
    "sp4",
    "sp4-table-printed",
    "o32",
    "translations",
];

pub fn family(name: &str) -> Result<GeneratorFamily, CatalogError> {
    Ok(match name {
        "sp2-oscillator" => sp2_oscillator(Sp2Variant::Canonical),
        "sp2-oscillator-text" => sp2_oscillator(Sp2Variant::Text),
        "sp2-oscillator-table" => sp2_oscillator(Sp2Variant::Table),
        "sp2-pauli" => sp2_pauli(),
        "sp2-minkowski4" => sp2_minkowski4(),
        "sp2-minkowski4-printed" => sp2_minkowski4_as_printed(),
        "two-mode-oscillator" => two_mode_oscillator(),
        "two-mode-oscillator-printed" => two_mode_oscillator_as_printed(),
        "sp4" => sp4_matrices(),
        "sp4-table-printed" => sp4_matrices_table_printed(),
        "o32" => o32_matrices(),
        "translations" => translation_matrices(),
        other => return Err(CatalogError::UnknownFamily(other.to_string())),
    })
}

pub fn all_families() -> Vec<GeneratorFamily> {
    FAMILY_NAMES.iter().map(|n| family(n).expect("registered family")).collect()
}
