//! The full verification run: every suite in a fixed order, one check per
//! line, canonical failures fatal and as-printed failures reported as WARN.

use std::fmt;

use rand::rngs::StdRng;
use rand::SeedableRng;
use serde::Serialize;
use thiserror::Error;

use crate::catalog::{self, GeneratorFamily, Sp2Variant, Variant};
use crate::contract;
use crate::focknum::{self, FockRealization};
use crate::liecore::{self, reference, Comparison, StructureConstants};
use crate::opalg::{commutator, normal_order, parse_expr, LadderSymbol as S, OperatorExpr};
use crate::phspace::{self, FourMomentum, GaussianState};
use crate::scalar::ExactScalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum VariantPolicy {
    Canonical,
    AsPrinted,
    Both,
}

impl VariantPolicy {
    fn includes(self, v: Variant) -> bool {
        matches!(
            (self, v),
            (VariantPolicy::Both, _)
                | (VariantPolicy::Canonical, Variant::Canonical)
                | (VariantPolicy::AsPrinted, Variant::AsPrinted)
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct VerifyConfig {
    pub fock_n: usize,
    pub guard: usize,
    pub tolerance: f64,
    pub variant: VariantPolicy,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { fock_n: 16, guard: 4, tolerance: 1e-10, variant: VariantPolicy::Both }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ConfigError {
    #[error("--fock-n ({n}) must be at least --guard + 2 ({})", guard + 2)]
    CutoffTooSmall { n: usize, guard: usize },
    #[error("--tolerance must be positive and finite, got {0}")]
    Tolerance(f64),
}

impl VerifyConfig {
    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.fock_n < self.guard + 2 {
            return Err(ConfigError::CutoffTooSmall { n: self.fock_n, guard: self.guard });
        }
        if !(self.tolerance > 0.0 && self.tolerance.is_finite()) {
            return Err(ConfigError::Tolerance(self.tolerance));
        }
        Ok(())
    }

    /// Fock commutators are compared at the tighter of 1e-12 and the tolerance.
    pub fn fock_tolerance(&self) -> f64 {
        self.tolerance.min(1e-12)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Warn,
    Note,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Warn => "WARN",
            Status::Note => "NOTE",
        };
        write!(f, "{s}")
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub suite: &'static str,
    pub name: String,
    pub variant: String,
    pub status: Status,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub warn: usize,
    pub note: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub schema: u32,
    pub config: VerifyConfig,
    pub checks: Vec<Check>,
    pub summary: Summary,
}

impl Report {
    pub fn canonical_failures(&self) -> usize {
        self.summary.fail
    }

    pub fn exit_code(&self) -> i32 {
        if self.summary.fail > 0 {
            1
        } else {
            0
        }
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            out.push_str(&format!("{:<4}  {:<8}  {}", c.status, c.suite, c.name));
            if !c.detail.is_empty() {
                out.push_str(&format!(": {}", c.detail));
            }
            out.push('\n');
        }
        let s = &self.summary;
        out.push_str(&format!(
            "\n{} passed, {} failed, {} warnings, {} notes\n",
            s.pass, s.fail, s.warn, s.note
        ));
        out
    }
}

struct Recorder {
    policy: VariantPolicy,
    suite: &'static str,
    checks: Vec<Check>,
}

impl Recorder {
    fn record(&mut self, variant: Variant, name: impl Into<String>, ok: bool, detail: impl Into<String>) {
        if !self.policy.includes(variant) {
            return;
        }
        let status = match (ok, variant) {
            (true, _) => Status::Pass,
            (false, Variant::Canonical) => Status::Fail,
            (false, Variant::AsPrinted) => Status::Warn,
        };
        self.checks.push(Check {
            suite: self.suite,
            name: name.into(),
            variant: variant.to_string(),
            status,
            detail: detail.into(),
        });
    }

    fn canonical(&mut self, name: impl Into<String>, ok: bool, detail: impl Into<String>) {
        self.record(Variant::Canonical, name, ok, detail);
    }

    fn note(&mut self, name: impl Into<String>, detail: impl Into<String>) {
        if !self.policy.includes(Variant::Canonical) {
            return;
        }
        self.checks.push(Check {
            suite: self.suite,
            name: name.into(),
            variant: Variant::Canonical.to_string(),
            status: Status::Note,
            detail: detail.into(),
        });
    }
}

fn sci(x: f64) -> String {
    format!("{x:.3e}")
}

fn ccr_suite(r: &mut Recorder) {
    r.suite = "opalg";
    let x = OperatorExpr::position(1, 1);
    let p = OperatorExpr::momentum(1, 1);
    let xp = commutator(&x, &p).expect("same modes");
    let ok = xp == OperatorExpr::constant(1, ExactScalar::i());
    r.canonical("[x1, p1] = i", ok, if ok { String::new() } else { format!("got {xp}") });

    let modes = 3;
    let mut bad = Vec::new();
    for i in 1..=modes {
        for j in 1..=modes {
            let want = if i == j { ExactScalar::one() } else { ExactScalar::zero() };
            let pairs = [
                (OperatorExpr::a(modes, i), OperatorExpr::ad(modes, j), want),
                (OperatorExpr::a(modes, i), OperatorExpr::a(modes, j), ExactScalar::zero()),
                (OperatorExpr::ad(modes, i), OperatorExpr::ad(modes, j), ExactScalar::zero()),
            ];
            for (a, b, w) in pairs {
                let c = commutator(&a, &b).expect("same modes");
                if c != OperatorExpr::constant(modes, w) {
                    bad.push(format!("[{a}, {b}] = {c}"));
                }
            }
        }
    }
    r.canonical("[a_i, ad_j] = delta_ij, [a_i, a_j] = [ad_i, ad_j] = 0", bad.is_empty(), bad.join("; "));

    let lhs = parse_expr("a1*a1*ad1*ad1*a2*ad2", 2).expect("valid expression");
    let word = vec![S::annihilate(1), S::annihilate(1), S::create(1), S::create(1), S::annihilate(2), S::create(2)];
    let rewritten = normal_order(2, &[(ExactScalar::one(), word)]);
    let ok = lhs == rewritten;
    r.canonical(
        "closed-form product equals adjacent-swap rewriting",
        ok,
        if ok { String::new() } else { format!("{lhs} vs {rewritten}") },
    );
}

fn golden(f: &GeneratorFamily, label: &str) -> String {
    f.get(label).map(|e| e.to_string()).unwrap_or_default()
}

fn catalog_suite(r: &mut Recorder) {
    r.suite = "catalog";
    let sp2 = catalog::sp2_oscillator(Sp2Variant::Canonical);
    let two = catalog::two_mode_oscillator();
    let entries = [
        (&sp2, "J2", "1/2*ad1*a1 + 1/4"),
        (&sp2, "K1", "1/4*ad1^2 + 1/4*a1^2"),
        (&two, "S0", "1/2*ad1*a1 + 1/2*ad2*a2 + 1/2"),
        (&two, "Q3", "1/2*i*ad1*ad2 - 1/2*i*a1*a2"),
    ];
    for (f, l, want) in entries {
        let got = golden(f, l);
        r.canonical(format!("{} {l} = {want}", f.name()), got == want, if got == want { String::new() } else { got });
    }
    let entry = |f: &GeneratorFamily, l: &str, r0: usize, c0: usize| {
        f.get(l).and_then(|e| e.as_matrix()).map(|m| m.get(r0 - 1, c0 - 1).clone())
    };
    let o32 = catalog::o32_matrices();
    let tr = catalog::translation_matrices();
    let i = ExactScalar::i();
    let checks = [
        ("o32 Q1 (1,5) = i", entry(&o32, "Q1", 1, 5) == Some(i.clone())),
        ("o32 S0 (4,5) = -i", entry(&o32, "S0", 4, 5) == Some(-&i)),
        ("translations P1 (1,5) = i", entry(&tr, "P1", 1, 5) == Some(i.clone())),
        ("translations P0 (4,5) = -i", entry(&tr, "P0", 4, 5) == Some(-&i)),
    ];
    for (name, ok) in checks {
        r.canonical(name, ok, "");
    }
    for f in catalog::all_families() {
        let ops: Vec<&OperatorExpr> = f.elements().iter().filter_map(|e| e.as_operator()).collect();
        if ops.is_empty() {
            continue;
        }
        let bad: Vec<&str> = f
            .iter()
            .filter(|(_, e)| e.as_operator().is_some_and(|o| !o.is_self_adjoint()))
            .map(|(l, _)| l)
            .collect();
        r.record(f.variant(), format!("{} generators are self-adjoint", f.name()), bad.is_empty(), bad.join(", "));
    }
}

fn closure_detail(f: &GeneratorFamily, rep: &liecore::ClosureReport) -> String {
    let n = f.len();
    let pairs = n * n.saturating_sub(1) / 2;
    if !rep.dependent.is_empty() {
        return format!("linearly dependent basis at {}", rep.dependent.join(", "));
    }
    let failed: Vec<String> = rep.failures.iter().map(|x| format!("[{}, {}]", x.a, x.b)).collect();
    let closed = pairs - failed.len();
    let mut d = format!("{n}/{n} generators, {closed}/{pairs} brackets in span");
    if !failed.is_empty() {
        d.push_str(&format!("; outside span: {}", failed.join(" ")));
    }
    d
}

fn mismatch_detail(c: &Comparison) -> String {
    match c {
        Comparison::Match => String::new(),
        Comparison::Mismatch(m) => {
            let shown: Vec<String> = m.iter().take(4).map(ToString::to_string).collect();
            let more = if m.len() > 4 { format!(" (+{} more)", m.len() - 4) } else { String::new() };
            format!("{} mismatches: {}{more}", m.len(), shown.join("; "))
        }
    }
}

fn compare_with(r: &mut Recorder, variant: Variant, name: String, t: Option<&StructureConstants>, want: &StructureConstants) {
    match t {
        Some(t) => match liecore::compare_by_label(t, want) {
            Ok(c) => {
                let d = mismatch_detail(&c);
                r.record(variant, name, c.is_match(), d);
            }
            Err(e) => r.record(variant, name, false, e.to_string()),
        },
        None => r.record(variant, name, false, "no closed table"),
    }
}

fn lie_suite(r: &mut Recorder) {
    r.suite = "liecore";
    let mut tables: Vec<(String, Option<StructureConstants>)> = Vec::new();
    for f in catalog::all_families() {
        let rep = liecore::structure_constants(&f);
        let detail = closure_detail(&f, &rep);
        r.record(f.variant(), format!("closure {}", f.name()), rep.closed, detail);
        if let Some(t) = &rep.table {
            let anti = t.is_antisymmetric();
            let jac = liecore::jacobi_check(t);
            r.record(
                f.variant(),
                format!("antisymmetry and Jacobi {}", f.name()),
                anti && jac,
                if anti && jac { String::new() } else { format!("antisymmetric={anti} jacobi={jac}") },
            );
        }
        tables.push((f.name().to_string(), rep.table));
    }
    let get = |n: &str| tables.iter().find(|(k, _)| k == n).and_then(|(_, t)| t.as_ref());

    let sp2 = reference::sp2();
    for (name, variant) in [
        ("sp2-oscillator", Variant::Canonical),
        ("sp2-pauli", Variant::Canonical),
        ("sp2-minkowski4", Variant::Canonical),
        ("sp2-oscillator-text", Variant::AsPrinted),
        ("sp2-oscillator-table", Variant::AsPrinted),
        ("sp2-minkowski4-printed", Variant::AsPrinted),
    ] {
        compare_with(r, variant, format!("{name} has [J2,K1] = -iK3, [J2,K3] = iK1, [K1,K3] = iJ2"), get(name), &sp2);
    }
    let xzt = catalog::sp2_minkowski4().map_elements("sp2-minkowski4-xzt", |e| {
        crate::catalog::Element::Matrix(e.as_matrix().expect("matrix family").restrict(&[0, 2, 3]))
    });
    let xzt_table = liecore::table_of(&xzt);
    compare_with(r, Variant::Canonical, "sp2-pauli matches sp2-minkowski4 on (x, z, t)".into(), xzt_table.as_ref(), &sp2);

    let ten = reference::ten_generator();
    for (name, variant) in [
        ("two-mode-oscillator", Variant::Canonical),
        ("sp4", Variant::Canonical),
        ("o32", Variant::Canonical),
        ("two-mode-oscillator-printed", Variant::AsPrinted),
        ("sp4-table-printed", Variant::AsPrinted),
    ] {
        compare_with(r, variant, format!("{name} reproduces the ten-generator bracket table"), get(name), &ten);
    }
    if let Some(osc) = get("two-mode-oscillator") {
        for other in ["sp4", "o32"] {
            compare_with(r, Variant::Canonical, format!("{other} table equals two-mode-oscillator table"), get(other), osc);
        }
        if let Some(sw) = liecore::swap_labels(osc, "S0", "Q3") {
            let c = liecore::compare_by_label(osc, &sw).map(|c| !c.is_match()).unwrap_or(false);
            r.canonical("exchanging S0 and Q3 changes the table", c, "");
        }
        let line = osc.render_text().lines().find(|l| l.starts_with("[K1, Q1]")).unwrap_or("").to_string();
        r.canonical("[K1, Q1] = -i S0", line == "[K1, Q1] = -i S0", line);
    }
}

fn contract_suite(r: &mut Recorder) {
    r.suite = "contract";
    let o32 = catalog::o32_matrices();
    let m = |l: &str| o32.get(l).and_then(|e| e.as_matrix()).expect("o32 label").clone();
    let fam = match contract::contract_o32() {
        Ok(f) => f,
        Err(e) => {
            r.canonical("contraction of O(3,2)", false, e.to_string());
            return;
        }
    };
    let tr = catalog::translation_matrices();
    let bad: Vec<&str> = ["P1", "P2", "P3", "P0"].into_iter().filter(|l| fam.get(l) != tr.get(l)).collect();
    r.canonical("lim eps^2 C {Q1,Q2,Q3,S0} C^-1 equals the translation generators", bad.is_empty(), bad.join(", "));
    let moved: Vec<&str> = ["J1", "J2", "J3", "K1", "K2", "K3"]
        .into_iter()
        .filter(|l| contract::conjugate(&m(l), 0).map(|c| c != contract::EpsMatrix::from_exact(&m(l))).unwrap_or(true))
        .collect();
    r.canonical("J and K commute with the squeeze", moved.is_empty(), moved.join(", "));
    let back: Vec<&str> = ["Q1", "Q2", "Q3", "S0"]
        .into_iter()
        .filter(|l| contract::conjugate_back(&m(l)).ok() != contract::contract_generator(&m(l), 2).ok())
        .collect();
    r.canonical("squeeze, truncate and squeeze back gives the same limit", back.is_empty(), back.join(", "));
    let unique = ["Q1", "Q2", "Q3", "S0"].into_iter().all(|l| {
        contract::power_scan(&m(l), 0..=4).is_ok_and(|s| {
            s.iter().all(|(p, o)| match p {
                0 | 1 => *o == contract::PowerOutcome::Divergent,
                2 => matches!(o, contract::PowerOutcome::Finite(_)),
                _ => *o == contract::PowerOutcome::Vanishes,
            })
        })
    });
    r.canonical("power 2 is the only finite nonzero scaling", unique, "");
    let mut worst: f64 = 0.0;
    for l in ["Q1", "Q2", "Q3", "S0"] {
        worst = worst.max(contract::numeric_gap(&m(l), 2, 1e-3).unwrap_or(f64::INFINITY));
    }
    r.canonical("numeric path at eps = 1e-3 within 1e-5 of the limit", worst <= 1e-5, format!("max gap {}", sci(worst)));
    let again = contract::contract_family(&fam, &contract::poincare_plan(), "poincare");
    r.canonical("re-contracting the output changes nothing", again.is_ok_and(|g| g.labels() == fam.labels() && g.elements() == fam.elements()), "");

    let rep = liecore::structure_constants(&fam);
    let detail = closure_detail(&fam, &rep);
    r.canonical("closure poincare", rep.closed, detail);
    compare_with(r, Variant::Canonical, "poincare reproduces rotation, boost and translation brackets".into(), rep.table.as_ref(), &reference::poincare());
    if let Some(t) = &rep.table {
        let ps: Vec<usize> = ["P1", "P2", "P3", "P0"].iter().filter_map(|l| t.index_of(l)).collect();
        let abelian = ps.iter().all(|&a| ps.iter().all(|&b| t.bracket(a, b).is_empty()));
        r.canonical("[P_mu, P_nu] = 0", abelian, "");
        let notes = contract::boost_translation_discrepancies(t);
        if !notes.is_empty() {
            r.note("boost-translation bracket differs from the printed relation", notes.join("; "));
        }
    }
}

fn fock_suite(r: &mut Recorder, cfg: &VerifyConfig) {
    r.suite = "focknum";
    let tol = cfg.fock_tolerance();
    let fock = match FockRealization::new(cfg.fock_n, 2) {
        Ok(f) => f,
        Err(e) => {
            r.canonical("Fock realization", false, e.to_string());
            return;
        }
    };
    for f in [catalog::two_mode_oscillator(), catalog::two_mode_oscillator_as_printed()] {
        let ops: Vec<(&str, &OperatorExpr)> =
            f.iter().filter_map(|(l, e)| e.as_operator().map(|o| (l, o))).collect();
        let mut worst: f64 = 0.0;
        let mut err = None;
        let mut pairs = 0;
        for (i, (_, a)) in ops.iter().enumerate() {
            for (_, b) in &ops[i + 1..] {
                match focknum::protected_commutator_check(a, b, &fock, cfg.guard) {
                    Ok(d) => worst = worst.max(d),
                    Err(e) => err = Some(e.to_string()),
                }
                pairs += 1;
            }
        }
        let ok = err.is_none() && worst <= tol;
        let detail = err.unwrap_or_else(|| {
            format!("{pairs} pairs, N = {}, guard = {}, max deviation {} (tolerance {})", cfg.fock_n, cfg.guard, sci(worst), sci(tol))
        });
        r.record(f.variant(), format!("{} commutators on protected states", f.name()), ok, detail);
    }
    let two = catalog::two_mode_oscillator();
    let herm: Vec<&str> = two
        .iter()
        .filter(|(_, e)| {
            e.as_operator()
                .map(|o| fock.realize(o).map(|m| focknum::hermiticity_defect(&m) != 0.0).unwrap_or(true))
                .unwrap_or(true)
        })
        .map(|(l, _)| l)
        .collect();
    r.canonical("realized generators are Hermitian", herm.is_empty(), herm.join(", "));
    let s0 = two.get("S0").and_then(|e| e.as_operator()).expect("S0 present");
    let spectrum_ok = match (fock.realize(s0), fock.protected_states(cfg.guard)) {
        (Ok(m), Ok(cols)) => cols.iter().all(|&j| {
            let occ = fock.occupations(j);
            let want = (occ[0] + occ[1]) as f64 / 2.0 + 0.5;
            (0..fock.dim()).all(|row| {
                let v = m[(row, j)];
                let w = if row == j { want } else { 0.0 };
                (v.re - w).abs() <= tol && v.im.abs() <= tol
            })
        }),
        _ => false,
    };
    r.canonical("S0 is diagonal with (n1 + n2 + 1)/2 on protected states", spectrum_ok, "");
}

fn phase_suite(r: &mut Recorder, cfg: &VerifyConfig) {
    r.suite = "phspace";
    let tol = cfg.tolerance;
    let g = GaussianState::ground();
    let w0 = phspace::wigner_eval(&g, 0.0, 0.0);
    let w1 = phspace::wigner_eval(&g, 1.0, 0.0);
    let pi = std::f64::consts::PI;
    let dev = (w0 - 1.0 / pi).abs().max((w1 - (-1.0f64).exp() / pi).abs());
    r.canonical("ground-state Wigner function is exp(-(x^2 + p^2))/pi", dev <= tol, format!("max deviation {}", sci(dev)));

    let mut rng = StdRng::seed_from_u64(20240611);
    let mut drift: f64 = 0.0;
    for _ in 0..100 {
        let m = phspace::random_unit_det_map(&mut rng);
        match phspace::apply_sp2(&g, &m) {
            Ok(s) => drift = drift.max((s.det() - g.det()).abs()),
            Err(_) => drift = f64::INFINITY,
        }
    }
    let dtol = tol.min(1e-12);
    r.canonical("det covariance under 100 unit-determinant maps", drift <= dtol, format!("max drift {}", sci(drift)));

    let ts = [-1.0, -0.5, 0.1, 0.5, 1.0];
    let mut worst: f64 = 0.0;
    for (_, e) in catalog::sp4_matrices().iter() {
        for t in ts {
            let res = e.as_matrix().map(|m| phspace::flow(m, t));
            worst = worst.max(match res {
                Some(Ok(f)) => phspace::symplectic_residual(&f),
                _ => f64::INFINITY,
            });
        }
    }
    r.canonical("sp4 flows satisfy M J M^T = J", worst <= tol, format!("max residual {}", sci(worst)));

    let mut worst: f64 = 0.0;
    for (_, e) in catalog::o32_matrices().iter() {
        for t in ts {
            let res = e.as_matrix().map(|m| phspace::flow(m, t));
            worst = worst.max(match res {
                Some(Ok(f)) => phspace::o32_residual(&f.map(|v| num_complex::Complex64::new(v, 0.0))),
                _ => f64::INFINITY,
            });
        }
    }
    r.canonical("o32 flows preserve diag(1,1,1,-1,-1)", worst <= tol, format!("max residual {}", sci(worst)));

    let worst = mass_shell_worst();
    r.canonical("mass shell invariant under boosts and rotations", worst <= tol, format!("max relative deviation {}", sci(worst)));

    let q = ExactScalar::ratio;
    let (a, b, c, d) = (q(3, 2), q(-2, 1), q(1, 7), q(5, 3));
    let closed = phspace::translate(&a, &b, &c, &d);
    let exp_ok = contract::contract_o32()
        .ok()
        .and_then(|f| phspace::translation_exp(&f, &a, &b, &c, &d))
        .is_some_and(|m| m == closed);
    r.canonical("exp(-i(a P1 + b P2 + c P3 + d P0)) equals the translation matrix", exp_ok, "");
    let v = phspace::Affine5Vector::new(q(1, 1), q(2, 1), q(3, 1), q(4, 1));
    let moved = v.transformed(&closed);
    let want = phspace::Affine5Vector::new(&v.x + &a, &v.y + &b, &v.z + &c, &v.t - &d);
    r.canonical("translation maps (x, y, z, t, 1) to (x+a, y+b, z+c, t-d, 1)", moved == Some(want), "");
}

/// Largest `|m(p') - m(p)| / (1 + p0'^2)` over the boost and rotation grid.
pub fn mass_shell_worst() -> f64 {
    let mut worst: f64 = 0.0;
    for m in [0.5, 1.0, 2.0] {
        let p = FourMomentum::at_rest(m);
        let base = phspace::mass_shell(&p);
        for axis in 1..=3 {
            for k in 0..=8 {
                let y = -2.0 + 0.5 * k as f64;
                let Ok(b) = phspace::boost_momentum(&p, axis, y) else { return f64::INFINITY };
                let Ok(rot) = phspace::rotate_momentum(&b, axis % 3 + 1, 0.37 * k as f64) else {
                    return f64::INFINITY;
                };
                for q in [b, rot] {
                    worst = worst.max((phspace::mass_shell(&q) - base).abs() / (1.0 + q.p0 * q.p0));
                }
            }
        }
    }
    worst
}

pub fn run(cfg: &VerifyConfig) -> Result<Report, ConfigError> {
    cfg.validate()?;
    let mut r = Recorder { policy: cfg.variant, suite: "", checks: Vec::new() };
    ccr_suite(&mut r);
    catalog_suite(&mut r);
    lie_suite(&mut r);
    contract_suite(&mut r);
    fock_suite(&mut r, cfg);
    phase_suite(&mut r, cfg);
    let count = |s: Status| r.checks.iter().filter(|c| c.status == s).count();
    let summary = Summary {
        pass: count(Status::Pass),
        fail: count(Status::Fail),
        warn: count(Status::Warn),
        note: count(Status::Note),
    };
    Ok(Report { schema: 1, config: *cfg, checks: r.checks, summary })
}

