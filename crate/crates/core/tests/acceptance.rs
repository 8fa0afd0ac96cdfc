//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails. Tolerances are fixed here, not taken from the CLI.

use std::time::{Duration, Instant};

use ccr_lie::catalog::{self, Element, GeneratorFamily, Sp2Variant};
use ccr_lie::cli::verify::{self, Status, VerifyConfig};
use ccr_lie::contract;
use ccr_lie::focknum::{protected_commutator_check, FockRealization};
use ccr_lie::liecore::{self, compare_by_label, StructureConstants};
use ccr_lie::opalg::{commutator, OperatorExpr};
use ccr_lie::phspace::{self, FourMomentum, GaussianState};
use ccr_lie::{ExactMatrix, ExactScalar};
use num_complex::Complex64;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

const CCR_BUDGET: Duration = Duration::from_secs(1);
const FOCK_BUDGET: Duration = Duration::from_secs(10);
const FOCK_TOL: f64 = 1e-12;
const FLOW_TOL: f64 = 1e-10;
const DET_TOL: f64 = 1e-12;
const NUMERIC_LIMIT_TOL: f64 = 1e-5;
const MASS_SHELL_TOL: f64 = 1e-10;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn i() -> ExactScalar {
    ExactScalar::i()
}

fn table(f: &GeneratorFamily) -> Result<StructureConstants, String> {
    let r = liecore::structure_constants(f);
    r.table.ok_or_else(|| format!("{} does not close: {:?} {:?}", f.name(), r.dependent, r.failures))
}

fn levi(a: usize, b: usize, c: usize) -> i64 {
    match (a, b, c) {
        (1, 2, 3) | (2, 3, 1) | (3, 1, 2) => 1,
        (1, 3, 2) | (3, 2, 1) | (2, 1, 3) => -1,
        _ => 0,
    }
}

/// Checks `[A_i, B_j] = coeff * eps_ijk C_k` in a table, for every i, j.
fn eps_bracket(t: &StructureConstants, a: &str, b: &str, c: &str, coeff: &ExactScalar) -> Result<(), String> {
    for x in 1..=3 {
        for y in 1..=3 {
            let (ia, ib) = (idx(t, &format!("{a}{x}"))?, idx(t, &format!("{b}{y}"))?);
            let mut want = Vec::new();
            for z in 1..=3 {
                let e = levi(x, y, z);
                if e != 0 {
                    want.push((idx(t, &format!("{c}{z}"))?, coeff * &ExactScalar::int(e)));
                }
            }
            let got = t.bracket(ia, ib);
            ensure(got == want, format!("[{a}{x}, {b}{y}] = {}", t.render_combination(&got)))?;
        }
    }
    Ok(())
}

fn idx(t: &StructureConstants, l: &str) -> Result<usize, String> {
    t.index_of(l).ok_or_else(|| format!("label {l} missing"))
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let xp = commutator(&OperatorExpr::position(1, 1), &OperatorExpr::momentum(1, 1)).map_err(|e| e.to_string())?;
    ensure(xp == OperatorExpr::constant(1, i()), format!("[x, p] = {xp}"))?;
    let m = 3;
    for a in 1..=m {
        for b in 1..=m {
            let c = commutator(&OperatorExpr::a(m, a), &OperatorExpr::ad(m, b)).map_err(|e| e.to_string())?;
            let want = if a == b { ExactScalar::one() } else { ExactScalar::zero() };
            ensure(c == OperatorExpr::constant(m, want), format!("[a{a}, ad{b}] = {c}"))?;
        }
    }
    let el = start.elapsed();
    ensure(el < CCR_BUDGET, format!("took {el:?}"))?;
    Ok(format!("[x,p] = i and [a_i, ad_j] = delta_ij on 3 modes in {} ms", el.as_millis()))
}

fn criterion_2() -> Outcome {
    let osc = table(&catalog::sp2_oscillator(Sp2Variant::Canonical))?;
    let pauli = table(&catalog::sp2_pauli())?;
    let mink = table(&catalog::sp2_minkowski4())?;
    for (name, t) in [("oscillator", &osc), ("2x2", &pauli), ("4x4", &mink)] {
        let (j2, k1, k3) = (idx(t, "J2")?, idx(t, "K1")?, idx(t, "K3")?);
        ensure(t.bracket(j2, k1) == vec![(k3, -i())], format!("{name}: [J2,K1]"))?;
        ensure(t.bracket(j2, k3) == vec![(k1, i())], format!("{name}: [J2,K3]"))?;
        ensure(t.bracket(k1, k3) == vec![(j2, i())], format!("{name}: [K1,K3]"))?;
    }
    ensure(osc == pauli && pauli == mink, "tables differ under the identity label map")?;
    let mut warned = Vec::new();
    for f in [
        catalog::sp2_oscillator(Sp2Variant::Text),
        catalog::sp2_oscillator(Sp2Variant::Table),
        catalog::sp2_minkowski4_as_printed(),
    ] {
        let ok = liecore::table_of(&f).is_some_and(|t| compare_by_label(&t, &pauli).is_ok_and(|c| c.is_match()));
        if !ok {
            println!("    WARN  {} does not reproduce the Sp(2) brackets", f.name());
            warned.push(f.name().to_string());
        }
    }
    Ok(format!("3 representations agree; {} as-printed variants listed as WARN", warned.len()))
}

fn criterion_3() -> Outcome {
    let t = table(&catalog::two_mode_oscillator())?;
    let mi = -i();
    eps_bracket(&t, "J", "J", "J", &i())?;
    eps_bracket(&t, "J", "K", "K", &i())?;
    eps_bracket(&t, "J", "Q", "Q", &i())?;
    eps_bracket(&t, "K", "K", "J", &mi)?;
    eps_bracket(&t, "Q", "Q", "J", &mi)?;
    let s0 = idx(&t, "S0")?;
    for x in 1..=3 {
        let (j, k, q) = (idx(&t, &format!("J{x}"))?, idx(&t, &format!("K{x}"))?, idx(&t, &format!("Q{x}"))?);
        ensure(t.bracket(j, s0).is_empty(), format!("[J{x}, S0] != 0"))?;
        ensure(t.bracket(k, s0) == vec![(q, mi.clone())], format!("[K{x}, S0]"))?;
        ensure(t.bracket(q, s0) == vec![(k, i())], format!("[Q{x}, S0]"))?;
        for y in 1..=3 {
            let qy = idx(&t, &format!("Q{y}"))?;
            let want = if x == y { vec![(s0, mi.clone())] } else { Vec::new() };
            ensure(t.bracket(k, qy) == want, format!("[K{x}, Q{y}]"))?;
        }
        // no K-J cross terms beyond the eps rule, no K-Q beyond delta
    }
    ensure(liecore::jacobi_check(&t), "Jacobi fails")?;
    Ok(format!("45 brackets exact, Jacobi holds ({} nonzero f)", t.nonzero_triplets().len()))
}

fn criterion_4() -> Outcome {
    let osc = table(&catalog::two_mode_oscillator())?;
    for f in [catalog::sp4_matrices(), catalog::o32_matrices()] {
        let t = table(&f)?;
        let c = compare_by_label(&t, &osc).map_err(|e| e.to_string())?;
        ensure(c.is_match(), format!("{}: {} mismatches", f.name(), c.mismatches().len()))?;
    }
    let printed = table(&catalog::two_mode_oscillator_as_printed())?;
    let n = compare_by_label(&printed, &osc).map_err(|e| e.to_string())?.mismatches().len();
    println!("    WARN  two-mode-oscillator-printed: {n} mismatching structure constants");
    let dep = liecore::structure_constants(&catalog::sp4_matrices_table_printed()).dependent;
    println!("    WARN  sp4-table-printed: linearly dependent at {}", dep.join(", "));
    ensure(n > 0 && !dep.is_empty(), "as-printed variants were expected to be flagged")?;
    Ok("sp4 and o32 tables equal the oscillator table".into())
}

/// The four translation matrices as printed: `i` in the last column for
/// P1..P3 and `-i` at (4,5) for P0.
fn printed_translations() -> Vec<(&'static str, ExactMatrix)> {
    vec![
        ("P1", ExactMatrix::from_entries(5, &[(1, 5, i())])),
        ("P2", ExactMatrix::from_entries(5, &[(2, 5, i())])),
        ("P3", ExactMatrix::from_entries(5, &[(3, 5, i())])),
        ("P0", ExactMatrix::from_entries(5, &[(4, 5, -i())])),
    ]
}

fn criterion_5() -> Outcome {
    let o32 = catalog::o32_matrices();
    let m = |l: &str| o32.get(l).and_then(Element::as_matrix).cloned().ok_or(format!("{l} missing"));
    for ((_, want), src) in printed_translations().iter().zip(["Q1", "Q2", "Q3", "S0"]) {
        let got = contract::contract_generator(&m(src)?, 2).map_err(|e| e.to_string())?;
        ensure(&got == want, format!("lim eps^2 C {src} C^-1 =\n{got}"))?;
    }
    for l in ["J1", "J2", "J3", "K1", "K2", "K3"] {
        let g = m(l)?;
        let c = contract::conjugate(&g, 0).map_err(|e| e.to_string())?;
        ensure(c == contract::EpsMatrix::from_exact(&g), format!("{l} is moved by the squeeze"))?;
    }
    let mut worst: f64 = 0.0;
    for src in ["Q1", "Q2", "Q3", "S0"] {
        worst = worst.max(contract::numeric_gap(&m(src)?, 2, 1e-3).map_err(|e| e.to_string())?);
    }
    ensure(worst <= NUMERIC_LIMIT_TOL, format!("numeric gap {worst:e}"))?;
    Ok(format!("P matrices exact, J/K fixed, numeric gap at eps=1e-3 is {worst:.1e}"))
}

fn criterion_6() -> Outcome {
    let fam = contract::contract_o32().map_err(|e| e.to_string())?;
    let t = table(&fam)?;
    let mi = -i();
    eps_bracket(&t, "J", "J", "J", &i())?;
    eps_bracket(&t, "J", "P", "P", &i())?;
    eps_bracket(&t, "K", "K", "J", &mi)?;
    eps_bracket(&t, "J", "K", "K", &i())?;
    let ps: Vec<usize> = ["P1", "P2", "P3", "P0"].iter().map(|l| idx(&t, l)).collect::<Result<_, _>>()?;
    for &a in &ps {
        for &b in &ps {
            ensure(t.bracket(a, b).is_empty(), "translations do not commute")?;
        }
    }
    let reference = liecore::reference::poincare();
    let cmp = compare_by_label(&t, &reference).map_err(|e| e.to_string())?;
    ensure(cmp.is_match(), format!("{} mismatches against the reference table", cmp.mismatches().len()))?;
    let notes = contract::boost_translation_discrepancies(&t);
    for n in &notes {
        println!("    NOTE  {n}");
    }
    let report = verify::run(&VerifyConfig::default()).map_err(|e| e.to_string())?;
    let note_count = report.checks.iter().filter(|c| c.status == Status::Note).count();
    ensure(report.exit_code() == 0, format!("verify exit {}", report.exit_code()))?;
    ensure(note_count == 1, format!("{note_count} notes"))?;
    Ok("closed, [P,P] = 0, matches the reference table, verify exits 0 with one note".into())
}

fn criterion_7() -> Outcome {
    let start = Instant::now();
    let fock = FockRealization::new(16, 2).map_err(|e| e.to_string())?;
    let fam = catalog::two_mode_oscillator();
    let ops: Vec<&OperatorExpr> = fam.elements().iter().filter_map(Element::as_operator).collect();
    let mut worst: f64 = 0.0;
    let mut pairs = 0;
    for (k, a) in ops.iter().enumerate() {
        for b in &ops[k + 1..] {
            worst = worst.max(protected_commutator_check(a, b, &fock, 4).map_err(|e| e.to_string())?);
            pairs += 1;
        }
    }
    let el = start.elapsed();
    ensure(pairs == 45, format!("{pairs} pairs"))?;
    ensure(worst <= FOCK_TOL, format!("max deviation {worst:e}"))?;
    ensure(el < FOCK_BUDGET, format!("took {el:?}"))?;
    Ok(format!("45 pairs, max deviation {worst:.1e}, {} ms", el.as_millis()))
}

fn criterion_8() -> Outcome {
    let ts = [-1.0, -0.5, 0.1, 0.5, 1.0];
    let mut symp: f64 = 0.0;
    for (l, g) in catalog::sp4_matrices().iter() {
        let g = g.as_matrix().ok_or("sp4 holds matrices")?;
        for t in ts {
            let f = phspace::flow(g, t).map_err(|e| format!("{l}: {e}"))?;
            symp = symp.max(phspace::symplectic_residual(&f));
        }
    }
    let mut metric: f64 = 0.0;
    for (l, g) in catalog::o32_matrices().iter() {
        let g = g.as_matrix().ok_or("o32 holds matrices")?;
        for t in ts {
            let f = phspace::flow(g, t).map_err(|e| format!("{l}: {e}"))?;
            metric = metric.max(phspace::o32_residual(&f.map(|v| Complex64::new(v, 0.0))));
        }
    }
    let mut rng = StdRng::seed_from_u64(7);
    let ground = GaussianState::ground();
    let mut drift: f64 = 0.0;
    for _ in 0..100 {
        let m = phspace::random_unit_det_map(&mut rng);
        let s = phspace::apply_sp2(&ground, &m).map_err(|e| e.to_string())?;
        drift = drift.max((s.det() - ground.det()).abs());
    }
    ensure(symp <= FLOW_TOL, format!("symplectic residual {symp:e}"))?;
    ensure(metric <= FLOW_TOL, format!("metric residual {metric:e}"))?;
    ensure(drift <= DET_TOL, format!("det drift {drift:e}"))?;
    Ok(format!("symplectic {symp:.1e}, metric {metric:.1e}, det drift {drift:.1e}"))
}

fn criterion_9() -> Outcome {
    let mut rng = StdRng::seed_from_u64(11);
    let mut worst: f64 = 0.0;
    for m in [0.5, 1.0, 2.0] {
        let rest = FourMomentum::at_rest(m);
        let want = -m * m;
        for axis in 1..=3 {
            for k in 0..=20 {
                let y = -2.0 + 0.2 * k as f64;
                let mut p = phspace::boost_momentum(&rest, axis, y).map_err(|e| e.to_string())?;
                worst = worst.max((phspace::mass_shell(&p) - want).abs());
                for _ in 0..3 {
                    let ax = rng.gen_range(1..=3);
                    p = phspace::rotate_momentum(&p, ax, rng.gen_range(-std::f64::consts::PI..std::f64::consts::PI))
                        .map_err(|e| e.to_string())?;
                    worst = worst.max((phspace::mass_shell(&p) - want).abs());
                }
            }
        }
    }
    ensure(worst <= MASS_SHELL_TOL, format!("max deviation {worst:e}"))?;
    Ok(format!("p^2 - p0^2 = -m^2 held to {worst:.1e}"))
}

fn criterion_10() -> Outcome {
    let fam = contract::contract_o32().map_err(|e| e.to_string())?;
    let q = ExactScalar::ratio;
    for (a, b, c, d) in [(q(1, 1), q(0, 1), q(0, 1), q(0, 1)), (q(3, 2), q(-2, 1), q(1, 7), q(5, 3))] {
        let mut printed = ExactMatrix::identity(5);
        printed.set(0, 4, a.clone());
        printed.set(1, 4, b.clone());
        printed.set(2, 4, c.clone());
        printed.set(3, 4, -&d);
        ensure(phspace::translate(&a, &b, &c, &d) == printed, "closed form differs from the printed matrix")?;
        let e = phspace::translation_exp(&fam, &a, &b, &c, &d).ok_or("series did not terminate")?;
        ensure(e == printed, format!("exponential =\n{e}"))?;
        let v = phspace::Affine5Vector::new(q(1, 2), q(-1, 1), q(2, 1), q(7, 3));
        let w = v.transformed(&e).ok_or("last component changed")?;
        let want = phspace::Affine5Vector::new(&v.x + &a, &v.y + &b, &v.z + &c, &v.t - &d);
        ensure(w == want, "action differs from (x+a, y+b, z+c, t-d, 1)")?;
    }
    Ok("(x+a, y+b, z+c, t-d, 1) exact; exponential equals the matrix".into())
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("CCR foundation", criterion_1),
        ("Sp(2) closure", criterion_2),
        ("ten-generator algebra", criterion_3),
        ("isomorphism of Sp(4), O(3,2) and oscillator tables", criterion_4),
        ("contraction", criterion_5),
        ("Poincare output", criterion_6),
        ("Fock validation", criterion_7),
        ("invariance flows", criterion_8),
        ("mass shell", criterion_9),
        ("translation action", criterion_10),
    ];
    let mut failed = 0;
    for (n, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(detail) => println!("PASS  criterion {:>2} {name}: {detail}", n + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL  criterion {:>2} {name}: {why}", n + 1);
            }
        }
    }
    println!("acceptance: {}/{} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
