use ccr_lie::catalog;
use ccr_lie::contract::{self, *};
use ccr_lie::liecore::{self, compare_by_label, reference, structure_constants};
use ccr_lie::ExactScalar;

fn o32(label: &str) -> ccr_lie::ExactMatrix {
    catalog::o32_matrices().get(label).unwrap().as_matrix().unwrap().clone()
}

#[test]
fn translations_come_out_entry_for_entry() {
    let fam = contract_o32().unwrap();
    let want = catalog::translation_matrices();
    for l in ["P1", "P2", "P3", "P0"] {
        assert_eq!(fam.get(l), want.get(l), "{l}");
    }
    for l in ["J1", "J2", "J3", "K1", "K2", "K3"] {
        assert_eq!(fam.get(l), catalog::o32_matrices().get(l), "{l}");
    }
}

#[test]
fn recontracting_changes_nothing() {
    let once = contract_o32().unwrap();
    let twice = contract_family(&once, &poincare_plan(), "poincare").unwrap();
    for (l, e) in once.iter() {
        assert_eq!(twice.get(l), Some(e), "{l}");
    }
}

#[test]
fn contracted_algebra_is_poincare() {
    let fam = contract_o32().unwrap();
    let r = structure_constants(&fam);
    assert!(r.closed);
    let t = r.table.unwrap();
    assert!(compare_by_label(&t, &reference::poincare()).unwrap().is_match());
    assert!(liecore::jacobi_check(&t));
    let p: Vec<usize> = ["P1", "P2", "P3", "P0"].iter().map(|l| t.index_of(l).unwrap()).collect();
    for &a in &p {
        for &b in &p {
            assert!(t.bracket(a, b).is_empty());
        }
    }
    let (j3, p1, p2) = (t.index_of("J3").unwrap(), p[0], p[1]);
    assert_eq!(t.bracket(j3, p1), vec![(p2, ExactScalar::i())]);
}

#[test]
fn boost_translation_bracket_differs_from_printed_relation() {
    let t = liecore::table_of(&contract_o32().unwrap()).unwrap();
    let notes = boost_translation_discrepancies(&t);
    assert_eq!(notes.len(), 3);
    assert_eq!(notes[0], "[P1, K1] = i P0 (printed form gives 0)");
}

#[test]
fn numeric_path_converges() {
    for l in ["Q1", "Q2", "Q3", "S0", "J1", "K2"] {
        let g = o32(l);
        let power = if l.starts_with('Q') || l == "S0" { 2 } else { 0 };
        let mut last = f64::INFINITY;
        for eps in [1e-1, 1e-2, 1e-3] {
            let gap = numeric_gap(&g, power, eps).unwrap();
            assert!(gap <= last);
            assert!(gap <= eps * eps, "{l} eps={eps}: {gap}");
            last = gap;
        }
        assert!(last <= 1e-5);
    }
}

#[test]
fn trajectory_of_q1() {
    let m = conjugate(&o32("Q1"), 2).unwrap();
    let t = m.trajectory();
    assert_eq!(t, vec![(0, 4, 0, ExactScalar::i()), (4, 0, 4, ExactScalar::i())]);
    assert!(matches!(contract::contract_generator(&o32("S0"), 1), Err(ContractError::Divergent(_))));
}
