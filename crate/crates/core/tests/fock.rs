use std::time::Instant;

use ccr_lie::catalog;
use ccr_lie::focknum::{hermiticity_defect, protected_commutator_check, FockRealization};
use ccr_lie::opalg::parse_expr;

fn ops(f: &ccr_lie::GeneratorFamily) -> Vec<(String, ccr_lie::OperatorExpr)> {
    f.iter().map(|(l, e)| (l.to_string(), e.as_operator().unwrap().clone())).collect()
}

#[test]
fn all_pairs_on_protected_subspace() {
    let fock = FockRealization::new(16, 2).unwrap();
    let gens = ops(&catalog::two_mode_oscillator());
    let start = Instant::now();
    let mut worst: f64 = 0.0;
    let mut pairs = 0;
    for (i, (_, a)) in gens.iter().enumerate() {
        for (_, b) in &gens[i + 1..] {
            worst = worst.max(protected_commutator_check(a, b, &fock, 4).unwrap());
            pairs += 1;
        }
    }
    assert_eq!(pairs, 45);
    assert!(worst <= 1e-12, "{worst}");
    assert!(start.elapsed().as_secs_f64() < 10.0);
}

#[test]
fn k3_q3_bracket_is_minus_i_s0() {
    let fock = FockRealization::new(16, 2).unwrap();
    let f = catalog::two_mode_oscillator();
    let op = |l: &str| f.get(l).unwrap().as_operator().unwrap().clone();
    let (k3, q3, s0) = (op("K3"), op("Q3"), op("S0"));
    assert!(protected_commutator_check(&k3, &q3, &fock, 4).unwrap() <= 1e-12);
    assert_eq!(ccr_lie::commutator(&k3, &q3).unwrap(), s0.scale(&-ccr_lie::ExactScalar::i()));
    assert_eq!(protected_commutator_check(&k3, &k3, &fock, 4).unwrap(), 0.0);
}

#[test]
fn guard_zero_shows_truncation_edge() {
    let fock = FockRealization::new(4, 2).unwrap();
    let f = catalog::two_mode_oscillator();
    let op = |l: &str| f.get(l).unwrap().as_operator().unwrap().clone();
    let dev = protected_commutator_check(&op("K3"), &op("Q3"), &fock, 0).unwrap();
    assert!(dev > 1e-3, "{dev}");
}

#[test]
fn generators_are_exactly_hermitian() {
    let fock = FockRealization::new(16, 2).unwrap();
    for (l, g) in ops(&catalog::two_mode_oscillator()) {
        assert_eq!(hermiticity_defect(&fock.realize(&g).unwrap()), 0.0, "{l}");
    }
    let one = FockRealization::new(16, 1).unwrap();
    for (l, g) in ops(&catalog::sp2_oscillator(catalog::Sp2Variant::Canonical)) {
        assert_eq!(hermiticity_defect(&one.realize(&g).unwrap()), 0.0, "{l}");
    }
}

#[test]
fn s0_spectrum_on_protected_states() {
    let fock = FockRealization::new(16, 2).unwrap();
    let s0 = catalog::two_mode_oscillator().get("S0").unwrap().as_operator().unwrap().clone();
    let m = fock.realize(&s0).unwrap();
    for j in fock.protected_states(4).unwrap() {
        let occ = fock.occupations(j);
        let want = (occ[0] + occ[1]) as f64 / 2.0 + 0.5;
        for r in 0..fock.dim() {
            let v = m[(r, j)];
            if r == j {
                assert_eq!(v.re, want);
                assert_eq!(v.im, 0.0);
            } else {
                assert_eq!(v.norm(), 0.0);
            }
        }
    }
}

#[test]
fn text_j2_is_shifted_number_operator() {
    let fock = FockRealization::new(8, 1).unwrap();
    let j2 = parse_expr("(a1*ad1 + ad1*a1)/2", 1).unwrap();
    let m = fock.realize(&j2).unwrap();
    for n in 0..8 {
        assert_eq!(m[(n, n)].re, n as f64 + 0.5);
    }
}
