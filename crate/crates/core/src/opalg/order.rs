//! Normal ordering by adjacent transposition.
//!
//! The only rewrite rule is `a_i a†_j -> a†_j a_i + delta_ij`. Operators of the
//! same kind commute, so once every creation symbol sits left of every
//! annihilation symbol the word is collected into its exponent pattern.

use super::{LadderKind, LadderSymbol, Monomial, OperatorExpr};
use crate::scalar::ExactScalar;

/// Normal-orders a sum of raw words `coeff * s_1 s_2 ... s_k`.
///
/// The result lives on `max(modes, largest mode index used)` modes.
pub fn normal_order(modes: usize, raw: &[(ExactScalar, Vec<LadderSymbol>)]) -> OperatorExpr {
    let used = raw
        .iter()
        .flat_map(|(_, w)| w.iter().map(|s| s.mode))
        .max()
        .unwrap_or(0);
    let modes = modes.max(used);
    let mut out = OperatorExpr::zero(modes);
    let mut work: Vec<(ExactScalar, Vec<LadderSymbol>)> = raw
        .iter()
        .filter(|(c, _)| !c.is_zero())
        .cloned()
        .collect();

    while let Some((coeff, mut word)) = work.pop() {
        let out_of_order = word.windows(2).position(|w| {
            w[0].kind == LadderKind::Annihilation && w[1].kind == LadderKind::Creation
        });
        match out_of_order {
            None => out.add_term(collect(modes, &word), coeff),
            Some(i) => {
                if word[i].mode == word[i + 1].mode {
                    let mut contracted = word.clone();
                    contracted.drain(i..i + 2);
                    work.push((coeff.clone(), contracted));
                }
                word.swap(i, i + 1);
                work.push((coeff, word));
            }
        }
    }
    out
}

fn collect(modes: usize, word: &[LadderSymbol]) -> Monomial {
    let mut mono = Monomial::identity(modes);
    for s in word {
        match s.kind {
            LadderKind::Creation => mono.cdeg[s.mode - 1] += 1,
            LadderKind::Annihilation => mono.adeg[s.mode - 1] += 1,
        }
    }
    mono
}
