//! Symbolic conversions between the two kinds of sums: the linear
//! inclusion–exclusion over coarsenings, and the two product expansions
//! obtained from the antipode.

use num_traits::Zero;

use crate::composition::Composition;
use crate::error::Result;
use crate::mhs::table::SumTable;
use crate::mhs::SumKind;
use crate::modp::Residue;
use crate::qsym::WordPoly;

/// A_I = Σ_{J ⪯ I} (−1)^(ℓ(I)−ℓ(J)) S_J, as (sign, index) pairs.
pub fn a_to_s(i: &Composition) -> Vec<(i64, Composition)> {
    i.coarsenings()
        .into_iter()
        .map(|j| {
            let sign = if (i.len() - j.len()) % 2 == 0 { 1 } else { -1 };
            (sign, j)
        })
        .collect()
}

/// The Möbius inverse: S_I = Σ_{J ⪯ I} A_J.
pub fn s_to_a(i: &Composition) -> Vec<(i64, Composition)> {
    i.coarsenings().into_iter().map(|j| (1, j)).collect()
}

/// A_I(m) = Σ_{I_1⊔…⊔I_l = I} (−1)^(ℓ(I)−l) S_{Ī_1}(m) ⋯ S_{Ī_l}(m),
/// valid for every m. Factors are the reversed blocks, to be read as
/// S-sums.
pub fn a_as_s_products(i: &Composition) -> Vec<(i64, Vec<Composition>)> {
    i.splittings()
        .into_iter()
        .map(|blocks| {
            let sign = if (i.len() - blocks.len()) % 2 == 0 { 1 } else { -1 };
            (sign, blocks.iter().map(Composition::reverse).collect())
        })
        .collect()
}

/// S_I(m) = Σ over splittings of Ī: (−1)^(ℓ(I)+l) A_{J_1}(m) ⋯ A_{J_l}(m),
/// valid for every m (the antipode product identity). Factors are to be
/// read as A-sums.
pub fn s_as_a_products(i: &Composition) -> Vec<(i64, Vec<Composition>)> {
    let rev = i.reverse();
    rev.splittings()
        .into_iter()
        .map(|blocks| {
            let sign = if (i.len() + blocks.len()) % 2 == 0 { 1 } else { -1 };
            (sign, blocks)
        })
        .collect()
}

/// Evaluates a word polynomial at n = p−1 in Z/pZ: each word is read as
/// an A-sum through the word/composition bijection.
pub fn chi_p(poly: &WordPoly, table: &mut SumTable) -> Result<Residue> {
    let ctx = table.ctx();
    let mut acc = ctx.zero();
    for (word, coeff) in poly.terms() {
        let comp = crate::word::composition_of(word)?;
        if coeff.is_zero() {
            continue;
        }
        acc += table.value(SumKind::Strict, &comp) * ctx.res_big(coeff);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::composition::compositions_up_to_weight;
    use crate::mhs::eval::eval_exact;
    use crate::modp::{ExactRational, PrimeCtx};
    use num_bigint::BigInt;
    use num_traits::One;

    fn c(parts: &[u32]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    fn rat(n: i64) -> ExactRational {
        ExactRational::from(BigInt::from(n))
    }

    fn eval_linear(kind: SumKind, combo: &[(i64, Composition)], n: u64) -> ExactRational {
        combo
            .iter()
            .map(|(sign, j)| rat(*sign) * eval_exact(kind, j, n))
            .sum()
    }

    fn eval_products(
        kind: SumKind,
        combo: &[(i64, Vec<Composition>)],
        n: u64,
    ) -> ExactRational {
        combo
            .iter()
            .map(|(sign, factors)| {
                factors
                    .iter()
                    .fold(rat(*sign), |acc, f| acc * eval_exact(kind, f, n))
            })
            .sum()
    }

    #[test]
    fn single_part_is_trivial() {
        let combo = a_to_s(&c(&[4]));
        assert_eq!(combo, vec![(1, c(&[4]))]);
    }

    #[test]
    fn pair_inclusion_exclusion() {
        // A_(1,1) = S_(1,1) − S_(2), checked exactly at n = 4.
        let combo = a_to_s(&c(&[1, 1]));
        assert_eq!(
            eval_exact(SumKind::Strict, &c(&[1, 1]), 4),
            eval_linear(SumKind::Weak, &combo, 4)
        );
    }

    #[test]
    fn a_to_s_holds_for_all_small_indices() {
        for i in compositions_up_to_weight(5) {
            let combo = a_to_s(&i);
            for n in 0..=8u64 {
                assert_eq!(
                    eval_exact(SumKind::Strict, &i, n),
                    eval_linear(SumKind::Weak, &combo, n),
                    "{i} at n={n}"
                );
            }
        }
    }

    #[test]
    fn s_to_a_is_the_inverse() {
        for i in compositions_up_to_weight(5) {
            let combo = s_to_a(&i);
            for n in 0..=8u64 {
                assert_eq!(
                    eval_exact(SumKind::Weak, &i, n),
                    eval_linear(SumKind::Strict, &combo, n),
                    "{i} at n={n}"
                );
            }
        }
    }

    #[test]
    fn length_three_product_expansion() {
        // A_(i,j,k) = S_i S_j S_k − S_(j,i) S_k − S_i S_(k,j) + S_(k,j,i),
        // checked numerically at m = 6 for (1,1,1).
        let i = c(&[1, 1, 1]);
        let combo = a_as_s_products(&i);
        assert_eq!(combo.len(), 4);
        assert_eq!(
            eval_exact(SumKind::Strict, &i, 6),
            eval_products(SumKind::Weak, &combo, 6)
        );
    }

    #[test]
    fn product_expansions_hold_exactly() {
        for i in compositions_up_to_weight(5) {
            let a_combo = a_as_s_products(&i);
            let s_combo = s_as_a_products(&i);
            for m in 0..=7u64 {
                assert_eq!(
                    eval_exact(SumKind::Strict, &i, m),
                    eval_products(SumKind::Weak, &a_combo, m),
                    "A-expansion {i} at m={m}"
                );
                assert_eq!(
                    eval_exact(SumKind::Weak, &i, m),
                    eval_products(SumKind::Strict, &s_combo, m),
                    "S-expansion {i} at m={m}"
                );
            }
        }
    }

    #[test]
    fn chi_evaluates_words_as_strict_sums() {
        let ctx = PrimeCtx::new(11).unwrap();
        let mut table = SumTable::new(&ctx);
        let mut poly = WordPoly::zero();
        poly.add_term(crate::word::word_of(&c(&[2, 1])), BigInt::one());
        let got = chi_p(&poly, &mut table).unwrap();
        assert_eq!(got, crate::mhs::eval::eval_mod_p(SumKind::Strict, &c(&[2, 1]), &ctx));
    }
}
