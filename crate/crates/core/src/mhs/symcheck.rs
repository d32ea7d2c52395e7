//! Symmetric-sum checks: the exact set-partition identity for Σ_σ S_{σ·I}
//! and Σ_σ A_{σ·I}, and their vanishing mod p for p > |I| + 1.

use num_bigint::BigInt;

use crate::arith::factorial;
use crate::composition::Composition;
use crate::mhs::eval::{eval_exact, SumKind};
use crate::mhs::table::SumTable;
use crate::modp::{ExactRational, Residue};
use crate::set_partition::set_partitions;

/// Outcome of the exact identity check at one (I, n).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetricSumCheck {
    pub weak_ok: bool,
    pub strict_ok: bool,
}

/// The two symmetrized residues at n = p−1.
#[derive(Debug, Clone, Copy)]
pub struct SymmetricSumResidues {
    pub weak: Residue,
    pub strict: Residue,
}

fn symmetrized_value(kind: SumKind, i: &Composition, n: u64) -> ExactRational {
    let arrangements = i.rearrangements();
    let multiplicity =
        ExactRational::from(factorial(i.len() as u64) / BigInt::from(arrangements.len()));
    arrangements
        .iter()
        .map(|arr| eval_exact(kind, arr, n) * &multiplicity)
        .sum()
}

fn partition_side(i: &Composition, n: u64, signed: bool) -> ExactRational {
    let mut acc = ExactRational::from(BigInt::from(0));
    for partition in set_partitions(i.len()) {
        let mut term = ExactRational::from(BigInt::from(partition.coefficient()));
        if signed && (i.len() - partition.block_count()) % 2 == 1 {
            term = -term;
        }
        for b in partition.block_sums(i) {
            term *= eval_exact(SumKind::Weak, &Composition::from_raw(vec![b]), n);
        }
        acc += term;
    }
    acc
}

/// Checks both displayed formulas exactly at a given n:
/// Σ_σ S_{σ·I}(n) = Σ_𝓑 c(𝓑) ∏ S_(b_s)(n) and
/// Σ_σ A_{σ·I}(n) = Σ_𝓑 (−1)^(k−l) c(𝓑) ∏ S_(b_s)(n).
pub fn symmetric_sum_check_exact(i: &Composition, n: u64) -> SymmetricSumCheck {
    if i.is_empty() {
        return SymmetricSumCheck { weak_ok: true, strict_ok: true };
    }
    SymmetricSumCheck {
        weak_ok: symmetrized_value(SumKind::Weak, i, n) == partition_side(i, n, false),
        strict_ok: symmetrized_value(SumKind::Strict, i, n) == partition_side(i, n, true),
    }
}

/// The symmetrized sums at n = p−1; both vanish when p > |I| + 1.
pub fn symmetric_sum_check_mod(i: &Composition, table: &mut SumTable) -> SymmetricSumResidues {
    let ctx = table.ctx();
    let arrangements = i.rearrangements();
    let multiplicity =
        ctx.res_big(&(factorial(i.len() as u64) / BigInt::from(arrangements.len())));
    let mut weak = ctx.zero();
    let mut strict = ctx.zero();
    for arr in &arrangements {
        weak += table.value(SumKind::Weak, arr);
        strict += table.value(SumKind::Strict, arr);
    }
    SymmetricSumResidues { weak: weak * multiplicity, strict: strict * multiplicity }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::composition::compositions_up_to_weight;
    use crate::modp::PrimeCtx;

    fn c(parts: &[u32]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn exact_identity_at_one_two() {
        let check = symmetric_sum_check_exact(&c(&[1, 2]), 3);
        assert!(check.weak_ok && check.strict_ok);
    }

    #[test]
    fn exact_identity_small_sweep() {
        for i in compositions_up_to_weight(5) {
            for n in [0u64, 1, 3, 6] {
                let check = symmetric_sum_check_exact(&i, n);
                assert!(check.weak_ok, "S side at {i}, n={n}");
                assert!(check.strict_ok, "A side at {i}, n={n}");
            }
        }
    }

    #[test]
    fn vanishing_mod_p() {
        let ctx = PrimeCtx::new(7).unwrap();
        let mut table = SumTable::new(&ctx);
        let r = symmetric_sum_check_mod(&c(&[1, 1, 1]), &mut table);
        assert!(r.weak.is_zero() && r.strict.is_zero());
        let r = symmetric_sum_check_mod(&c(&[2, 3]), &mut table);
        assert!(r.weak.is_zero() && r.strict.is_zero());
    }
}
