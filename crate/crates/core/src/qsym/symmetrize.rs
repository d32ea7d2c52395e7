//! Symmetric-sum expansions: the symmetrization of a basis element over
//! all permutations of its parts, and its closed form as a signed sum of
//! products of single-part M's over set partitions.

use num_bigint::BigInt;

use crate::arith::factorial;
use crate::composition::Composition;
use crate::error::Result;
use crate::qsym::hopf::sign_pow;
use crate::qsym::{Basis, QSymElem};
use crate::set_partition::set_partitions;

/// The right-hand side of the symmetrization identity, fully multiplied
/// out in the M basis:
///
/// * basis M: Σ_𝓑 (−1)^(k−l) c(𝓑) M_(b_1) ⋯ M_(b_l)
/// * basis E: Σ_𝓑 c(𝓑) M_(b_1) ⋯ M_(b_l)
///
/// Equals [`symmetrize_direct`] with the same basis argument.
pub fn symmetrize_expand(i: &Composition, basis: Basis) -> Result<QSymElem> {
    let k = i.len();
    if k == 0 {
        return Ok(QSymElem::unit(Basis::M));
    }
    let mut out = QSymElem::zero(Basis::M);
    for partition in set_partitions(k) {
        let mut prod = QSymElem::unit(Basis::M);
        for b in partition.block_sums(i) {
            prod = prod.stuffle(&QSymElem::generator(Basis::M, Composition::from_raw(vec![b])))?;
        }
        let mut coeff = BigInt::from(partition.coefficient());
        if basis == Basis::M {
            coeff *= sign_pow(k - partition.block_count());
        }
        out = out.add(&prod.scale(&coeff));
    }
    Ok(out)
}

/// The left-hand side Σ_{σ∈Σ_k} X_{σ·I} (counting repeated arrangements
/// with multiplicity), expressed in the M basis.
pub fn symmetrize_direct(i: &Composition, basis: Basis) -> QSymElem {
    let k = i.len();
    if k == 0 {
        return QSymElem::unit(Basis::M);
    }
    let arrangements = i.rearrangements();
    // Every distinct arrangement occurs k!/d times, d = number of distinct
    // arrangements of the multiset.
    let multiplicity = factorial(k as u64) / BigInt::from(arrangements.len());
    let mut out = QSymElem::zero(basis);
    for arr in arrangements {
        out.add_term(arr, multiplicity.clone());
    }
    out.convert_to(Basis::M)
}
