//! Stirling numbers of both kinds: exact and mod p.
//!
//! First kind here is unsigned (cycle counts). Mod-p variants run the
//! recurrences directly on residues row by row, so memory stays O(n) even
//! for the large-prime rows needed by the height-one formulas.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::modp::prime::{mul_mod, PrimeCtx, Residue};

/// Unsigned Stirling number of the first kind: permutations of n with k
/// cycles. Zero when k > n.
pub fn stirling1(n: u64, k: u64) -> BigInt {
    stirling_row_exact(n, true)
        .get(k as usize)
        .cloned()
        .unwrap_or_else(BigInt::zero)
}

/// Stirling number of the second kind: partitions of n into k blocks.
/// Zero when k > n.
pub fn stirling2(n: u64, k: u64) -> BigInt {
    stirling_row_exact(n, false)
        .get(k as usize)
        .cloned()
        .unwrap_or_else(BigInt::zero)
}

/// Row n of either triangle, exact.
fn stirling_row_exact(n: u64, first_kind: bool) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for m in 1..=n {
        let mut next = vec![BigInt::zero(); m as usize + 1];
        for (k, v) in row.iter().enumerate() {
            // [m, k+1] += [m-1, k]  (both kinds)
            next[k + 1] += v;
            // first kind: [m, k] += (m-1) * [m-1, k]; second: += k * [m-1, k]
            let factor = if first_kind { m - 1 } else { k as u64 };
            next[k] += v * BigInt::from(factor);
        }
        row = next;
    }
    row
}

/// Row n of either triangle mod p; row[j] = value at (n, j), j = 0..=n.
fn stirling_row_mod(n: u64, first_kind: bool, ctx: &PrimeCtx) -> Vec<u64> {
    let p = ctx.p();
    let mut row = vec![1u64 % p];
    for m in 1..=n {
        let mut next = vec![0u64; m as usize + 1];
        for (k, &v) in row.iter().enumerate() {
            if v == 0 {
                continue;
            }
            next[k + 1] = (next[k + 1] + v) % p;
            let factor = if first_kind { (m - 1) % p } else { k as u64 % p };
            next[k] = (next[k] + mul_mod(factor, v, p)) % p;
        }
        row = next;
    }
    row
}

pub fn stirling1_mod(n: u64, k: u64, ctx: &PrimeCtx) -> Residue {
    ctx.res(stirling_row_mod(n, true, ctx).get(k as usize).copied().unwrap_or(0))
}

pub fn stirling2_mod(n: u64, k: u64, ctx: &PrimeCtx) -> Residue {
    ctx.res(stirling_row_mod(n, false, ctx).get(k as usize).copied().unwrap_or(0))
}

/// Full row of second-kind values at n, as raw residues.
pub fn stirling2_row_mod(n: u64, ctx: &PrimeCtx) -> Vec<u64> {
    stirling_row_mod(n, false, ctx)
}

/// Full row of first-kind values at n, as raw residues.
pub fn stirling1_row_mod(n: u64, ctx: &PrimeCtx) -> Vec<u64> {
    stirling_row_mod(n, true, ctx)
}
