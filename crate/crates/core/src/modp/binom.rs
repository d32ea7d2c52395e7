//! Binomial coefficients and power sums over Z/pZ.

use crate::modp::prime::{PrimeCtx, Residue};

/// binom(n, k) mod p. Uses the multiplicative formula for n < p and the
/// Lucas digit recursion for n ≥ p.
pub fn binom_mod(n: u64, k: u64, ctx: &PrimeCtx) -> Residue {
    if k > n {
        return ctx.zero();
    }
    let p = ctx.p();
    if n >= p {
        // Lucas: binom(n, k) ≡ ∏ binom(n_i, k_i) over base-p digits.
        return binom_mod(n / p, k / p, ctx) * binom_mod(n % p, k % p, ctx);
    }
    let k = k.min(n - k);
    let mut acc = ctx.one();
    for t in 1..=k {
        acc *= ctx.res(n - k + t);
        acc *= ctx.inv(ctx.res(t)).expect("t < p");
    }
    acc
}

/// Σ_{a=1}^{p−1} a^r mod p: ≡ −1 when (p−1) | r (including r = 0, where
/// every term is 1), and 0 otherwise.
pub fn power_sum_mod(r: u64, ctx: &PrimeCtx) -> Residue {
    if r % (ctx.p() - 1) == 0 {
        -ctx.one()
    } else {
        ctx.zero()
    }
}
