//! Height-one sums A_(h,1,…,1) through Stirling numbers: the exact
//! first-kind formula and the mod-p second-kind formula.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::modp::{mul_mod, pow_mod, stirling2_row_mod, ExactRational, PrimeCtx, Residue};

/// A_(h,1^(k−1))(n) = Σ_{j=k}^n stirling1(j,k) / (j^(h−1) j!), exactly.
pub fn height_one_exact(h: u32, k: u32, n: u64) -> Result<ExactRational> {
    if h == 0 || k == 0 {
        return Err(Error::domain("height-one sums need h, k ≥ 1"));
    }
    let k = k as u64;
    let mut acc = ExactRational::zero();
    if n < k {
        return Ok(acc);
    }
    // Walk the first-kind triangle row by row, keeping only column k.
    let mut row: Vec<BigInt> = vec![BigInt::one()]; // row 0
    let mut factorial = BigInt::one();
    for j in 1..=n {
        let mut next = vec![BigInt::zero(); row.len() + 1];
        for (t, v) in row.iter().enumerate() {
            next[t + 1] += v;
            next[t] += v * BigInt::from(j - 1);
        }
        row = next;
        factorial *= j;
        if j >= k {
            let num = row[k as usize].clone();
            let den = BigInt::from(j).pow(h - 1) * &factorial;
            acc += ExactRational::new(num, den);
        }
    }
    Ok(acc)
}

/// A_(h,1^(k−1))(p−1) ≡ Σ_{j=1}^{p−k} (−1)^j (−j)^(p−h) (j−1)! · stirling2(p−k, j)
/// mod p; requires 1 ≤ h, k < p.
pub fn height_one_mod_p(h: u32, k: u32, ctx: &PrimeCtx) -> Result<Residue> {
    let p = ctx.p();
    if h == 0 || k == 0 {
        return Err(Error::domain("height-one sums need h, k ≥ 1"));
    }
    if h as u64 >= p || k as u64 >= p {
        return Err(Error::domain(format!("height-one mod-p formula needs h, k < p = {p}")));
    }
    let row = stirling2_row_mod(p - k as u64, ctx);
    let mut acc = 0u64;
    let mut fact = 1u64; // (j−1)! running
    for j in 1..=p - k as u64 {
        if j > 1 {
            fact = mul_mod(fact, j - 1, p);
        }
        let s2 = row[j as usize];
        if s2 != 0 {
            let pow = pow_mod(p - j % p, p - h as u64, p);
            let mut term = mul_mod(mul_mod(pow, fact, p), s2, p);
            if j % 2 == 1 {
                term = (p - term) % p;
            }
            acc = (acc + term) % p;
        }
    }
    Ok(ctx.res(acc))
}
