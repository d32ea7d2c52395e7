//! Bernoulli numbers: exact rationals and residues mod p.
//!
//! Both paths use the classical recurrence Σ_{j=0}^{m} binom(m+1, j) B_j = 0
//! solved for B_m, with B_0 = 1 (so B_1 = −1/2). Mod p every division is by
//! some m+1 ≤ p−1, hence invertible, which is why the index must stay at or
//! below p−2.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::binomial;
use crate::error::{Error, Result};
use crate::modp::prime::{inverse_table_up_to, mul_mod, PrimeCtx, Residue};
use crate::modp::ExactRational;

/// B_0, …, B_kmax as exact rationals.
pub fn bernoulli_exact_row(kmax: u64) -> Vec<ExactRational> {
    let mut row = Vec::with_capacity(kmax as usize + 1);
    row.push(ExactRational::one());
    for m in 1..=kmax {
        let mut acc = ExactRational::zero();
        for (j, b) in row.iter().enumerate() {
            acc += ExactRational::from(binomial(m + 1, j as u64)) * b;
        }
        row.push(-acc / ExactRational::from(BigInt::from(m + 1)));
    }
    row
}

/// The exact Bernoulli number B_k.
pub fn bernoulli_exact(k: u64) -> ExactRational {
    bernoulli_exact_row(k).pop().unwrap()
}

/// B_0, …, B_kmax mod p; requires kmax ≤ p−2 so no denominator vanishes.
pub fn bernoulli_row_mod_p(kmax: u64, ctx: &PrimeCtx) -> Result<Vec<Residue>> {
    let p = ctx.p();
    if kmax > p.saturating_sub(2) {
        return Err(Error::domain(format!(
            "Bernoulli index {kmax} exceeds p-2 = {} (von Staudt-Clausen pole)",
            p - 2
        )));
    }
    let inv = inverse_table_up_to(kmax + 1, p);
    let mut row: Vec<u64> = Vec::with_capacity(kmax as usize + 1);
    row.push(1 % p);
    for m in 1..=kmax {
        // binom(m+1, j) built incrementally along the row.
        let mut binom = 1u64 % p;
        let mut acc = 0u64;
        for j in 0..m {
            acc = (acc + mul_mod(binom, row[j as usize], p)) % p;
            // binom(m+1, j+1) = binom(m+1, j) * (m+1-j) / (j+1)
            binom = mul_mod(binom, (m + 1 - j) % p, p);
            binom = mul_mod(binom, inv[(j + 1) as usize], p);
        }
        let b = mul_mod((p - acc) % p, inv[(m + 1) as usize], p);
        row.push(b);
    }
    Ok(row.into_iter().map(|v| ctx.res(v)).collect())
}

/// B_k mod p; requires k ≤ p−2. Zero for odd k ≥ 3.
pub fn bernoulli_mod_p(k: u64, ctx: &PrimeCtx) -> Result<Residue> {
    if k % 2 == 1 && k >= 3 {
        if k > ctx.p() - 2 {
            return Err(Error::domain(format!("Bernoulli index {k} exceeds p-2")));
        }
        return Ok(ctx.zero());
    }
    Ok(bernoulli_row_mod_p(k, ctx)?.pop().unwrap())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn q(n: i64, d: i64) -> ExactRational {
        ExactRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn exact_small_values() {
        let row = bernoulli_exact_row(12);
        assert_eq!(row[0], q(1, 1));
        assert_eq!(row[1], q(-1, 2));
        assert_eq!(row[2], q(1, 6));
        assert_eq!(row[3], q(0, 1));
        assert_eq!(row[4], q(-1, 30));
        assert_eq!(row[8], q(-1, 30));
        assert_eq!(row[10], q(5, 66));
        assert_eq!(row[12], q(-691, 2730));
    }

    #[test]
    fn b8_mod_11() {
        let ctx = PrimeCtx::new(11).unwrap();
        assert_eq!(bernoulli_mod_p(8, &ctx).unwrap().value(), 4);
    }

    #[test]
    fn base_cases_mod_p() {
        let ctx = PrimeCtx::new(13).unwrap();
        assert_eq!(bernoulli_mod_p(0, &ctx).unwrap().value(), 1);
        // B_1 = -1/2: -inv(2) = -7 = 6 mod 13
        assert_eq!(bernoulli_mod_p(1, &ctx).unwrap(), ctx.res_rational(&q(-1, 2)).unwrap());
        assert_eq!(bernoulli_mod_p(7, &ctx).unwrap().value(), 0);
    }

    #[test]
    fn index_bound_enforced() {
        let ctx = PrimeCtx::new(11).unwrap();
        assert!(bernoulli_mod_p(9, &ctx).is_ok());
        assert!(bernoulli_mod_p(10, &ctx).is_err());
    }

    #[test]
    fn mod_p_matches_exact_reduction() {
        let exact = bernoulli_exact_row(12);
        for p in crate::modp::prime::primes_in_range(11, 101) {
            let ctx = PrimeCtx::new(p).unwrap();
            let kmax = 12.min(p - 2);
            let modp = bernoulli_row_mod_p(kmax, &ctx).unwrap();
            for k in (0..=kmax as usize).step_by(2) {
                assert_eq!(
                    modp[k],
                    ctx.res_rational(&exact[k]).unwrap(),
                    "B_{k} mod {p}"
                );
            }
        }
    }

    #[test]
    fn faulhaber_power_sum_identity() {
        // Σ_{a=1}^{n−1} a^r = (1/(r+1)) Σ_k binom(r+1, k) B_k n^(r+1−k),
        // exactly over the rationals.
        use crate::arith::binomial;
        for r in [1u64, 2, 3, 5] {
            let bernoulli = bernoulli_exact_row(r);
            for n in 1..=20i64 {
                let direct: ExactRational =
                    (1..n).map(|a| ExactRational::from(BigInt::from(a).pow(r as u32))).sum();
                let mut rhs = ExactRational::zero();
                for (k, b) in bernoulli.iter().enumerate() {
                    rhs += ExactRational::from(binomial(r + 1, k as u64))
                        * b
                        * ExactRational::from(BigInt::from(n).pow((r + 1 - k as u64) as u32));
                }
                rhs /= ExactRational::from(BigInt::from(r + 1));
                assert_eq!(direct, rhs, "r={r} n={n}");
            }
        }
    }

    #[test]
    fn second_opinion_against_the_evaluator() {
        // B_{p−1−i} ≡ S_(i,1)(p−1) for even i: the independent route
        // through the harmonic-sum evaluator.
        use crate::composition::Composition;
        use crate::mhs::{eval_mod_p, SumKind};
        for p in crate::modp::prime::primes_in_range(11, 31) {
            let ctx = PrimeCtx::new(p).unwrap();
            for i in [2u32, 4, 6] {
                let b = bernoulli_mod_p(p - 1 - i as u64, &ctx).unwrap();
                let s = eval_mod_p(SumKind::Weak, &Composition::new(vec![i, 1]).unwrap(), &ctx);
                assert_eq!(b, s, "i={i} p={p}");
            }
        }
    }
}
