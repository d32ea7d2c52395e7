//! Exact integer helpers used throughout: factorials and binomials over
//! arbitrary-precision integers.

use num_bigint::BigInt;
use num_traits::One;

pub fn factorial(n: u64) -> BigInt {
    let mut out = BigInt::one();
    for i in 2..=n {
        out *= i;
    }
    out
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    let mut out = BigInt::one();
    for t in 1..=k {
        out = out * (n - k + t) / t;
    }
    out
}
