//! The core evaluators.
//!
//! Both paths run the same layered dynamic program: the innermost index
//! contributes a layer T(a) = a^(−i) · P(a or a−1), where P is the running
//! prefix sum of the previous layer and the offset encodes strict versus
//! weak chains. The exact path is the ground-truth oracle and is meant for
//! n up to a few dozen; the mod-p path evaluates at n = p−1 in
//! O(ℓ(I) · p · log p).

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::composition::Composition;
use crate::error::{Error, Result};
use crate::modp::{pow_mod, ExactRational, PrimeCtx, Residue};

/// Strict (A: n_1 > n_2 > …) or weak (S: n_1 ≥ n_2 ≥ …) chains.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum SumKind {
    Strict,
    Weak,
}

impl SumKind {
    pub fn letter(&self) -> char {
        match self {
            SumKind::Strict => 'A',
            SumKind::Weak => 'S',
        }
    }
}

impl fmt::Display for SumKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

impl FromStr for SumKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(SumKind::Strict),
            "S" | "s" => Ok(SumKind::Weak),
            other => Err(Error::parse(format!("unknown sum kind `{other}` (want A or S)"))),
        }
    }
}

/// The whole sequence n ↦ Sum_I(n) for n = 0..=n_max, exactly.
pub fn exact_sum_sequence(kind: SumKind, i: &Composition, n_max: u64) -> Vec<ExactRational> {
    let len = n_max as usize + 1;
    let mut prefix: Vec<ExactRational> = vec![ExactRational::one(); len];
    for &part in i.parts().iter().rev() {
        let mut next = vec![ExactRational::zero(); len];
        let mut running = ExactRational::zero();
        for a in 1..len {
            let below = match kind {
                SumKind::Strict => &prefix[a - 1],
                SumKind::Weak => &prefix[a],
            };
            let inv_pow = ExactRational::new(BigInt::one(), BigInt::from(a as u64).pow(part));
            running += inv_pow * below;
            next[a] = running.clone();
        }
        prefix = next;
    }
    prefix
}

/// Exact evaluation of A_I(n) or S_I(n). The empty composition gives 1.
pub fn eval_exact(kind: SumKind, i: &Composition, n: u64) -> ExactRational {
    exact_sum_sequence(kind, i, n).pop().unwrap()
}

/// Evaluation of A_I(p−1) or S_I(p−1) in Z/pZ. Total for every prime
/// context; negative powers use Fermat exponents a^(p−1−i).
pub fn eval_mod_p(kind: SumKind, i: &Composition, ctx: &PrimeCtx) -> Residue {
    let p = ctx.p();
    if i.is_empty() {
        return ctx.one();
    }
    let len = p as usize; // indices 0..=p−1
    let mut prefix: Vec<u64> = vec![1; len];
    for &part in i.parts().iter().rev() {
        // a^(−part) = a^e with e = (p−1) − (part mod (p−1)); e = 0 when
        // (p−1) divides the part.
        let reduced = part as u64 % (p - 1);
        let exponent = if reduced == 0 { 0 } else { p - 1 - reduced };
        let mut next = vec![0u64; len];
        let mut running = 0u64;
        for a in 1..len {
            let below = match kind {
                SumKind::Strict => prefix[a - 1],
                SumKind::Weak => prefix[a],
            };
            let term = ((pow_mod(a as u64, exponent, p) as u128 * below as u128) % p as u128) as u64;
            running = (running + term) % p;
            next[a] = running;
        }
        prefix = next;
    }
    ctx.res(prefix[len - 1])
}
