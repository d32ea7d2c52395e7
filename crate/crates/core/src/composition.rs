//! Compositions of positive integers: the index set for every basis and
//! every harmonic sum in this crate.
//!
//! A composition of weight n corresponds to a subset of {1,…,n−1} via
//! partial sums; refinement order, the duality involution and the Möbius
//! function all come from that correspondence.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::arith::binomial;
use crate::error::{Error, Result};

/// A composition: a finite sequence of positive integer parts.
/// The empty composition is admitted and denotes the algebra unit.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Composition {
    parts: Vec<u32>,
}

impl Composition {
    /// Builds a composition, rejecting zero parts.
    pub fn new(parts: impl Into<Vec<u32>>) -> Result<Self> {
        let parts = parts.into();
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::ZeroPart);
        }
        Ok(Composition { parts })
    }

    /// The empty composition (the unit).
    pub fn unit() -> Self {
        Composition { parts: Vec::new() }
    }

    pub(crate) fn from_raw(parts: Vec<u32>) -> Self {
        debug_assert!(parts.iter().all(|&p| p > 0));
        Composition { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The reversed composition (i_k,…,i_1).
    pub fn reverse(&self) -> Self {
        let mut parts = self.parts.clone();
        parts.reverse();
        Composition { parts }
    }

    /// Juxtaposition I ⊔ J.
    pub fn concat(&self, other: &Self) -> Self {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        Composition { parts }
    }

    /// Partial sums i_1, i_1+i_2, …, i_1+…+i_{k−1}: the subset of
    /// {1,…,n−1} corresponding to this composition.
    pub fn partial_sums(&self) -> Vec<u32> {
        let mut acc = 0u32;
        let mut out = Vec::with_capacity(self.parts.len().saturating_sub(1));
        for &p in self.parts.iter().take(self.parts.len().saturating_sub(1)) {
            acc += p;
            out.push(acc);
        }
        out
    }

    /// Rebuilds the composition of weight `n` from a sorted subset of
    /// {1,…,n−1}.
    pub fn from_subset(n: u32, subset: &[u32]) -> Self {
        debug_assert!(subset.windows(2).all(|w| w[0] < w[1]));
        if n == 0 {
            return Composition::unit();
        }
        let mut parts = Vec::with_capacity(subset.len() + 1);
        let mut prev = 0;
        for &s in subset {
            parts.push(s - prev);
            prev = s;
        }
        parts.push(n - prev);
        Composition { parts }
    }

    /// The duality involution I ↦ I*: complement the partial-sum subset
    /// of {1,…,n−1}. Errors on the empty composition.
    pub fn dual(&self) -> Result<Self> {
        if self.is_empty() {
            return Err(Error::EmptyComposition("dual"));
        }
        let n = self.weight();
        let sums = self.partial_sums();
        let mut in_subset = vec![false; n as usize];
        for &s in &sums {
            in_subset[s as usize - 1] = true;
        }
        let complement: Vec<u32> = (1..n).filter(|&s| !in_subset[s as usize - 1]).collect();
        Ok(Composition::from_subset(n, &complement))
    }

    /// True iff `self` refines `other`: `other` is obtained by summing
    /// adjacent runs of `self`'s parts. Reflexive.
    pub fn refines(&self, other: &Self) -> bool {
        if self.weight() != other.weight() {
            return false;
        }
        // subset(other) ⊆ subset(self)
        let fine = self.partial_sums();
        let coarse = other.partial_sums();
        let mut it = fine.iter().peekable();
        for &c in &coarse {
            loop {
                match it.next() {
                    Some(&f) if f == c => break,
                    Some(&f) if f < c => continue,
                    _ => return false,
                }
            }
        }
        true
    }

    /// All J ⪯ I (merge choices over the k−1 gaps; 2^(k−1) results).
    /// The unit yields itself.
    pub fn coarsenings(&self) -> Vec<Self> {
        let sums = self.partial_sums();
        let k1 = sums.len();
        let n = self.weight();
        let mut out = Vec::with_capacity(1 << k1);
        for mask in 0u64..(1u64 << k1) {
            let subset: Vec<u32> = (0..k1).filter(|&i| mask >> i & 1 == 1).map(|i| sums[i]).collect();
            out.push(Composition::from_subset(n, &subset));
        }
        out
    }

    /// All J ⪰ I (interior-point choices inside each part; ∏ 2^(i_t−1)
    /// results). The unit yields itself.
    pub fn refinements(&self) -> Vec<Self> {
        let n = self.weight();
        let sums = self.partial_sums();
        let mut in_subset = vec![false; n.saturating_sub(1) as usize];
        for &s in &sums {
            in_subset[s as usize - 1] = true;
        }
        let free: Vec<u32> = (1..n).filter(|&s| !in_subset[s as usize - 1]).collect();
        let mut out = Vec::with_capacity(1 << free.len());
        for mask in 0u64..(1u64 << free.len()) {
            let mut subset: Vec<u32> = sums.clone();
            subset.extend((0..free.len()).filter(|&i| mask >> i & 1 == 1).map(|i| free[i]));
            subset.sort_unstable();
            out.push(Composition::from_subset(n, &subset));
        }
        out
    }

    /// All ways to split into consecutive nonempty blocks I_1 ⊔ … ⊔ I_l = I.
    /// The unit yields a single empty splitting.
    pub fn splittings(&self) -> Vec<Vec<Self>> {
        let k = self.len();
        if k == 0 {
            return vec![Vec::new()];
        }
        let mut out = Vec::with_capacity(1 << (k - 1));
        for mask in 0u64..(1u64 << (k - 1)) {
            let mut blocks = Vec::new();
            let mut start = 0usize;
            for gap in 0..k - 1 {
                if mask >> gap & 1 == 1 {
                    blocks.push(Composition::from_raw(self.parts[start..=gap].to_vec()));
                    start = gap + 1;
                }
            }
            blocks.push(Composition::from_raw(self.parts[start..].to_vec()));
            out.push(blocks);
        }
        out
    }

    /// All distinct rearrangements of the parts, in canonical order.
    pub fn rearrangements(&self) -> Vec<Self> {
        let mut sorted = self.parts.clone();
        sorted.sort_unstable();
        let mut out = Vec::new();
        // next_permutation loop over the sorted multiset
        loop {
            out.push(Composition::from_raw(sorted.clone()));
            if !next_permutation(&mut sorted) {
                break;
            }
        }
        out
    }
}

fn next_permutation(v: &mut [u32]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Canonical order: weight, then lexicographic on parts. Within a fixed
/// weight no composition is a prefix of another, so this is total and
/// deterministic; it puts (2,3) before (3,2) before (5).
impl Ord for Composition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| self.parts.cmp(&other.parts))
    }
}

impl PartialOrd for Composition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Composition {
    type Err = Error;

    /// Accepts the canonical form "(i1,i2,...,ik)" (the unit is "()") and
    /// the compact digit form "211" when every part is a single digit.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(inner) = s.strip_prefix('(').and_then(|t| t.strip_suffix(')')) {
            let inner = inner.trim();
            if inner.is_empty() {
                return Ok(Composition::unit());
            }
            let parts = inner
                .split(',')
                .map(|tok| {
                    tok.trim()
                        .parse::<u32>()
                        .map_err(|_| Error::parse(format!("bad composition part `{tok}` in `{s}`")))
                })
                .collect::<Result<Vec<_>>>()?;
            return Composition::new(parts);
        }
        if !s.is_empty() && s.chars().all(|c| c.is_ascii_digit()) {
            let parts: Vec<u32> = s.chars().map(|c| c.to_digit(10).unwrap()).collect();
            return Composition::new(parts);
        }
        Err(Error::parse(format!("bad composition `{s}`")))
    }
}

/// Möbius function of the refinement poset: (−1)^(ℓ(I)−ℓ(J)) when J ⪯ I,
/// else 0.
pub fn mobius(j: &Composition, i: &Composition) -> i64 {
    // J ⪯ I means I refines J.
    if !i.refines(j) {
        return 0;
    }
    if (i.len() - j.len()) % 2 == 0 {
        1
    } else {
        -1
    }
}

/// The alternating binomial statistic
/// C(I) = Σ_{j=1}^{k−1} (−1)^(i_1+…+i_j) · binom(|I|, i_1+…+i_j),
/// defined for length ≥ 2 and odd weight. Changes sign under reversal
/// and under duality.
pub fn c_statistic(i: &Composition) -> Result<BigInt> {
    if i.len() < 2 {
        return Err(Error::domain("C(I) requires length ≥ 2"));
    }
    let n = i.weight();
    if n % 2 == 0 {
        return Err(Error::domain("C(I) requires odd weight"));
    }
    let mut total = BigInt::from(0);
    let mut partial = 0u32;
    for &p in &i.parts()[..i.len() - 1] {
        partial += p;
        let term = binomial(n as u64, partial as u64);
        if partial % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    Ok(total)
}

/// All compositions of weight `n` in canonical order (the unit for n = 0).
pub fn compositions_of_weight(n: u32) -> Vec<Composition> {
    if n == 0 {
        return vec![Composition::unit()];
    }
    let mut out: Vec<Composition> = (0u64..(1u64 << (n - 1)))
        .map(|mask| {
            let subset: Vec<u32> = (1..n).filter(|&s| mask >> (s - 1) & 1 == 1).collect();
            Composition::from_subset(n, &subset)
        })
        .collect();
    out.sort();
    out
}

/// All nonempty compositions of weight 1..=n in canonical order.
pub fn compositions_up_to_weight(n: u32) -> Vec<Composition> {
    (1..=n).flat_map(compositions_of_weight).collect()
}
