//! The truncation homomorphism into Z[t_1,…,t_n]: the ground-truth oracle
//! for the stuffle product (it is literally multiplication of
//! quasi-symmetric polynomials).

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::qsym::QSymElem;

/// A sparse polynomial in n_vars commuting variables with integer
/// coefficients; keys are exponent vectors of fixed length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedPoly {
    n_vars: usize,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl TruncatedPoly {
    pub fn zero(n_vars: usize) -> Self {
        TruncatedPoly { n_vars, terms: BTreeMap::new() }
    }

    pub fn one(n_vars: usize) -> Self {
        let mut p = Self::zero(n_vars);
        p.add_monomial(vec![0; n_vars], BigInt::one());
        p
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &BigInt)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_monomial(&mut self, exponents: Vec<u32>, coeff: BigInt) {
        assert_eq!(exponents.len(), self.n_vars, "exponent vector length");
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exponents) {
            Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += coeff;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &TruncatedPoly) -> TruncatedPoly {
        assert_eq!(self.n_vars, other.n_vars);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_monomial(e.clone(), c.clone());
        }
        out
    }

    /// Naive sparse convolution; fine for the oracle sizes used here.
    pub fn mul(&self, other: &TruncatedPoly) -> TruncatedPoly {
        assert_eq!(self.n_vars, other.n_vars);
        let mut out = TruncatedPoly::zero(self.n_vars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let exps: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_monomial(exps, ca * cb);
            }
        }
        out
    }
}

impl fmt::Display for TruncatedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (exps, c)) in self.terms.iter().enumerate() {
            if idx > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}")?;
            for (v, &e) in exps.iter().enumerate() {
                if e == 1 {
                    write!(f, "*t{}", v + 1)?;
                } else if e > 1 {
                    write!(f, "*t{}^{}", v + 1, e)?;
                }
            }
        }
        Ok(())
    }
}

/// Calls `f` on every strictly increasing k-tuple of indices in 0..n.
fn for_each_combination(n: usize, k: usize, mut f: impl FnMut(&[usize])) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        f(&idx);
        if k == 0 {
            return;
        }
        // Find the rightmost index that can still move up.
        let mut t = k - 1;
        while idx[t] == t + n - k {
            if t == 0 {
                return;
            }
            t -= 1;
        }
        idx[t] += 1;
        for u in t + 1..k {
            idx[u] = idx[u - 1] + 1;
        }
    }
}

/// φ_n: expands an element into the quasi-symmetric polynomial in
/// t_1,…,t_n. Words longer than n map to zero; injective through degree n.
pub fn expand_phi(e: &QSymElem, n_vars: usize) -> TruncatedPoly {
    let m = e.to_m();
    let mut out = TruncatedPoly::zero(n_vars);
    for (i, c) in m.terms() {
        let k = i.len();
        if k > n_vars {
            continue;
        }
        // all increasing index tuples 1 ≤ n_1 < … < n_k ≤ n
        for_each_combination(n_vars, k, |idx| {
            let mut exps = vec![0u32; n_vars];
            for (slot, &pos) in idx.iter().enumerate() {
                exps[pos] = i.parts()[slot];
            }
            out.add_monomial(exps, c.clone());
        });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::composition::{compositions_of_weight, Composition};
    use crate::qsym::Basis;

    fn m(parts: &[u32]) -> QSymElem {
        QSymElem::generator(Basis::M, Composition::new(parts.to_vec()).unwrap())
    }

    #[test]
    fn phi_of_m1_in_two_vars() {
        let p = expand_phi(&m(&[1]), 2);
        let mut want = TruncatedPoly::zero(2);
        want.add_monomial(vec![1, 0], BigInt::one());
        want.add_monomial(vec![0, 1], BigInt::one());
        assert_eq!(p, want);
    }

    #[test]
    fn phi_of_m11_in_two_vars() {
        let p = expand_phi(&m(&[1, 1]), 2);
        let mut want = TruncatedPoly::zero(2);
        want.add_monomial(vec![1, 1], BigInt::one());
        assert_eq!(p, want);
    }

    #[test]
    fn phi_kills_long_words() {
        assert!(expand_phi(&m(&[1, 1, 1]), 2).is_zero());
        assert_eq!(expand_phi(&QSymElem::unit(Basis::M), 3), TruncatedPoly::one(3));
    }

    #[test]
    fn phi_is_multiplicative_example() {
        // φ_3(M_1 * M_1) = (t1+t2+t3)^2 = φ_3(2M_(1,1) + M_(2))
        let m1 = m(&[1]);
        let prod = m1.stuffle(&m1).unwrap();
        let lhs = expand_phi(&prod, 3);
        let rhs = expand_phi(&m1, 3).mul(&expand_phi(&m1, 3));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn phi_homomorphism_small_sweep() {
        // Full sweep at total weight ≤ 6 lives in the acceptance suite.
        let comps: Vec<Composition> = (1..=4u32).flat_map(compositions_of_weight).collect();
        for i in &comps {
            for j in &comps {
                if i.weight() + j.weight() > 4 {
                    continue;
                }
                let a = QSymElem::generator(Basis::M, i.clone());
                let b = QSymElem::generator(Basis::M, j.clone());
                let lhs = expand_phi(&a.stuffle(&b).unwrap(), 4);
                let rhs = expand_phi(&a, 4).mul(&expand_phi(&b, 4));
                assert_eq!(lhs, rhs, "{i} * {j}");
            }
        }
    }

    #[test]
    fn phi_injective_through_degree_n() {
        // Distinct compositions of weight ≤ n have distinct images.
        let n = 4;
        let comps = compositions_of_weight(4);
        for a in &comps {
            for b in &comps {
                if a != b {
                    assert_ne!(
                        expand_phi(&QSymElem::generator(Basis::M, a.clone()), n),
                        expand_phi(&QSymElem::generator(Basis::M, b.clone()), n),
                        "{a} vs {b}"
                    );
                }
            }
        }
    }
}
