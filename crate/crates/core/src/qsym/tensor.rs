//! The deconcatenation coproduct and its tensor-square codomain.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::composition::Composition;
use crate::error::{Error, Result};
use crate::qsym::{Basis, QSymElem};

/// A sparse element of QSym ⊗ QSym, indexed by pairs of compositions.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct TensorElem {
    terms: BTreeMap<(Composition, Composition), BigInt>,
}

impl TensorElem {
    pub fn zero() -> Self {
        TensorElem::default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Composition, Composition), &BigInt)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, left: Composition, right: Composition, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry((left, right)) {
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

    pub fn add(&self, other: &TensorElem) -> TensorElem {
        let mut out = self.clone();
        for ((l, r), c) in &other.terms {
            out.add_term(l.clone(), r.clone(), c.clone());
        }
        out
    }

    /// Swaps the tensor factors (the opposite coproduct).
    pub fn flip(&self) -> TensorElem {
        let mut out = TensorElem::zero();
        for ((l, r), c) in &self.terms {
            out.add_term(r.clone(), l.clone(), c.clone());
        }
        out
    }

    /// Applies a linear map factorwise: Σ c·(J ⊗ K) ↦ Σ c·(f(J) ⊗ f(K)),
    /// where f sends a single composition to an M-basis element.
    pub fn map_factors(&self, f: impl Fn(&Composition) -> QSymElem) -> TensorElem {
        let mut out = TensorElem::zero();
        for ((l, r), c) in &self.terms {
            let fl = f(l);
            let fr = f(r);
            for (lc, lv) in fl.terms() {
                for (rc, rv) in fr.terms() {
                    out.add_term(lc.clone(), rc.clone(), c * lv * rv);
                }
            }
        }
        out
    }

    /// The outer tensor product of two elements (coefficients multiply).
    pub fn outer(left: &QSymElem, right: &QSymElem) -> TensorElem {
        let mut out = TensorElem::zero();
        for (lc, lv) in left.terms() {
            for (rc, rv) in right.terms() {
                out.add_term(lc.clone(), rc.clone(), lv * rv);
            }
        }
        out
    }
}

impl fmt::Display for TensorElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, ((l, r), c)) in self.terms.iter().enumerate() {
            if idx > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}*{l}(x){r}")?;
        }
        Ok(())
    }
}

impl QSymElem {
    /// Deconcatenation coproduct. Defined on the M and E bases (the same
    /// formula holds in both); F-basis input is rejected.
    pub fn coproduct(&self) -> Result<TensorElem> {
        if self.basis() == Basis::F {
            return Err(Error::BasisMismatch { expected: "M or E", found: "F" });
        }
        let mut out = TensorElem::zero();
        for (i, c) in self.terms() {
            let parts = i.parts();
            for j in 0..=parts.len() {
                out.add_term(
                    Composition::from_raw(parts[..j].to_vec()),
                    Composition::from_raw(parts[j..].to_vec()),
                    c.clone(),
                );
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn c(parts: &[u32]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    fn m(parts: &[u32]) -> QSymElem {
        QSymElem::generator(Basis::M, c(parts))
    }

    #[test]
    fn single_parts_are_primitive() {
        for n in 1..=5u32 {
            let delta = m(&[n]).coproduct().unwrap();
            let mut want = TensorElem::zero();
            want.add_term(Composition::unit(), c(&[n]), BigInt::one());
            want.add_term(c(&[n]), Composition::unit(), BigInt::one());
            assert_eq!(delta, want);
        }
    }

    #[test]
    fn deconcatenation_of_length_two() {
        let delta = m(&[2, 3]).coproduct().unwrap();
        let mut want = TensorElem::zero();
        want.add_term(Composition::unit(), c(&[2, 3]), BigInt::one());
        want.add_term(c(&[2]), c(&[3]), BigInt::one());
        want.add_term(c(&[2, 3]), Composition::unit(), BigInt::one());
        assert_eq!(delta, want);
    }

    #[test]
    fn f_basis_rejected() {
        assert!(QSymElem::generator(Basis::F, c(&[2])).coproduct().is_err());
        assert!(QSymElem::generator(Basis::E, c(&[2])).coproduct().is_ok());
    }

    #[test]
    fn counit_axiom() {
        // (ε ⊗ id)∘Δ = id: collapse left factors through the counit.
        for n in 1..=6u32 {
            for i in crate::composition::compositions_of_weight(n) {
                let e = QSymElem::from_term(Basis::M, i.clone(), BigInt::from(7));
                let delta = e.coproduct().unwrap();
                let mut collapsed = QSymElem::zero(Basis::M);
                for ((l, r), coeff) in delta.terms() {
                    if l.is_empty() {
                        collapsed.add_term(r.clone(), coeff.clone());
                    }
                }
                assert_eq!(collapsed, e, "at {i}");
            }
        }
    }

    #[test]
    fn coassociativity_spot_check() {
        // (Δ ⊗ id)Δ = (id ⊗ Δ)Δ on a length-3 word, by tri-composition counts.
        let e = m(&[1, 2, 3]);
        let delta = e.coproduct().unwrap();
        // Expand both ways into triples.
        let mut left: BTreeMap<(Composition, Composition, Composition), BigInt> = BTreeMap::new();
        let mut right = left.clone();
        for ((a, b), cf) in delta.terms() {
            for ((a1, a2), cf2) in
                QSymElem::generator(Basis::M, a.clone()).coproduct().unwrap().terms()
            {
                *left.entry((a1.clone(), a2.clone(), b.clone())).or_default() += cf * cf2;
            }
            for ((b1, b2), cf2) in
                QSymElem::generator(Basis::M, b.clone()).coproduct().unwrap().terms()
            {
                *right.entry((a.clone(), b1.clone(), b2.clone())).or_default() += cf * cf2;
            }
        }
        left.retain(|_, v| !v.is_zero());
        right.retain(|_, v| !v.is_zero());
        assert_eq!(left, right);
    }
}
