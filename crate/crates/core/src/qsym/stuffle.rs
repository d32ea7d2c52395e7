//! The stuffle product, computed by the z-word recursion
//!
//! ```text
//! z_p w1 * z_q w2 = z_p (w1 * z_q w2) + z_q (z_p w1 * w2) + z_{p+q} (w1 * w2)
//! ```
//!
//! with a per-thread memo table keyed by (unordered) word pairs.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::rc::Rc;

use num_bigint::BigInt;
use num_traits::One;

use crate::composition::Composition;
use crate::error::{Error, Result};
use crate::qsym::{Basis, QSymElem};

type WordProduct = Rc<Vec<(Vec<u32>, BigInt)>>;

thread_local! {
    static MEMO: RefCell<HashMap<(Vec<u32>, Vec<u32>), WordProduct>> =
        RefCell::new(HashMap::new());
}

/// Stuffle product of two basis words, as composition/coefficient pairs.
pub(crate) fn stuffle_words(a: &[u32], b: &[u32]) -> WordProduct {
    if a.is_empty() {
        return Rc::new(vec![(b.to_vec(), BigInt::one())]);
    }
    if b.is_empty() {
        return Rc::new(vec![(a.to_vec(), BigInt::one())]);
    }
    // The product is commutative; normalize the key.
    let key = if a <= b {
        (a.to_vec(), b.to_vec())
    } else {
        (b.to_vec(), a.to_vec())
    };
    if let Some(hit) = MEMO.with(|m| m.borrow().get(&key).cloned()) {
        return hit;
    }
    let (a, b) = (&key.0[..], &key.1[..]);
    let (p, q) = (a[0], b[0]);
    let mut acc: BTreeMap<Vec<u32>, BigInt> = BTreeMap::new();
    let branches: [(u32, &[u32], &[u32]); 3] =
        [(p, &a[1..], b), (q, a, &b[1..]), (p + q, &a[1..], &b[1..])];
    for (head, left, right) in branches {
        for (word, coeff) in stuffle_words(left, right).iter() {
            let mut w = Vec::with_capacity(word.len() + 1);
            w.push(head);
            w.extend_from_slice(word);
            *acc.entry(w).or_default() += coeff;
        }
    }
    let result: WordProduct = Rc::new(acc.into_iter().collect());
    MEMO.with(|m| m.borrow_mut().insert(key, result.clone()));
    result
}

impl QSymElem {
    /// The stuffle product. Both operands must be in the M basis.
    pub fn stuffle(&self, other: &QSymElem) -> Result<QSymElem> {
        if self.basis() != Basis::M || other.basis() != Basis::M {
            return Err(Error::BasisMismatch {
                expected: "M",
                found: if self.basis() != Basis::M {
                    self.basis().name()
                } else {
                    other.basis().name()
                },
            });
        }
        let mut out = QSymElem::zero(Basis::M);
        for (i, ci) in self.terms() {
            for (j, cj) in other.terms() {
                let scale = ci * cj;
                for (word, c) in stuffle_words(i.parts(), j.parts()).iter() {
                    out.add_term(Composition::from_raw(word.clone()), c * &scale);
                }
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::composition::compositions_of_weight;

    fn c(parts: &[u32]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    fn m(parts: &[u32]) -> QSymElem {
        QSymElem::generator(Basis::M, c(parts))
    }

    #[test]
    fn product_of_single_parts() {
        let got = m(&[2]).stuffle(&m(&[3])).unwrap();
        let want: QSymElem = "M(2,3) + M(3,2) + M(5)".parse().unwrap();
        assert_eq!(got, want);
    }

    #[test]
    fn unit_is_identity() {
        let e = m(&[3, 1]).add(&m(&[2]).scale(&BigInt::from(-4)));
        assert_eq!(QSymElem::unit(Basis::M).stuffle(&e).unwrap(), e);
        assert_eq!(e.stuffle(&QSymElem::unit(Basis::M)).unwrap(), e);
    }

    #[test]
    fn square_of_m1() {
        let got = m(&[1]).stuffle(&m(&[1])).unwrap();
        let want: QSymElem = "2*M(1,1) + M(2)".parse().unwrap();
        assert_eq!(got, want);
    }

    #[test]
    fn rejects_other_bases() {
        let e = QSymElem::generator(Basis::E, c(&[2]));
        assert!(e.stuffle(&e).is_err());
        assert!(m(&[2]).stuffle(&e).is_err());
    }

    #[test]
    fn commutative_and_associative_exhaustive_weight_5() {
        let words: Vec<Composition> = (1..=5u32).flat_map(compositions_of_weight).collect();
        for i in &words {
            for j in &words {
                if i.weight() + j.weight() > 5 {
                    continue;
                }
                let a = QSymElem::generator(Basis::M, i.clone());
                let b = QSymElem::generator(Basis::M, j.clone());
                assert_eq!(a.stuffle(&b).unwrap(), b.stuffle(&a).unwrap(), "{i} * {j}");
                for k in &words {
                    if i.weight() + j.weight() + k.weight() > 5 {
                        continue;
                    }
                    let cc = QSymElem::generator(Basis::M, k.clone());
                    let left = a.stuffle(&b).unwrap().stuffle(&cc).unwrap();
                    let right = a.stuffle(&b.stuffle(&cc).unwrap()).unwrap();
                    assert_eq!(left, right, "({i} * {j}) * {k}");
                }
            }
        }
    }

    #[test]
    fn grading_is_additive() {
        let a = m(&[2, 1]);
        let b = m(&[1, 1]);
        let prod = a.stuffle(&b).unwrap();
        assert!(prod.terms().all(|(comp, _)| comp.weight() == 5));
    }
}
