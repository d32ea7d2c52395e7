//! Finite rational sequences and the Σ (partial sum) and ∇ (binomial
//! transform) operators, which generate a dihedral action: ∇² = id and
//! Σ∇ = ∇Σ^(−1).

use num_traits::Zero;

use crate::arith::binomial;
use crate::composition::Composition;
use crate::mhs::eval::{exact_sum_sequence, SumKind};
use crate::modp::ExactRational;

/// Initial terms a(0), a(1), …, a(N) of a rational sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalSeq {
    values: Vec<ExactRational>,
}

impl RationalSeq {
    pub fn new(values: Vec<ExactRational>) -> Self {
        RationalSeq { values }
    }

    /// The sequence n ↦ Sum_I(n), n = 0..=n_max.
    pub fn from_sum(kind: SumKind, i: &Composition, n_max: u64) -> Self {
        RationalSeq { values: exact_sum_sequence(kind, i, n_max) }
    }

    pub fn values(&self) -> &[ExactRational] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn get(&self, n: usize) -> &ExactRational {
        &self.values[n]
    }

    /// Σa(n) = Σ_{i=0}^n a(i).
    pub fn sigma(&self) -> RationalSeq {
        let mut acc = ExactRational::zero();
        RationalSeq {
            values: self
                .values
                .iter()
                .map(|v| {
                    acc += v;
                    acc.clone()
                })
                .collect(),
        }
    }

    /// ∇a(n) = Σ_{i=0}^n binom(n,i) (−1)^i a(i).
    pub fn nabla(&self) -> RationalSeq {
        let values = (0..self.values.len())
            .map(|n| {
                let mut acc = ExactRational::zero();
                for (i, v) in self.values.iter().take(n + 1).enumerate() {
                    let mut b = binomial(n as u64, i as u64);
                    if i % 2 == 1 {
                        b = -b;
                    }
                    acc += ExactRational::from(b) * v;
                }
                acc
            })
            .collect();
        RationalSeq { values }
    }

    pub fn neg(&self) -> RationalSeq {
        RationalSeq { values: self.values.iter().map(|v| -v.clone()).collect() }
    }
}
