//! Integral quasi-symmetric functions and mod-p multiple harmonic sums.
//!
//! The crate has three layers:
//!
//! * [`composition`], [`word`], [`set_partition`] — the combinatorial
//!   index objects: compositions with their refinement poset, duality and
//!   reversal involutions, words over {x, y}, and set partitions.
//! * [`qsym`] — the Hopf algebra of quasi-symmetric functions over Z:
//!   stuffle multiplication, the M/E/F bases, coproduct, antipode, the ψ
//!   involution, and the truncated polynomial expansion used as a ground
//!   truth oracle.
//! * [`modp`], [`mhs`], [`congruence`] — prime fields, evaluators for
//!   multiple harmonic sums A_I(n) and S_I(n) (exact and at n = p−1 in
//!   Z/pZ), and a table-driven verification engine for harmonic-sum
//!   congruences with rational-coefficient fitting across primes.

pub mod arith;
pub mod composition;
pub mod congruence;
pub mod error;
pub mod mhs;
pub mod modp;
pub mod qsym;
pub mod set_partition;
pub mod word;

pub use composition::{c_statistic, compositions_of_weight, compositions_up_to_weight, mobius, Composition};
pub use error::{Error, Result};
pub use modp::{ExactRational, PrimeCtx, Residue};
pub use set_partition::{set_partitions, SetPartition};
pub use word::{composition_of, word_of, Letter, Word};
