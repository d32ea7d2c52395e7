//! Evaluators for multiple harmonic sums A_I(n) (strict indices) and
//! S_I(n) (weak indices): exact rationals for small n, and a layered
//! prefix-sum evaluator over Z/pZ at n = p−1.

mod eval;
mod expand;
mod height;
mod seq;
mod symcheck;
mod table;

pub use eval::{eval_exact, eval_mod_p, exact_sum_sequence, SumKind};
pub use expand::{a_as_s_products, a_to_s, chi_p, s_as_a_products, s_to_a};
pub use height::{height_one_exact, height_one_mod_p};
pub use seq::RationalSeq;
pub use symcheck::{symmetric_sum_check_exact, symmetric_sum_check_mod, SymmetricSumCheck, SymmetricSumResidues};
pub use table::SumTable;
