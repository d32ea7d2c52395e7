//! The congruence laboratory: symbolic reduction formulas for short
//! sums, the shipped weight tables with their verification sweeps, a
//! registry of named theorem checks, and rational-coefficient fitting
//! across primes.

mod combo;
mod fit;
mod genexpr;
mod reduce;
mod reducer;
mod registry;
mod report;
mod tables;

pub use combo::GenCombo;
pub use fit::{fit_coefficients, rational_reconstruct, FitCaps, FitOutcome};
pub use genexpr::GenExpr;
pub use reduce::{
    reduce_double, reduce_quad_even, reduce_quint_odd, reduce_triple, CheckOutcome, Congruence,
};
pub use reducer::Reducer;
pub use registry::{
    check_all, check_theorem, generator_values, theorem_ids, verify_weight_table, CheckConfig,
};
pub use report::{Instance, Status, VerificationReport};
pub use tables::{TableSet, WeightTable};
