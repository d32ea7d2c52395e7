//! Prime-field arithmetic and the special-number layer: inverses,
//! binomials, Bernoulli numbers and Stirling numbers, exact and mod p.

mod bernoulli;
mod binom;
mod prime;
mod stirling;

pub use bernoulli::{bernoulli_exact, bernoulli_exact_row, bernoulli_mod_p, bernoulli_row_mod_p};
pub use binom::{binom_mod, power_sum_mod};
pub use prime::{
    inv_mod, is_prime_u64, mul_mod, pow_mod, primes_in_range, PrimeCtx, Residue,
};
pub use stirling::{
    stirling1, stirling1_mod, stirling1_row_mod, stirling2, stirling2_mod, stirling2_row_mod,
};

/// Exact rational numbers: always reduced, denominator positive.
pub type ExactRational = num_rational::BigRational;
