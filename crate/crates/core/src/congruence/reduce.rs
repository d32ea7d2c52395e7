//! Claimed congruences between harmonic sums, and the symbolic reduction
//! formulas for short lengths: double sums to S(n−1,1) via Bernoulli
//! numbers, triple sums via the C(I) statistic, and the length-4/length-5
//! recursions that trade a sum for shorter sums and products.

use num_bigint::BigInt;
use num_traits::One;

use crate::arith::binomial;
use crate::composition::{c_statistic, Composition};
use crate::error::{Error, Result};
use crate::mhs::SumTable;
use crate::modp::ExactRational;

use super::combo::GenCombo;
use super::genexpr::GenExpr;

/// A claimed identity `lhs ≡ rhs mod p`, valid for primes p > bound.
#[derive(Clone, Debug)]
pub struct Congruence {
    pub label: String,
    pub lhs: GenExpr,
    pub rhs: GenCombo,
    pub bound: u64,
}

/// Outcome of checking one congruence at one prime.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CheckOutcome {
    Pass,
    Fail { lhs: u64, rhs: u64 },
    Skipped { reason: String },
}

impl Congruence {
    pub fn new(label: impl Into<String>, lhs: GenExpr, rhs: GenCombo, bound: u64) -> Self {
        let congruence = Congruence { label: label.into(), lhs, rhs, bound };
        debug_assert!(
            congruence
                .rhs
                .homogeneous_weight()
                .map_or(true, |w| w == congruence.lhs.weight()),
            "inhomogeneous congruence {}",
            congruence.label
        );
        congruence
    }

    /// Evaluates both sides at the table's prime. Primes at or below the
    /// bound, or dividing a coefficient denominator, give `Skipped`.
    pub fn check_at(&self, table: &mut SumTable) -> CheckOutcome {
        let p = table.ctx().p();
        if p <= self.bound {
            return CheckOutcome::Skipped { reason: format!("needs p > {}", self.bound) };
        }
        let lhs = self.lhs.eval(table);
        match self.rhs.eval(table) {
            Ok(rhs) if lhs == rhs => CheckOutcome::Pass,
            Ok(rhs) => CheckOutcome::Fail { lhs: lhs.value(), rhs: rhs.value() },
            Err(Error::DenominatorDivisible { den, .. }) => CheckOutcome::Skipped {
                reason: format!("p = {p} divides coefficient denominator {den}"),
            },
            Err(e) => CheckOutcome::Skipped { reason: e.to_string() },
        }
    }
}

fn sign_rational(exp: u32) -> ExactRational {
    if exp % 2 == 0 {
        ExactRational::one()
    } else {
        -ExactRational::one()
    }
}

fn rat(n: BigInt) -> ExactRational {
    ExactRational::from(n)
}

/// S(i,j) ≡ ((−1)^i / (i+j)) · binom(i+j, i) · S(i+j−1, 1) for odd weight,
/// and 0 for even weight; valid for p > i+j+1.
pub fn reduce_double(i: u32, j: u32) -> Congruence {
    assert!(i >= 1 && j >= 1, "parts must be positive");
    let n = i + j;
    let lhs = GenExpr::weak(Composition::from_raw(vec![i, j]));
    let rhs = if n % 2 == 1 {
        let coeff = sign_rational(i) * rat(binomial(n as u64, i as u64))
            / rat(BigInt::from(n));
        GenCombo::from_term(coeff, GenExpr::weak(Composition::from_raw(vec![n - 1, 1])))
    } else {
        GenCombo::zero()
    };
    Congruence::new(format!("S({i},{j}) reduction"), lhs, rhs, (n + 1) as u64)
}

/// S(i,j,k) ≡ C(I)/(2n) · S(n−1, 1) for odd n = i+j+k; p > n+1.
pub fn reduce_triple(i: u32, j: u32, k: u32) -> Result<Congruence> {
    assert!(i >= 1 && j >= 1 && k >= 1, "parts must be positive");
    let n = i + j + k;
    if n % 2 == 0 {
        return Err(Error::domain("triple reduction requires odd weight"));
    }
    let comp = Composition::from_raw(vec![i, j, k]);
    let coeff = rat(c_statistic(&comp)?) / rat(BigInt::from(2 * n));
    let rhs = GenCombo::from_term(coeff, GenExpr::weak(Composition::from_raw(vec![n - 1, 1])));
    Ok(Congruence::new(
        format!("S({i},{j},{k}) reduction"),
        GenExpr::weak(comp),
        rhs,
        (n + 1) as u64,
    ))
}

/// 2·S(i,j,k,l) ≡ S(i+j,k,l) + S(i,j+k,l) + S(i,j,k+l) + S(i,j)·S(k,l)
/// for even n = i+j+k+l; p > n+1. Stated with lhs S(i,j,k,l) and halved
/// right-hand side.
pub fn reduce_quad_even(i: u32, j: u32, k: u32, l: u32) -> Result<Congruence> {
    assert!(i >= 1 && j >= 1 && k >= 1 && l >= 1, "parts must be positive");
    let n = i + j + k + l;
    if n % 2 == 1 {
        return Err(Error::domain("length-4 reduction requires even weight"));
    }
    let half = ExactRational::new(BigInt::one(), BigInt::from(2));
    let mut rhs = GenCombo::zero();
    rhs.add_term(half.clone(), GenExpr::weak(Composition::from_raw(vec![i + j, k, l])));
    rhs.add_term(half.clone(), GenExpr::weak(Composition::from_raw(vec![i, j + k, l])));
    rhs.add_term(half.clone(), GenExpr::weak(Composition::from_raw(vec![i, j, k + l])));
    rhs.add_term(
        half,
        GenExpr::weak(Composition::from_raw(vec![i, j]))
            .mul(&GenExpr::weak(Composition::from_raw(vec![k, l]))),
    );
    Ok(Congruence::new(
        format!("S({i},{j},{k},{l}) reduction"),
        GenExpr::weak(Composition::from_raw(vec![i, j, k, l])),
        rhs,
        (n + 1) as u64,
    ))
}

/// 2·S(I) for I = (i,j,k,l,m) of odd weight n: the four adjacent merges,
/// minus C(I)/(2n)·S(n−1,1), plus S(i,j)·S(k,l,m) + S(i,j,k)·S(l,m);
/// p > n+1. Stated with lhs S(I) and halved right-hand side.
pub fn reduce_quint_odd(i: u32, j: u32, k: u32, l: u32, m: u32) -> Result<Congruence> {
    assert!(
        i >= 1 && j >= 1 && k >= 1 && l >= 1 && m >= 1,
        "parts must be positive"
    );
    let n = i + j + k + l + m;
    if n % 2 == 0 {
        return Err(Error::domain("length-5 reduction requires odd weight"));
    }
    let comp = Composition::from_raw(vec![i, j, k, l, m]);
    let half = ExactRational::new(BigInt::one(), BigInt::from(2));
    let mut rhs = GenCombo::zero();
    for merged in [
        vec![i + j, k, l, m],
        vec![i, j + k, l, m],
        vec![i, j, k + l, m],
        vec![i, j, k, l + m],
    ] {
        rhs.add_term(half.clone(), GenExpr::weak(Composition::from_raw(merged)));
    }
    let c_coeff = rat(c_statistic(&comp)?) / rat(BigInt::from(2 * n));
    rhs.add_term(
        -c_coeff * &half,
        GenExpr::weak(Composition::from_raw(vec![n - 1, 1])),
    );
    rhs.add_term(
        half.clone(),
        GenExpr::weak(Composition::from_raw(vec![i, j]))
            .mul(&GenExpr::weak(Composition::from_raw(vec![k, l, m]))),
    );
    rhs.add_term(
        half,
        GenExpr::weak(Composition::from_raw(vec![i, j, k]))
            .mul(&GenExpr::weak(Composition::from_raw(vec![l, m]))),
    );
    Ok(Congruence::new(
        format!("S({i},{j},{k},{l},{m}) reduction"),
        GenExpr::weak(comp),
        rhs,
        (n + 1) as u64,
    ))
}
