//! Fitting rational coefficients to congruence data across primes.
//!
//! Each prime contributes one linear congruence between the target value
//! and the generator values. With one generator this pins the coefficient
//! mod each prime: solve per prime, Chinese-remainder, then bounded
//! rational reconstruction. With several generators the per-prime systems
//! are underdetermined; their combined solution set is the integer kernel
//! lattice of the congruences, so we build that lattice, LLL-reduce it,
//! and search the short vectors for an all-small-rational solution. The
//! last supplied prime is always held out for cross-validation.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::mhs::SumTable;
use crate::modp::{inv_mod, ExactRational, PrimeCtx};

use super::genexpr::GenExpr;

/// Caps for reconstructed coefficients. The denominator cap reflects the
/// table coefficients (largest shipped denominator is 648); anything
/// bigger is reconstruction noise.
#[derive(Clone, Copy, Debug)]
pub struct FitCaps {
    pub max_num: u64,
    pub max_den: u64,
}

impl Default for FitCaps {
    fn default() -> Self {
        FitCaps { max_num: 1_000_000, max_den: 10_000 }
    }
}

/// The fitted coefficients plus the prime they were validated on.
#[derive(Clone, Debug)]
pub struct FitOutcome {
    pub coefficients: Vec<ExactRational>,
    pub validation_prime: u64,
}

/// Per-prime evaluation data: generator values and the target value.
struct PrimeRow {
    p: u64,
    values: Vec<u64>,
    target: u64,
}

/// Fits `target ≡ Σ c_g · generators[g]` with fixed rational c_g across
/// the given primes, holding out the last prime for validation.
pub fn fit_coefficients(
    target: &GenExpr,
    generators: &[GenExpr],
    primes: &[u64],
    caps: FitCaps,
) -> Result<FitOutcome> {
    if generators.is_empty() {
        return Err(Error::FitDegenerate("no generators supplied".into()));
    }
    if primes.len() < 2 {
        return Err(Error::FitDegenerate("need at least two primes".into()));
    }
    let weight = target.weight();
    if generators.iter().any(|g| g.weight() != weight) {
        return Err(Error::FitDegenerate(format!(
            "generators must match the target weight {weight}"
        )));
    }
    for &p in primes {
        if p <= weight as u64 + 1 {
            return Err(Error::FitDegenerate(format!(
                "prime {p} is not above the weight bound {}",
                weight + 1
            )));
        }
    }
    let rows: Vec<PrimeRow> = primes
        .iter()
        .map(|&p| {
            let ctx = PrimeCtx::new(p)?;
            let mut sums = SumTable::new(&ctx);
            Ok(PrimeRow {
                p,
                values: generators.iter().map(|g| g.eval(&mut sums).value()).collect(),
                target: target.eval(&mut sums).value(),
            })
        })
        .collect::<Result<_>>()?;
    let (holdout, fit_rows) = rows.split_last().expect("len >= 2");

    let coefficients = if generators.len() == 1 {
        vec![fit_single(fit_rows, caps)?]
    } else {
        fit_lattice(fit_rows, generators.len(), caps)?
    };
    // Cross-validate everywhere, including the held-out prime.
    for row in &rows {
        match validate_row(&coefficients, row) {
            Some(true) => {}
            Some(false) => return Err(Error::FitNeedMorePrimes),
            None => {} // prime divides a denominator; cannot check there
        }
    }
    if validate_row(&coefficients, holdout).is_none() {
        return Err(Error::FitDegenerate(format!(
            "validation prime {} divides a coefficient denominator",
            holdout.p
        )));
    }
    Ok(FitOutcome { coefficients, validation_prime: holdout.p })
}

fn validate_row(coefficients: &[ExactRational], row: &PrimeRow) -> Option<bool> {
    let ctx = PrimeCtx::new(row.p).expect("validated prime");
    let mut acc = ctx.zero();
    for (c, &v) in coefficients.iter().zip(&row.values) {
        match ctx.res_rational(c) {
            Ok(r) => acc += r * ctx.res(v),
            Err(_) => return None,
        }
    }
    Some(acc == ctx.res(row.target))
}

// ---------------------------------------------------------------------
// single generator: per-prime division, CRT, rational reconstruction

fn fit_single(rows: &[PrimeRow], caps: FitCaps) -> Result<ExactRational> {
    let mut residues: Vec<(BigInt, BigInt)> = Vec::new(); // (c mod p, p)
    for row in rows {
        let v = row.values[0];
        if v == 0 {
            if row.target != 0 {
                return Err(Error::FitInconsistent);
            }
            continue; // no information at this prime
        }
        let c = (row.target as u128 * inv_mod(v, row.p).expect("v != 0") as u128
            % row.p as u128) as u64;
        residues.push((BigInt::from(c), BigInt::from(row.p)));
    }
    if residues.is_empty() {
        return Err(Error::FitDegenerate(
            "the generator vanishes at every fitting prime".into(),
        ));
    }
    let (value, modulus) = crt_combine(&residues);
    rational_reconstruct(&value, &modulus, caps).ok_or(Error::FitNeedMorePrimes)
}

fn crt_combine(residues: &[(BigInt, BigInt)]) -> (BigInt, BigInt) {
    let mut value = residues[0].0.clone();
    let mut modulus = residues[0].1.clone();
    for (r, p) in &residues[1..] {
        // x ≡ value (mod modulus), x ≡ r (mod p)
        let inv = mod_inverse_big(&modulus, p).expect("distinct primes");
        let diff = ((r - &value) % p + p) % p;
        value += &modulus * ((diff * inv) % p);
        modulus *= p;
        value %= &modulus;
    }
    (value, modulus)
}

fn mod_inverse_big(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.extended_gcd(m);
    if !e.gcd.is_one() {
        return None;
    }
    Some(((e.x % m) + m) % m)
}

/// Half-extended Euclid: the unique rational a/b with a ≡ value·b mod
/// modulus and |a|, b below the caps (and √(M/2)), when one exists.
pub fn rational_reconstruct(
    value: &BigInt,
    modulus: &BigInt,
    caps: FitCaps,
) -> Option<ExactRational> {
    let bound = (modulus / BigInt::from(2)).sqrt();
    let mut r0 = modulus.clone();
    let mut r1 = ((value % modulus) + modulus) % modulus;
    let mut t0 = BigInt::zero();
    let mut t1 = BigInt::one();
    while r1 > bound {
        let q = &r0 / &r1;
        let r = &r0 - &q * &r1;
        r0 = std::mem::replace(&mut r1, r);
        let t = &t0 - &q * &t1;
        t0 = std::mem::replace(&mut t1, t);
    }
    if t1.is_zero() {
        return None;
    }
    let (num, den) = if t1.is_negative() { (-r1, -t1) } else { (r1, t1) };
    if den > BigInt::from(caps.max_den) || num.abs() > BigInt::from(caps.max_num) || den > bound.max(BigInt::one())
    {
        return None;
    }
    if !num.gcd(&den).is_one() {
        return None;
    }
    Some(ExactRational::new(num, den))
}

// ---------------------------------------------------------------------
// several generators: kernel lattice + LLL

fn fit_lattice(rows: &[PrimeRow], k: usize, caps: FitCaps) -> Result<Vec<ExactRational>> {
    let dim = k + 1;
    let mut basis: Vec<Vec<BigInt>> = (0..dim)
        .map(|i| (0..dim).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect();
    for row in rows {
        // z · (v_1, …, v_k, −t) ≡ 0 mod p
        let mut w: Vec<u64> = row.values.clone();
        w.push((row.p - row.target % row.p) % row.p);
        constrain(&mut basis, &w, row.p);
        lll(&mut basis);
    }
    // Candidates: reduced basis vectors and pairwise combinations of the
    // three shortest.
    let mut candidates = basis.clone();
    let mut sorted = basis.clone();
    sorted.sort_by_key(norm_sq);
    for i in 0..sorted.len().min(3) {
        for j in i + 1..sorted.len().min(3) {
            let sum: Vec<BigInt> = sorted[i].iter().zip(&sorted[j]).map(|(a, b)| a + b).collect();
            let diff: Vec<BigInt> = sorted[i].iter().zip(&sorted[j]).map(|(a, b)| a - b).collect();
            candidates.push(sum);
            candidates.push(diff);
        }
    }
    candidates.sort_by_key(norm_sq);
    for z in &candidates {
        let b = z[k].clone();
        if b.is_zero() {
            continue;
        }
        let (b, numerators): (BigInt, Vec<BigInt>) = if b.is_negative() {
            (-b, z[..k].iter().map(|a| -a).collect())
        } else {
            (b, z[..k].to_vec())
        };
        let coefficients: Vec<ExactRational> = numerators
            .into_iter()
            .map(|a| ExactRational::new(a, b.clone()))
            .collect();
        let within_caps = coefficients.iter().all(|c| {
            c.denom() <= &BigInt::from(caps.max_den) && c.numer().abs() <= BigInt::from(caps.max_num)
        });
        if !within_caps {
            continue;
        }
        if rows.iter().all(|row| validate_row(&coefficients, row) == Some(true)) {
            return Ok(coefficients);
        }
    }
    Err(Error::FitNeedMorePrimes)
}

/// Intersects the lattice with {z : z·w ≡ 0 mod p}.
fn constrain(basis: &mut [Vec<BigInt>], w: &[u64], p: u64) {
    let pbig = BigInt::from(p);
    let dot = |row: &[BigInt]| -> u64 {
        let mut acc = BigInt::zero();
        for (a, &b) in row.iter().zip(w) {
            acc += a * BigInt::from(b);
        }
        (((acc % &pbig) + &pbig) % &pbig).try_into().expect("reduced mod p")
    };
    let dots: Vec<u64> = basis.iter().map(|r| dot(r)).collect();
    let Some(pivot) = dots.iter().position(|&d| d != 0) else {
        return; // constraint already satisfied
    };
    let pivot_inv = inv_mod(dots[pivot], p).expect("nonzero mod prime");
    let pivot_row = basis[pivot].clone();
    for (j, row) in basis.iter_mut().enumerate() {
        if j == pivot || dots[j] == 0 {
            continue;
        }
        let factor = BigInt::from((dots[j] as u128 * pivot_inv as u128 % p as u128) as u64);
        for (x, y) in row.iter_mut().zip(&pivot_row) {
            *x -= &factor * y;
        }
    }
    for x in basis[pivot].iter_mut() {
        *x *= &pbig;
    }
}

fn norm_sq(v: &Vec<BigInt>) -> BigInt {
    v.iter().map(|x| x * x).sum()
}

fn to_rational_vec(v: &[BigInt]) -> Vec<ExactRational> {
    v.iter().map(|x| ExactRational::from(x.clone())).collect()
}

fn dot_rational(a: &[ExactRational], b: &[ExactRational]) -> ExactRational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Gram–Schmidt data: (μ coefficients, squared norms of the orthogonal
/// vectors).
fn gso(basis: &[Vec<BigInt>]) -> (Vec<Vec<ExactRational>>, Vec<ExactRational>) {
    let n = basis.len();
    let mut star: Vec<Vec<ExactRational>> = Vec::with_capacity(n);
    let mut mu = vec![vec![ExactRational::zero(); n]; n];
    let mut norms = vec![ExactRational::zero(); n];
    for i in 0..n {
        let mut v = to_rational_vec(&basis[i]);
        for j in 0..i {
            if norms[j].is_zero() {
                continue;
            }
            let coeff = dot_rational(&to_rational_vec(&basis[i]), &star[j]) / norms[j].clone();
            mu[i][j] = coeff.clone();
            for (x, y) in v.iter_mut().zip(&star[j]) {
                *x -= &coeff * y;
            }
        }
        norms[i] = dot_rational(&v, &v);
        star.push(v);
    }
    (mu, norms)
}

fn round_rational(q: &ExactRational) -> BigInt {
    // nearest integer, ties toward +∞
    let two = BigInt::from(2);
    (q.numer() * &two + q.denom()).div_floor(&(q.denom() * &two))
}

/// Textbook LLL with δ = 0.99, recomputing the GSO as needed. Fine for
/// the tiny dimensions used here (k + 1 ≤ 8 or so).
fn lll(basis: &mut Vec<Vec<BigInt>>) {
    let n = basis.len();
    if n <= 1 {
        return;
    }
    let delta = ExactRational::new(BigInt::from(99), BigInt::from(100));
    let mut k = 1usize;
    while k < n {
        let (mu, _) = gso(basis);
        // size-reduce row k
        let mut changed = false;
        for j in (0..k).rev() {
            let r = round_rational(&mu[k][j]);
            if !r.is_zero() {
                let row_j = basis[j].clone();
                for (x, y) in basis[k].iter_mut().zip(&row_j) {
                    *x -= &r * y;
                }
                changed = true;
            }
        }
        let (mu, norms) = if changed { gso(basis) } else { (mu, gso(basis).1) };
        let lovasz =
            (delta.clone() - mu[k][k - 1].clone() * mu[k][k - 1].clone()) * norms[k - 1].clone();
        if norms[k] >= lovasz {
            k += 1;
        } else {
            basis.swap(k, k - 1);
            k = k.saturating_sub(1).max(1);
        }
    }
}
