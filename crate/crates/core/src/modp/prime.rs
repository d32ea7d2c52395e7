//! Prime moduli and field elements of Z/pZ.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::modp::ExactRational;

/// Moduli at or below this bound get a full inverse table at construction;
/// larger primes fall back to per-call extended Euclid.
const INV_TABLE_LIMIT: u64 = 1 << 20;

/// A prime modulus together with precomputed helper tables.
#[derive(Debug)]
pub struct PrimeCtx {
    p: u64,
    inv_table: Option<Vec<u64>>,
}

impl PrimeCtx {
    /// Builds a context, verifying primality.
    pub fn new(p: u64) -> Result<Self> {
        if !is_prime_u64(p) {
            return Err(Error::NotPrime(p));
        }
        let inv_table = (p <= INV_TABLE_LIMIT).then(|| inverse_table(p));
        Ok(PrimeCtx { p, inv_table })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    /// The residue of an unsigned integer.
    pub fn res(&self, value: u64) -> Residue {
        Residue {
            value: value % self.p,
            modulus: self.p,
        }
    }

    /// The residue of a signed integer.
    pub fn res_i(&self, value: i64) -> Residue {
        let m = self.p as i64;
        Residue {
            value: value.rem_euclid(m) as u64,
            modulus: self.p,
        }
    }

    /// The residue of an arbitrary-precision integer.
    pub fn res_big(&self, value: &BigInt) -> Residue {
        let m = BigInt::from(self.p);
        let mut r = value % &m;
        if r.is_negative() {
            r += &m;
        }
        self.res(r.to_u64().unwrap())
    }

    /// Reduces an exact rational mod p; errors if p divides the denominator.
    pub fn res_rational(&self, q: &ExactRational) -> Result<Residue> {
        let den = self.res_big(q.denom());
        if den.is_zero() {
            return Err(Error::DenominatorDivisible {
                den: q.denom().to_string(),
                p: self.p,
            });
        }
        Ok(self.res_big(q.numer()) * self.inv(den)?)
    }

    pub fn zero(&self) -> Residue {
        self.res(0)
    }

    pub fn one(&self) -> Residue {
        self.res(1)
    }

    /// Multiplicative inverse; errors on zero.
    pub fn inv(&self, a: Residue) -> Result<Residue> {
        assert_eq!(a.modulus, self.p, "residue from a different prime");
        if a.value == 0 {
            return Err(Error::NotInvertible(self.p));
        }
        let value = match &self.inv_table {
            Some(table) => table[a.value as usize],
            None => inv_mod(a.value, self.p).expect("nonzero residue mod a prime"),
        };
        Ok(self.res(value))
    }
}

/// An element of Z/pZ carrying its modulus. Arithmetic panics if the
/// moduli differ.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Residue {
    value: u64,
    modulus: u64,
}

/// Residues serialize as decimal strings with their modulus.
impl Serialize for Residue {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut s = serializer.serialize_struct("Residue", 2)?;
        s.serialize_field("value", &self.value.to_string())?;
        s.serialize_field("modulus", &self.modulus.to_string())?;
        s.end()
    }
}

impl Residue {
    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    pub fn pow(&self, e: u64) -> Residue {
        Residue {
            value: pow_mod(self.value, e, self.modulus),
            modulus: self.modulus,
        }
    }
}

fn check_same(a: &Residue, b: &Residue) {
    assert_eq!(
        a.modulus, b.modulus,
        "arithmetic between residues of different moduli"
    );
}

impl Add for Residue {
    type Output = Residue;
    fn add(self, rhs: Residue) -> Residue {
        check_same(&self, &rhs);
        let mut v = self.value + rhs.value;
        if v >= self.modulus {
            v -= self.modulus;
        }
        Residue { value: v, modulus: self.modulus }
    }
}

impl Sub for Residue {
    type Output = Residue;
    fn sub(self, rhs: Residue) -> Residue {
        check_same(&self, &rhs);
        let v = if self.value >= rhs.value {
            self.value - rhs.value
        } else {
            self.value + self.modulus - rhs.value
        };
        Residue { value: v, modulus: self.modulus }
    }
}

impl Mul for Residue {
    type Output = Residue;
    fn mul(self, rhs: Residue) -> Residue {
        check_same(&self, &rhs);
        Residue {
            value: mul_mod(self.value, rhs.value, self.modulus),
            modulus: self.modulus,
        }
    }
}

impl Neg for Residue {
    type Output = Residue;
    fn neg(self) -> Residue {
        let v = if self.value == 0 { 0 } else { self.modulus - self.value };
        Residue { value: v, modulus: self.modulus }
    }
}

impl AddAssign for Residue {
    fn add_assign(&mut self, rhs: Residue) {
        *self = *self + rhs;
    }
}

impl SubAssign for Residue {
    fn sub_assign(&mut self, rhs: Residue) {
        *self = *self - rhs;
    }
}

impl MulAssign for Residue {
    fn mul_assign(&mut self, rhs: Residue) {
        *self = *self * rhs;
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl fmt::Debug for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.value, self.modulus)
    }
}

pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(mut base: u64, mut e: u64, m: u64) -> u64 {
    base %= m;
    let mut acc = 1u64 % m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        e >>= 1;
    }
    acc
}

/// Extended-Euclid inverse of a mod m; None when gcd(a, m) ≠ 1.
pub fn inv_mod(a: u64, m: u64) -> Option<u64> {
    let (mut r0, mut r1) = (m as i128, (a % m) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 != 1 {
        return None;
    }
    Some(t0.rem_euclid(m as i128) as u64)
}

/// inv[i] for i = 1..p via the linear recurrence; inv[0] is unused.
fn inverse_table(p: u64) -> Vec<u64> {
    let mut table = vec![0u64; p as usize];
    if p > 1 {
        table[1] = 1;
    }
    for i in 2..p {
        // inv(i) = -(p / i) * inv(p mod i) mod p
        table[i as usize] = mul_mod(p - p / i, table[(p % i) as usize], p);
    }
    table
}

/// inv[i] for i = 1..=limit modulo p, valid for limit < p.
pub fn inverse_table_up_to(limit: u64, p: u64) -> Vec<u64> {
    debug_assert!(limit < p);
    let mut table = vec![0u64; limit as usize + 1];
    if limit >= 1 {
        table[1] = 1;
    }
    for i in 2..=limit {
        table[i as usize] = mul_mod(p - p / i, table[(p % i) as usize], p);
    }
    table
}

/// Deterministic Miller–Rabin for u64.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &q in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == q {
            return true;
        }
        if n % q == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Primes in the inclusive range [lo, hi], ascending.
pub fn primes_in_range(lo: u64, hi: u64) -> Vec<u64> {
    (lo..=hi).filter(|&n| is_prime_u64(n)).collect()
}
