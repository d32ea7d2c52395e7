//! Linear combinations of generator products with exact rational
//! coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::mhs::SumTable;
use crate::modp::{ExactRational, Residue};

use super::genexpr::GenExpr;

/// Σ coeff · generator-product, with no zero coefficients stored.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct GenCombo {
    terms: BTreeMap<GenExpr, ExactRational>,
}

impl GenCombo {
    pub fn zero() -> Self {
        GenCombo::default()
    }

    pub fn from_term(coeff: ExactRational, expr: GenExpr) -> Self {
        let mut combo = GenCombo::zero();
        combo.add_term(coeff, expr);
        combo
    }

    /// A single generator with coefficient 1.
    pub fn from_expr(expr: GenExpr) -> Self {
        Self::from_term(ExactRational::one(), expr)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&GenExpr, &ExactRational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, coeff: ExactRational, expr: GenExpr) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(expr) {
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

    pub fn add(&self, other: &GenCombo) -> GenCombo {
        let mut out = self.clone();
        for (expr, coeff) in &other.terms {
            out.add_term(coeff.clone(), expr.clone());
        }
        out
    }

    pub fn scale(&self, c: &ExactRational) -> GenCombo {
        if c.is_zero() {
            return GenCombo::zero();
        }
        GenCombo {
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    pub fn neg(&self) -> GenCombo {
        GenCombo {
            terms: self.terms.iter().map(|(e, v)| (e.clone(), -v.clone())).collect(),
        }
    }

    /// Formal product: distributes and concatenates factor lists.
    pub fn mul(&self, other: &GenCombo) -> GenCombo {
        let mut out = GenCombo::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                out.add_term(ca * cb, ea.mul(eb));
            }
        }
        out
    }

    /// Evaluates at n = p−1; errors if p divides a coefficient denominator.
    pub fn eval(&self, table: &mut SumTable) -> Result<Residue> {
        let ctx = table.ctx();
        let mut acc = ctx.zero();
        for (expr, coeff) in &self.terms {
            acc += expr.eval(table) * ctx.res_rational(coeff)?;
        }
        Ok(acc)
    }

    /// Common weight of all terms, when homogeneous and nonempty.
    pub fn homogeneous_weight(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(GenExpr::weight);
        let first = it.next()?;
        it.all(|w| w == first).then_some(first)
    }
}

fn format_coeff(q: &ExactRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for GenCombo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (expr, coeff)) in self.terms.iter().enumerate() {
            let negative = coeff.is_negative();
            if idx == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = coeff.abs();
            if mag.is_one() {
                write!(f, "{expr}")?;
            } else {
                write!(f, "{}*{expr}", format_coeff(&mag))?;
            }
        }
        Ok(())
    }
}

fn parse_rational(s: &str) -> Result<ExactRational> {
    let s = s.trim();
    let (num, den) = match s.find('/') {
        Some(i) => (&s[..i], &s[i + 1..]),
        None => (s, "1"),
    };
    let n: BigInt = num
        .trim()
        .parse()
        .map_err(|_| Error::parse(format!("bad rational numerator `{num}`")))?;
    let d: BigInt = den
        .trim()
        .parse()
        .map_err(|_| Error::parse(format!("bad rational denominator `{den}`")))?;
    if d.is_zero() {
        return Err(Error::parse("zero denominator"));
    }
    Ok(ExactRational::new(n, d))
}

impl FromStr for GenCombo {
    type Err = Error;

    /// Parses `S(6,1,1,1) - 310/27*S(8,1) + 1/3*S(2,1)*S(4,1,1)`, or `0`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "0" {
            return Ok(GenCombo::zero());
        }
        let mut pieces: Vec<(i8, String)> = Vec::new();
        let mut sign = 1i8;
        let mut buf = String::new();
        for ch in s.chars() {
            match ch {
                '+' | '-' => {
                    if buf.trim().is_empty() {
                        sign = if ch == '-' { -sign } else { sign };
                    } else {
                        pieces.push((sign, std::mem::take(&mut buf)));
                        sign = if ch == '-' { -1 } else { 1 };
                    }
                }
                _ => buf.push(ch),
            }
        }
        if !buf.trim().is_empty() {
            pieces.push((sign, buf));
        }
        if pieces.is_empty() {
            return Err(Error::parse(format!("no terms in `{s}`")));
        }
        let mut combo = GenCombo::zero();
        for (sgn, piece) in pieces {
            let piece = piece.trim();
            // Leading chunk before the first '*' may be a rational
            // coefficient; factors always start with a kind letter.
            let (coeff, expr_str) = match piece.find('*') {
                Some(i) if piece[..i].trim().chars().next().is_some_and(|c| c.is_ascii_digit()) => {
                    (parse_rational(&piece[..i])?, &piece[i + 1..])
                }
                _ => (ExactRational::one(), piece),
            };
            let coeff = if sgn < 0 { -coeff } else { coeff };
            combo.add_term(coeff, expr_str.parse()?);
        }
        Ok(combo)
    }
}
