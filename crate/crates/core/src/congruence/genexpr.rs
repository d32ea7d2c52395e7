//! Formal products of generator sums, e.g. S(2,1)*S(4,1,1).

use std::fmt;
use std::str::FromStr;

use crate::composition::Composition;
use crate::error::{Error, Result};
use crate::mhs::{SumKind, SumTable};
use crate::modp::Residue;

/// A product of (kind, composition) factors, kept in canonical sorted
/// order. The empty product is the constant 1.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GenExpr {
    factors: Vec<(SumKind, Composition)>,
}

impl GenExpr {
    pub fn new(mut factors: Vec<(SumKind, Composition)>) -> Self {
        debug_assert!(factors.iter().all(|(_, c)| !c.is_empty()), "unit factor in product");
        factors.sort_by(|a, b| a.1.cmp(&b.1).then_with(|| a.0.cmp(&b.0)));
        GenExpr { factors }
    }

    /// A single S-sum.
    pub fn weak(comp: Composition) -> Self {
        GenExpr::new(vec![(SumKind::Weak, comp)])
    }

    /// A single A-sum.
    pub fn strict(comp: Composition) -> Self {
        GenExpr::new(vec![(SumKind::Strict, comp)])
    }

    pub fn factors(&self) -> &[(SumKind, Composition)] {
        &self.factors
    }

    /// Total weight of all factors.
    pub fn weight(&self) -> u32 {
        self.factors.iter().map(|(_, c)| c.weight()).sum()
    }

    /// The single composition, when this is a plain (non-product) sum.
    pub fn as_single(&self) -> Option<(SumKind, &Composition)> {
        match self.factors.as_slice() {
            [(kind, comp)] => Some((*kind, comp)),
            _ => None,
        }
    }

    pub fn mul(&self, other: &GenExpr) -> GenExpr {
        let mut factors = self.factors.clone();
        factors.extend(other.factors.iter().cloned());
        GenExpr::new(factors)
    }

    /// Evaluates the product at n = p−1 through a sum table.
    pub fn eval(&self, table: &mut SumTable) -> Residue {
        let mut acc = table.ctx().one();
        for (kind, comp) in &self.factors {
            acc *= table.value(*kind, comp);
        }
        acc
    }
}

impl fmt::Display for GenExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (idx, (kind, comp)) in self.factors.iter().enumerate() {
            if idx > 0 {
                write!(f, "*")?;
            }
            write!(f, "{kind}{comp}")?;
        }
        Ok(())
    }
}

impl FromStr for GenExpr {
    type Err = Error;

    /// Parses products like `S(2,1)*S(4,1,1)` or a single `A(3,1)`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "1" {
            return Ok(GenExpr::new(Vec::new()));
        }
        let mut factors = Vec::new();
        for token in s.split('*') {
            let token = token.trim();
            let mut chars = token.chars();
            let kind: SumKind = chars
                .next()
                .map(|c| c.to_string().parse())
                .transpose()?
                .ok_or_else(|| Error::parse(format!("empty factor in `{s}`")))?;
            let comp: Composition = chars.as_str().parse()?;
            if comp.is_empty() {
                return Err(Error::parse(format!("unit composition in factor `{token}`")));
            }
            factors.push((kind, comp));
        }
        Ok(GenExpr::new(factors))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modp::PrimeCtx;

    fn c(parts: &[u32]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn canonical_factor_order() {
        let a = GenExpr::new(vec![(SumKind::Weak, c(&[4, 1])), (SumKind::Weak, c(&[2, 1]))]);
        let b = GenExpr::new(vec![(SumKind::Weak, c(&[2, 1])), (SumKind::Weak, c(&[4, 1]))]);
        assert_eq!(a, b);
        assert_eq!(a.to_string(), "S(2,1)*S(4,1)");
        assert_eq!(a.weight(), 8);
    }

    #[test]
    fn parse_round_trip() {
        for s in ["S(2,1)", "A(3)", "S(2,1)*S(4,1,1)", "1"] {
            let g: GenExpr = s.parse().unwrap();
            assert_eq!(g.to_string(), s);
        }
        assert!("S()".parse::<GenExpr>().is_err());
        assert!("X(2)".parse::<GenExpr>().is_err());
    }

    #[test]
    fn product_evaluation() {
        let ctx = PrimeCtx::new(67).unwrap();
        let mut table = SumTable::new(&ctx);
        let g: GenExpr = "S(2,1)*S(4,1,1)".parse().unwrap();
        let lhs = g.eval(&mut table);
        let s21 = table.value(SumKind::Weak, &c(&[2, 1]));
        let s411 = table.value(SumKind::Weak, &c(&[4, 1, 1]));
        assert_eq!(lhs, s21 * s411);
    }
}
