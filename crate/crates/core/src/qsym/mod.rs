//! The Hopf algebra of quasi-symmetric functions over the integers.
//!
//! Elements are sparse integer-linear combinations of compositions, tagged
//! with one of three integral bases: monomial (M), essential (E) or
//! fundamental (F). The product is the stuffle product; the coproduct is
//! deconcatenation; the antipode and the ψ involution act through the
//! composition involutions.

mod hopf;
mod phi;
mod stuffle;
mod symmetrize;
mod tensor;
mod wordpoly;

pub use phi::{expand_phi, TruncatedPoly};
pub use symmetrize::{symmetrize_direct, symmetrize_expand};
pub use tensor::TensorElem;
pub use wordpoly::WordPoly;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::composition::Composition;
use crate::error::{Error, Result};

/// The three integral bases of QSym used here.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Basis {
    M,
    E,
    F,
}

impl Basis {
    pub fn name(&self) -> &'static str {
        match self {
            Basis::M => "M",
            Basis::E => "E",
            Basis::F => "F",
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Basis {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "M" | "m" => Ok(Basis::M),
            "E" | "e" => Ok(Basis::E),
            "F" | "f" => Ok(Basis::F),
            other => Err(Error::parse(format!("unknown basis `{other}`"))),
        }
    }
}

/// A basis-tagged sparse element of QSym. Zero coefficients are never
/// stored.
#[derive(Clone, Debug, Eq)]
pub struct QSymElem {
    basis: Basis,
    terms: BTreeMap<Composition, BigInt>,
}

impl QSymElem {
    pub fn zero(basis: Basis) -> Self {
        QSymElem { basis, terms: BTreeMap::new() }
    }

    /// The multiplicative unit: the empty composition with coefficient 1.
    pub fn unit(basis: Basis) -> Self {
        Self::from_term(basis, Composition::unit(), BigInt::one())
    }

    /// The single basis element X_I.
    pub fn generator(basis: Basis, comp: Composition) -> Self {
        Self::from_term(basis, comp, BigInt::one())
    }

    pub fn from_term(basis: Basis, comp: Composition, coeff: BigInt) -> Self {
        let mut e = Self::zero(basis);
        e.add_term(comp, coeff);
        e
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Composition, &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, comp: &Composition) -> BigInt {
        self.terms.get(comp).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The counit: the coefficient of the empty composition.
    pub fn counit(&self) -> BigInt {
        self.coeff(&Composition::unit())
    }

    pub(crate) fn add_term(&mut self, comp: Composition, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(comp) {
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

    pub fn scale(&self, c: &BigInt) -> QSymElem {
        if c.is_zero() {
            return QSymElem::zero(self.basis);
        }
        QSymElem {
            basis: self.basis,
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    fn assert_same_basis(&self, other: &QSymElem) {
        assert_eq!(
            self.basis, other.basis,
            "mixed bases in linear arithmetic; convert first"
        );
    }

    pub fn add(&self, other: &QSymElem) -> QSymElem {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        self.assert_same_basis(other);
        let mut out = self.clone();
        for (k, v) in &other.terms {
            out.add_term(k.clone(), v.clone());
        }
        out
    }

    pub fn sub(&self, other: &QSymElem) -> QSymElem {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> QSymElem {
        QSymElem {
            basis: self.basis,
            terms: self.terms.iter().map(|(k, v)| (k.clone(), -v)).collect(),
        }
    }

    /// Maximum weight among stored terms; zero for the zero element.
    pub fn max_weight(&self) -> u32 {
        self.terms.keys().map(|c| c.weight()).max().unwrap_or(0)
    }

    /// Expresses the element in the monomial basis.
    pub(crate) fn to_m(&self) -> QSymElem {
        match self.basis {
            Basis::M => self.clone(),
            Basis::E => {
                let mut out = QSymElem::zero(Basis::M);
                for (i, c) in &self.terms {
                    for j in i.coarsenings() {
                        out.add_term(j, c.clone());
                    }
                }
                out
            }
            Basis::F => {
                let mut out = QSymElem::zero(Basis::M);
                for (i, c) in &self.terms {
                    for j in i.refinements() {
                        out.add_term(j, c.clone());
                    }
                }
                out
            }
        }
    }

    /// Re-expresses an M-basis element in `target` via Möbius inversion.
    fn from_m(elem: &QSymElem, target: Basis) -> QSymElem {
        debug_assert_eq!(elem.basis, Basis::M);
        match target {
            Basis::M => elem.clone(),
            Basis::E => {
                // M_I = Σ_{J ⪯ I} (−1)^(ℓ(I)−ℓ(J)) E_J
                let mut out = QSymElem::zero(Basis::E);
                for (i, c) in &elem.terms {
                    for j in i.coarsenings() {
                        let coeff = if (i.len() - j.len()) % 2 == 0 { c.clone() } else { -c };
                        out.add_term(j, coeff);
                    }
                }
                out
            }
            Basis::F => {
                // M_I = Σ_{J ⪰ I} (−1)^(ℓ(J)−ℓ(I)) F_J
                let mut out = QSymElem::zero(Basis::F);
                for (i, c) in &elem.terms {
                    for j in i.refinements() {
                        let coeff = if (j.len() - i.len()) % 2 == 0 { c.clone() } else { -c };
                        out.add_term(j, coeff);
                    }
                }
                out
            }
        }
    }

    /// Invertible change of basis.
    pub fn convert_to(&self, target: Basis) -> QSymElem {
        if self.basis == target {
            return self.clone();
        }
        QSymElem::from_m(&self.to_m(), target)
    }

    /// JSON form `{basis, terms: [{composition, coeff}]}` with decimal
    /// coefficient strings.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "basis": self.basis.name(),
            "terms": self
                .terms
                .iter()
                .map(|(k, v)| {
                    serde_json::json!({
                        "composition": k.parts(),
                        "coeff": v.to_string(),
                    })
                })
                .collect::<Vec<_>>(),
        })
    }

    pub fn from_json(s: &str) -> Result<QSymElem> {
        #[derive(Deserialize)]
        struct TermJson {
            composition: Vec<u32>,
            coeff: String,
        }
        #[derive(Deserialize)]
        struct ElemJson {
            basis: String,
            terms: Vec<TermJson>,
        }
        let parsed: ElemJson =
            serde_json::from_str(s).map_err(|e| Error::parse(format!("element json: {e}")))?;
        let basis: Basis = parsed.basis.parse()?;
        let mut out = QSymElem::zero(basis);
        for t in parsed.terms {
            let coeff: BigInt = t
                .coeff
                .parse()
                .map_err(|_| Error::parse(format!("bad coefficient `{}`", t.coeff)))?;
            out.add_term(Composition::new(t.composition)?, coeff);
        }
        Ok(out)
    }
}

/// Constants (multiples of the empty composition) are basis-independent,
/// so equality ignores the tag for them.
impl PartialEq for QSymElem {
    fn eq(&self, other: &Self) -> bool {
        if self.terms == other.terms {
            let constant = self.terms.keys().all(|k| k.is_empty());
            return constant || self.basis == other.basis;
        }
        false
    }
}

impl fmt::Display for QSymElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (comp, coeff)) in self.terms.iter().enumerate() {
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
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            write!(f, "{}{}", self.basis, comp)?;
        }
        Ok(())
    }
}

impl FromStr for QSymElem {
    type Err = Error;

    /// Parses forms like `M(2,3) + M(3,2) + M(5)`, `2*M(1,1) + 1*M(2)`,
    /// `-E(3,1)` or `E()`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::parse("empty element"));
        }
        let mut terms: Vec<(i8, String)> = Vec::new();
        let mut sign = 1i8;
        let mut buf = String::new();
        for ch in s.chars() {
            match ch {
                '+' | '-' => {
                    if buf.trim().is_empty() {
                        sign = if ch == '-' { -sign } else { sign };
                    } else {
                        terms.push((sign, std::mem::take(&mut buf)));
                        sign = if ch == '-' { -1 } else { 1 };
                    }
                }
                _ => buf.push(ch),
            }
        }
        if !buf.trim().is_empty() {
            terms.push((sign, buf));
        }
        if terms.is_empty() {
            return Err(Error::parse(format!("no terms in `{s}`")));
        }
        let mut basis: Option<Basis> = None;
        let mut out: Option<QSymElem> = None;
        for (sgn, term) in terms {
            let term = term.trim();
            let (coeff_str, rest) = match term.find('*') {
                Some(i) => (term[..i].trim(), term[i + 1..].trim()),
                None => ("1", term),
            };
            let coeff: BigInt = coeff_str
                .parse()
                .map_err(|_| Error::parse(format!("bad coefficient `{coeff_str}`")))?;
            let coeff = if sgn < 0 { -coeff } else { coeff };
            let mut chars = rest.chars();
            let b: Basis = chars
                .next()
                .map(|c| c.to_string().parse())
                .transpose()?
                .ok_or_else(|| Error::parse(format!("missing basis in `{term}`")))?;
            match basis {
                None => basis = Some(b),
                Some(prev) if prev != b => {
                    return Err(Error::parse(format!("mixed bases `{prev}` and `{b}` in `{s}`")))
                }
                _ => {}
            }
            let comp: Composition = chars.as_str().parse()?;
            let elem = out.get_or_insert_with(|| QSymElem::zero(b));
            elem.add_term(comp, coeff);
        }
        Ok(out.unwrap())
    }
}
