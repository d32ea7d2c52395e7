//! Integer-linear combinations of words over {x, y}, and the word-level
//! ψ substitution ψ(x) = x + y, ψ(y) = −y.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::qsym::{Basis, QSymElem};
use crate::word::{composition_of, word_of, Letter, Word};

/// A sparse integer-linear combination of words.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct WordPoly {
    terms: BTreeMap<Word, BigInt>,
}

impl WordPoly {
    pub fn zero() -> Self {
        WordPoly::default()
    }

    pub fn from_word(w: Word) -> Self {
        let mut p = WordPoly::zero();
        p.add_term(w, BigInt::one());
        p
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &BigInt)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, w: Word, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(w) {
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

    pub fn add(&self, other: &WordPoly) -> WordPoly {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> WordPoly {
        WordPoly {
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect(),
        }
    }

    /// True iff every word lies in the span of 1 and words ending in y.
    pub fn in_h1(&self) -> bool {
        self.terms.keys().all(Word::in_h1)
    }

    /// Word-level ψ: substitute x ↦ x+y, y ↦ −y and expand. Requires the
    /// polynomial to lie in ℌ¹ (which ψ preserves).
    pub fn psi(&self) -> Result<WordPoly> {
        if !self.in_h1() {
            return Err(Error::WordNotInH1);
        }
        let mut out = WordPoly::zero();
        for (word, coeff) in &self.terms {
            // Expand the substitution product letter by letter.
            let mut partial: Vec<(Vec<Letter>, bool)> = vec![(Vec::new(), false)]; // (letters, negate?)
            for &l in word.letters() {
                let mut next = Vec::with_capacity(partial.len() * 2);
                for (prefix, neg) in &partial {
                    match l {
                        Letter::X => {
                            let mut a = prefix.clone();
                            a.push(Letter::X);
                            next.push((a, *neg));
                            let mut b = prefix.clone();
                            b.push(Letter::Y);
                            next.push((b, *neg));
                        }
                        Letter::Y => {
                            let mut a = prefix.clone();
                            a.push(Letter::Y);
                            next.push((a, !*neg));
                        }
                    }
                }
                partial = next;
            }
            for (letters, neg) in partial {
                let c = if neg { -coeff } else { coeff.clone() };
                out.add_term(Word::new(letters), c);
            }
        }
        Ok(out)
    }

    /// Reads the polynomial as an M-basis element of QSym; every word must
    /// be in ℌ¹.
    pub fn to_qsym(&self) -> Result<QSymElem> {
        let mut out = QSymElem::zero(Basis::M);
        for (w, c) in &self.terms {
            out.add_term(composition_of(w)?, c.clone());
        }
        Ok(out)
    }

    /// The word polynomial of an element (via the M basis).
    pub fn from_qsym(e: &QSymElem) -> WordPoly {
        let m = e.convert_to(Basis::M);
        let mut out = WordPoly::zero();
        for (i, c) in m.terms() {
            out.add_term(word_of(i), c.clone());
        }
        out
    }
}

impl fmt::Display for WordPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (w, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            if idx == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.abs();
            if mag.is_one() {
                write!(f, "{w}")?;
            } else {
                write!(f, "{mag}*{w}")?;
            }
        }
        Ok(())
    }
}
