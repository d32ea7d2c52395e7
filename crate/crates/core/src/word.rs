//! Words over the alphabet {x, y} and the bijection with compositions:
//! (i_1,…,i_k) ↔ x^(i_1−1)y ⋯ x^(i_k−1)y.

use std::fmt;
use std::str::FromStr;

use crate::composition::Composition;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    X,
    Y,
}

/// A word in the noncommuting letters x, y. The empty word represents 1.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Word { letters }
    }

    pub fn empty() -> Self {
        Word { letters: Vec::new() }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    /// Total degree.
    pub fn weight(&self) -> usize {
        self.letters.len()
    }

    /// y-degree.
    pub fn length(&self) -> usize {
        self.letters.iter().filter(|&&l| l == Letter::Y).count()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// True iff the word lies in the span of 1 and words ending in y.
    pub fn in_h1(&self) -> bool {
        self.letters.last().map_or(true, |&l| l == Letter::Y)
    }
}

/// The word x^(i_1−1)y ⋯ x^(i_k−1)y of a composition; unit ↦ empty word.
pub fn word_of(i: &Composition) -> Word {
    let mut letters = Vec::with_capacity(i.weight() as usize);
    for &p in i.parts() {
        for _ in 1..p {
            letters.push(Letter::X);
        }
        letters.push(Letter::Y);
    }
    Word { letters }
}

/// Inverse of [`word_of`]: errors unless the word is empty or ends in y.
pub fn composition_of(w: &Word) -> Result<Composition> {
    if !w.in_h1() {
        return Err(Error::WordNotInH1);
    }
    let mut parts = Vec::with_capacity(w.length());
    let mut run = 0u32;
    for &l in w.letters() {
        match l {
            Letter::X => run += 1,
            Letter::Y => {
                parts.push(run + 1);
                run = 0;
            }
        }
    }
    Ok(Composition::from_raw(parts))
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "1");
        }
        for &l in &self.letters {
            match l {
                Letter::X => write!(f, "x")?,
                Letter::Y => write!(f, "y")?,
            }
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Accepts letter strings like "xxyyy", with optional exponents as in
    /// "x^2y^3"; "1" denotes the empty word.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "1" {
            return Ok(Word::empty());
        }
        let mut letters = Vec::new();
        let chars: Vec<char> = s.chars().collect();
        let mut pos = 0;
        while pos < chars.len() {
            let letter = match chars[pos] {
                'x' => Letter::X,
                'y' => Letter::Y,
                other => return Err(Error::parse(format!("bad word letter `{other}` in `{s}`"))),
            };
            pos += 1;
            let mut count = 1usize;
            if pos < chars.len() && chars[pos] == '^' {
                pos += 1;
                let start = pos;
                while pos < chars.len() && chars[pos].is_ascii_digit() {
                    pos += 1;
                }
                if start == pos {
                    return Err(Error::parse(format!("missing exponent in `{s}`")));
                }
                count = chars[start..pos]
                    .iter()
                    .collect::<String>()
                    .parse()
                    .map_err(|_| Error::parse(format!("bad exponent in `{s}`")))?;
            }
            for _ in 0..count {
                letters.push(letter);
            }
        }
        Ok(Word { letters })
    }
}
