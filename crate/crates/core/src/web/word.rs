use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// Orientation of a boundary point: `+` is a strand running left to right.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid sign character {0:?} in word")]
pub struct WordParseError(pub char);

/// A finite sequence of signs, read top to bottom.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<Sign>);

impl Word {
    pub fn new(signs: Vec<Sign>) -> Self {
        Word(signs)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    /// The segregated word `+^m -^n`.
    pub fn segregated(m: usize, n: usize) -> Self {
        let mut v = vec![Sign::Plus; m];
        v.extend(std::iter::repeat_n(Sign::Minus, n));
        Word(v)
    }

    pub fn signs(&self) -> &[Sign] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `(number of +, number of -)`.
    pub fn weight(&self) -> (usize, usize) {
        let p = self.0.iter().filter(|s| **s == Sign::Plus).count();
        (p, self.0.len() - p)
    }

    /// Reversed with every sign flipped.
    pub fn dual(&self) -> Word {
        Word(self.0.iter().rev().map(|s| s.flip()).collect())
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn is_segregated(&self) -> bool {
        self.0.windows(2).all(|p| !(p[0] == Sign::Minus && p[1] == Sign::Plus))
    }

    /// Stable sort bringing all `+` before all `-`.
    pub fn segregate(&self) -> Word {
        let (m, n) = self.weight();
        Word::segregated(m, n)
    }
}

impl std::ops::Index<usize> for Word {
    type Output = Sign;
    fn index(&self, i: usize) -> &Sign {
        &self.0[i]
    }
}

impl From<Vec<Sign>> for Word {
    fn from(v: Vec<Sign>) -> Self {
        Word(v)
    }
}

impl FromStr for Word {
    type Err = WordParseError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| match c {
                '+' => Ok(Sign::Plus),
                '-' | '\u{2212}' => Ok(Sign::Minus),
                other => Err(WordParseError(other)),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Word)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            write!(f, "{}", s.as_char())?;
        }
        Ok(())
    }
}
