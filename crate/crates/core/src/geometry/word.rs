use std::fmt;

use serde::{Deserialize, Serialize};

use crate::isotopy::IsoTriple;
use crate::loops::{Loop, Side};
use crate::perm::Perm;

/// One translation `R_a`, `L_a` or an inverse of one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Letter {
    pub side: Side,
    pub element: usize,
    /// `1` or `-1`.
    pub exponent: i8,
}

impl Letter {
    pub fn right(a: usize) -> Self {
        Letter {
            side: Side::Right,
            element: a,
            exponent: 1,
        }
    }

    pub fn left(a: usize) -> Self {
        Letter {
            side: Side::Left,
            element: a,
            exponent: 1,
        }
    }

    pub fn right_inv(a: usize) -> Self {
        Letter {
            exponent: -1,
            ..Letter::right(a)
        }
    }

    pub fn left_inv(a: usize) -> Self {
        Letter {
            exponent: -1,
            ..Letter::left(a)
        }
    }

    pub fn eval(&self, l: &Loop) -> Perm {
        if self.exponent < 0 {
            l.inverse_translation(self.side, self.element)
        } else {
            l.translation(self.side, self.element)
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self.side {
            Side::Left => 'L',
            Side::Right => 'R',
        };
        write!(f, "{s}{}", self.element)?;
        if self.exponent < 0 {
            f.write_str("^-1")?;
        }
        Ok(())
    }
}

/// A product of translations, read left to right. Its length is the number
/// of letters as written; no cancellation is performed.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TranslationWord {
    pub letters: Vec<Letter>,
}

impl TranslationWord {
    pub fn identity() -> Self {
        TranslationWord::default()
    }

    pub fn new(letters: Vec<Letter>) -> Self {
        TranslationWord { letters }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn then(&self, other: &TranslationWord) -> TranslationWord {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        TranslationWord { letters }
    }

    pub fn eval(&self, l: &Loop) -> Perm {
        self.letters
            .iter()
            .fold(Perm::identity(l.order()), |acc, letter| acc.then(&letter.eval(l)))
    }
}

impl From<Vec<Letter>> for TranslationWord {
    fn from(letters: Vec<Letter>) -> Self {
        TranslationWord { letters }
    }
}

impl fmt::Display for TranslationWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("I");
        }
        for (i, letter) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{letter}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WordTriple {
    pub a: TranslationWord,
    pub b: TranslationWord,
    pub c: TranslationWord,
}

impl WordTriple {
    pub fn new(a: TranslationWord, b: TranslationWord, c: TranslationWord) -> Self {
        WordTriple { a, b, c }
    }

    /// `(w, w, w)`, the shape of an isomorphism.
    pub fn diagonal(w: TranslationWord) -> Self {
        WordTriple::new(w.clone(), w.clone(), w)
    }

    pub fn len(&self) -> usize {
        self.a.len() + self.b.len() + self.c.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn eval(&self, l: &Loop) -> IsoTriple {
        IsoTriple::new(self.a.eval(l), self.b.eval(l), self.c.eval(l))
    }
}

impl fmt::Display for WordTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.a, self.b, self.c)
    }
}

/// Length in units: letters of a word, or the component sum of a triple.
pub trait WordLength {
    fn word_length(&self) -> usize;
}

impl WordLength for TranslationWord {
    fn word_length(&self) -> usize {
        self.len()
    }
}

impl WordLength for WordTriple {
    fn word_length(&self) -> usize {
        self.len()
    }
}

pub fn word_length<W: WordLength + ?Sized>(w: &W) -> usize {
    w.word_length()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z3() -> Loop {
        Loop::parse("3\n0 1 2\n1 2 0\n2 0 1").unwrap()
    }

    #[test]
    fn lengths() {
        assert_eq!(word_length(&TranslationWord::identity()), 0);
        let t = WordTriple::new(
            vec![Letter::right(0)].into(),
            vec![Letter::left(1)].into(),
            TranslationWord::identity(),
        );
        assert_eq!(word_length(&t), 2);
    }

    #[test]
    fn evaluation_is_left_to_right() {
        let l = z3();
        let w = TranslationWord::new(vec![Letter::right_inv(2), Letter::right(1)]);
        assert_eq!(w.eval(&l).images(), &[2, 0, 1]);
        let inv = TranslationWord::new(vec![Letter::right(1), Letter::right_inv(1)]);
        assert!(inv.eval(&l).is_identity());
    }

    #[test]
    fn display() {
        let w = TranslationWord::new(vec![Letter::right_inv(2), Letter::left(1)]);
        assert_eq!(w.to_string(), "R2^-1 L1");
        assert_eq!(TranslationWord::identity().to_string(), "I");
    }
}
