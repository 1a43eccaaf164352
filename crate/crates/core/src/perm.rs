//! Permutations of `{0, .., n-1}` written on the right of their argument.
//!
//! `x(pq) = (xp)q`: the left factor is applied first. Every composite in the
//! crate (translation words, isotopism triples, autotopism groups) follows
//! this convention.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Perm {
    image: Vec<usize>,
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm {
            image: (0..n).collect(),
        }
    }

    /// Builds a permutation from its image list, rejecting non-bijections.
    pub fn from_images(image: Vec<usize>) -> Result<Self> {
        let n = image.len();
        let mut seen = vec![false; n];
        for (i, &v) in image.iter().enumerate() {
            if v >= n {
                return Err(Error::InvalidPerm(format!("image {v} of {i} is out of range")));
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::InvalidPerm(format!("{v} is hit twice")));
            }
        }
        Ok(Perm { image })
    }

    pub(crate) fn from_images_unchecked(image: Vec<usize>) -> Self {
        debug_assert!(Perm::from_images(image.clone()).is_ok());
        Perm { image }
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.image[x]
    }

    pub fn images(&self) -> &[usize] {
        &self.image
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// `self` then `other`.
    pub fn then(&self, other: &Perm) -> Perm {
        assert_eq!(self.len(), other.len(), "composing permutations of different degree");
        Perm {
            image: self.image.iter().map(|&v| other.image[v]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.len()];
        for (i, &v) in self.image.iter().enumerate() {
            inv[v] = i;
        }
        Perm { image: inv }
    }

    /// `[self, other] = self^-1 other^-1 self other`.
    pub fn commutator(&self, other: &Perm) -> Perm {
        self.inverse()
            .then(&other.inverse())
            .then(self)
            .then(other)
    }

    /// Product of a sequence, left to right. `None` for an empty sequence.
    pub fn product<'a, I>(perms: I) -> Option<Perm>
    where
        I: IntoIterator<Item = &'a Perm>,
    {
        let mut iter = perms.into_iter();
        let first = iter.next()?.clone();
        Some(iter.fold(first, |acc, p| acc.then(p)))
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{:?}", self.image)
    }
}

/// Comma-separated images, e.g. `2,0,1`.
impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.image.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl FromStr for Perm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let image = s
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidPerm(format!("bad entry {tok:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Perm::from_images(image)
    }
}

impl TryFrom<Vec<usize>> for Perm {
    type Error = Error;

    fn try_from(image: Vec<usize>) -> Result<Self> {
        Perm::from_images(image)
    }
}

impl From<Perm> for Vec<usize> {
    fn from(p: Perm) -> Self {
        p.image
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn composition_is_postfix() {
        let p: Perm = "1,2,0".parse().unwrap();
        let q: Perm = "0,2,1".parse().unwrap();
        // 0 -> 1 under p, then 1 -> 2 under q
        assert_eq!(p.then(&q).apply(0), 2);
        assert_eq!(q.then(&p).apply(0), 1);
    }

    #[test]
    fn inverse_and_commutator() {
        let p: Perm = "1,2,0".parse().unwrap();
        assert!(p.then(&p.inverse()).is_identity());
        assert!(p.commutator(&p).is_identity());
        let swap: Perm = "1,0,2".parse().unwrap();
        assert!(!p.commutator(&swap).is_identity());
    }

    #[test]
    fn rejects_non_bijection() {
        assert!("0,0,1".parse::<Perm>().is_err());
        assert!("0,3,1".parse::<Perm>().is_err());
        assert!("0,x".parse::<Perm>().is_err());
    }

    #[test]
    fn display_round_trip() {
        let p: Perm = "2,0,1".parse().unwrap();
        assert_eq!(p.to_string(), "2,0,1");
        assert_eq!(p.to_string().parse::<Perm>().unwrap(), p);
    }
}
