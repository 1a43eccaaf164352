use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::config::{Conventions, Phi1Formula};
use crate::error::{Error, Result};
use crate::isotopy::{principal_isotope, PrincipalPair};
use crate::loops::Loop;

/// The parameters `(x, u, v)` shared by all the isotopes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ParamTriple {
    pub x: usize,
    pub u: usize,
    pub v: usize,
}

impl ParamTriple {
    pub fn new(x: usize, u: usize, v: usize) -> Self {
        ParamTriple { x, u, v }
    }

    /// All triples over an order-`n` loop, `x` most significant.
    pub fn all(n: usize) -> impl Iterator<Item = ParamTriple> {
        (0..n).flat_map(move |x| {
            (0..n).flat_map(move |u| (0..n).map(move |v| ParamTriple::new(x, u, v)))
        })
    }

    pub fn check(self, l: &Loop) -> Result<Self> {
        l.check_element(self.x)?;
        l.check_element(self.u)?;
        l.check_element(self.v)?;
        Ok(self)
    }

    pub fn as_array(self) -> [usize; 3] {
        [self.x, self.u, self.v]
    }
}

impl fmt::Display for ParamTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.x, self.u, self.v)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum PhiIndex {
    Zero,
    One,
    Two,
}

/// `u\(xv)`, the element written `w` throughout.
pub fn w_of(l: &Loop, p: ParamTriple) -> usize {
    l.ldiv(p.u, l.mul(p.x, p.v))
}

pub fn phi0(l: &Loop, p: ParamTriple) -> usize {
    let w = w_of(l, p);
    let uv = l.mul(p.u, p.v);
    l.ldiv(p.u, l.mul(l.rdiv(uv, w), p.v))
}

pub fn phi1(l: &Loop, p: ParamTriple, formula: Phi1Formula) -> usize {
    match formula {
        Phi1Formula::Derived => l.rdiv(l.mul(p.u, p.v), w_of(l, p)),
        Phi1Formula::Printed => phi0(l, p),
    }
}

pub fn phi2(l: &Loop, p: ParamTriple) -> usize {
    l.ldiv(p.u, l.mul(l.rdiv(p.u, p.v), w_of(l, p)))
}

pub fn phi(l: &Loop, which: PhiIndex, p: ParamTriple, conv: &Conventions) -> usize {
    match which {
        PhiIndex::Zero => phi0(l, p),
        PhiIndex::One => phi1(l, p, conv.phi1),
        PhiIndex::Two => phi2(l, p),
    }
}

/// `[x(u\v)]/v`, the first parameter of `∘3`.
pub fn circ3_first(l: &Loop, p: ParamTriple) -> usize {
    l.rdiv(l.mul(p.x, l.ldiv(p.u, p.v)), p.v)
}

/// The loop itself or one of its eight named principal isotopes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum IsotopeLabel {
    Dot,
    Circ0,
    Circ1,
    Circ2,
    Circ3,
    Star0,
    Star1,
    Star2,
    Star3,
}

impl IsotopeLabel {
    pub const ALL: [IsotopeLabel; 9] = [
        IsotopeLabel::Dot,
        IsotopeLabel::Circ0,
        IsotopeLabel::Circ1,
        IsotopeLabel::Circ2,
        IsotopeLabel::Circ3,
        IsotopeLabel::Star0,
        IsotopeLabel::Star1,
        IsotopeLabel::Star2,
        IsotopeLabel::Star3,
    ];

    pub fn circ(i: usize) -> Self {
        [Self::Circ0, Self::Circ1, Self::Circ2, Self::Circ3][i]
    }

    pub fn star(i: usize) -> Self {
        [Self::Star0, Self::Star1, Self::Star2, Self::Star3][i]
    }

    pub fn name(self) -> &'static str {
        match self {
            IsotopeLabel::Dot => "dot",
            IsotopeLabel::Circ0 => "o0",
            IsotopeLabel::Circ1 => "o1",
            IsotopeLabel::Circ2 => "o2",
            IsotopeLabel::Circ3 => "o3",
            IsotopeLabel::Star0 => "s0",
            IsotopeLabel::Star1 => "s1",
            IsotopeLabel::Star2 => "s2",
            IsotopeLabel::Star3 => "s3",
        }
    }

    /// The principal pair `(f, g)` behind the label; `None` for the loop itself.
    pub fn pair(self, l: &Loop, p: ParamTriple, conv: &Conventions) -> Option<PrincipalPair> {
        let w = w_of(l, p);
        let (f, g) = match self {
            IsotopeLabel::Dot => return None,
            IsotopeLabel::Star0 => (p.x, p.v),
            IsotopeLabel::Circ0 => (p.u, phi0(l, p)),
            IsotopeLabel::Circ1 => (p.u, w),
            IsotopeLabel::Star1 => (phi1(l, p, conv.phi1), p.v),
            IsotopeLabel::Circ2 => (p.x, phi2(l, p)),
            IsotopeLabel::Circ3 => (circ3_first(l, p), w),
            IsotopeLabel::Star2 => (p.u, l.identity()),
            IsotopeLabel::Star3 => (l.identity(), p.v),
        };
        Some(PrincipalPair::new(f, g))
    }
}

impl fmt::Display for IsotopeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IsotopeLabel {
    type Err = Error;

    /// Accepts `dot`, `o0`..`o3`, `s0`..`s3` and the symbols `∘i`, `∗i`, `*i`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t == "dot" || t == "." || t == "·" {
            return Ok(IsotopeLabel::Dot);
        }
        let mut chars = t.chars();
        let head = chars.next();
        let rest: String = chars.collect();
        let index = match rest.as_str() {
            "0" => 0,
            "1" => 1,
            "2" => 2,
            "3" => 3,
            _ => return Err(Error::UnknownVertex(s.to_string())),
        };
        match head {
            Some('o' | '∘') => Ok(IsotopeLabel::circ(index)),
            Some('s' | '∗' | '*') => Ok(IsotopeLabel::star(index)),
            _ => Err(Error::UnknownVertex(s.to_string())),
        }
    }
}

/// The loop a label names at `p`.
pub fn build_isotope(l: &Loop, label: IsotopeLabel, p: ParamTriple, conv: &Conventions) -> Loop {
    match label.pair(l, p, conv) {
        None => l.clone(),
        Some(pair) => principal_isotope(l, pair),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: usize) -> Loop {
        Loop::from_table(n, (0..n * n).map(|i| (i / n + i % n) % n).collect()).unwrap()
    }

    fn klein() -> Loop {
        Loop::from_table(4, (0..16).map(|i| (i / 4) ^ (i % 4)).collect()).unwrap()
    }

    #[test]
    fn phi_values_on_z3() {
        let l = z(3);
        let p = ParamTriple::new(1, 0, 0);
        assert_eq!(phi0(&l, p), 2);
        assert_eq!(phi2(&l, p), 1);
        let c = Conventions::default();
        assert_eq!(phi(&l, PhiIndex::Zero, p, &c), 2);
    }

    #[test]
    fn phi0_in_abelian_group() {
        let l = z(5);
        for p in ParamTriple::all(5) {
            assert_eq!(phi0(&l, p), (p.u + p.v + 5 - p.x) % 5);
        }
    }

    #[test]
    fn phi0_in_boolean_group() {
        let l = klein();
        for p in ParamTriple::all(4) {
            assert_eq!(phi0(&l, p), w_of(&l, p));
        }
    }

    #[test]
    fn printed_phi1_is_phi0() {
        let l = z(4);
        for p in ParamTriple::all(4) {
            assert_eq!(phi1(&l, p, Phi1Formula::Printed), phi0(&l, p));
        }
    }

    #[test]
    fn isotopes_on_z3() {
        let l = z(3);
        let c = Conventions::default();
        let p = ParamTriple::new(1, 0, 0);
        let o1 = build_isotope(&l, IsotopeLabel::Circ1, p, &c);
        let o0 = build_isotope(&l, IsotopeLabel::Circ0, p, &c);
        for (x, y) in l.pairs() {
            assert_eq!(o1.mul(x, y), (x + y + 2) % 3);
            assert_eq!(o0.mul(x, y), (x + y + 1) % 3);
        }
        let s2 = build_isotope(&l, IsotopeLabel::Star2, ParamTriple::new(2, 0, 1), &c);
        assert_eq!(s2, l);
        assert_eq!(build_isotope(&l, IsotopeLabel::Dot, p, &c), l);
    }

    #[test]
    fn label_names_parse() {
        for label in IsotopeLabel::ALL {
            assert_eq!(label.name().parse::<IsotopeLabel>().unwrap(), label);
        }
        assert_eq!("∘2".parse::<IsotopeLabel>().unwrap(), IsotopeLabel::Circ2);
        assert_eq!("∗3".parse::<IsotopeLabel>().unwrap(), IsotopeLabel::Star3);
        assert!("o4".parse::<IsotopeLabel>().is_err());
    }

    #[test]
    fn triples_enumerate_in_order() {
        let all: Vec<_> = ParamTriple::all(2).collect();
        assert_eq!(all.len(), 8);
        assert_eq!(all[1], ParamTriple::new(0, 0, 1));
        assert_eq!(all[4], ParamTriple::new(1, 0, 0));
    }
}
