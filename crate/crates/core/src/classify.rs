use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::identity::catalog;
use crate::loops::{Loop, Side};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Flag {
    Group,
    Abelian,
    BooleanGroup,
    Moufang,
    Extra,
    LeftBol,
    Cc,
    Osborn,
}

impl Flag {
    pub const ALL: [Flag; 8] = [
        Flag::Group,
        Flag::Abelian,
        Flag::BooleanGroup,
        Flag::Moufang,
        Flag::Extra,
        Flag::LeftBol,
        Flag::Cc,
        Flag::Osborn,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Flag::Group => "group",
            Flag::Abelian => "abelian",
            Flag::BooleanGroup => "boolean_group",
            Flag::Moufang => "moufang",
            Flag::Extra => "extra",
            Flag::LeftBol => "left_bol",
            Flag::Cc => "cc",
            Flag::Osborn => "osborn",
        }
    }
}

impl fmt::Display for Flag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Flag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Flag::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::BadFilter(format!("unknown flag {s:?}")))
    }
}

/// The set of classifier flags a loop carries.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlagSet(Vec<Flag>);

impl FlagSet {
    pub fn contains(&self, f: Flag) -> bool {
        self.0.contains(&f)
    }

    pub fn iter(&self) -> impl Iterator<Item = Flag> + '_ {
        self.0.iter().copied()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl FromIterator<Flag> for FlagSet {
    fn from_iter<I: IntoIterator<Item = Flag>>(iter: I) -> Self {
        let mut v: Vec<Flag> = iter.into_iter().collect();
        v.sort();
        v.dedup();
        FlagSet(v)
    }
}

impl fmt::Display for FlagSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = self.0.iter().map(|f| f.name()).collect();
        write!(f, "{{{}}}", names.join(", "))
    }
}

pub fn classify(l: &Loop) -> FlagSet {
    let holds = |src: &str| catalog::get(src).check(l).holds();
    let group = holds(catalog::ASSOCIATIVE);
    let abelian = group && holds(catalog::COMMUTATIVE);
    let boolean = group && holds(catalog::EXPONENT_TWO);
    let osborn = holds(catalog::OS3) && holds(catalog::OS5);

    let mut flags = Vec::new();
    let mut push = |cond: bool, f: Flag| {
        if cond {
            flags.push(f)
        }
    };
    push(group, Flag::Group);
    push(abelian, Flag::Abelian);
    push(boolean, Flag::BooleanGroup);
    push(holds(catalog::MOUFANG), Flag::Moufang);
    push(holds(catalog::EXTRA), Flag::Extra);
    push(holds(catalog::LEFT_BOL), Flag::LeftBol);
    push(is_cc(l), Flag::Cc);
    push(osborn, Flag::Osborn);
    flags.into_iter().collect()
}

/// Conjugacy closed: `L_x^-1 L_y L_x` is a left translation and
/// `R_x^-1 R_y R_x` a right translation for all `x, y`.
pub fn is_cc(l: &Loop) -> bool {
    [Side::Left, Side::Right].into_iter().all(|side| {
        let translations: Vec<_> = l.elements().map(|a| l.translation(side, a)).collect();
        l.pairs().all(|(x, y)| {
            let conj = translations[x]
                .inverse()
                .then(&translations[y])
                .then(&translations[x]);
            // a translation is pinned down by the image of the identity
            conj == translations[conj.apply(l.identity())]
        })
    })
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
    fn klein_group_has_every_flag() {
        let flags = classify(&klein());
        for f in Flag::ALL {
            assert!(flags.contains(f), "missing {f}");
        }
    }

    #[test]
    fn z3_is_not_boolean() {
        let flags = classify(&z(3));
        for f in Flag::ALL {
            assert_eq!(flags.contains(f), f != Flag::BooleanGroup, "{f}");
        }
    }

    #[test]
    fn n5_has_no_flag() {
        let n5 = Loop::parse("5\n0 1 2 3 4\n1 0 3 4 2\n2 3 4 0 1\n3 4 1 2 0\n4 2 0 1 3").unwrap();
        assert!(classify(&n5).is_empty(), "{}", classify(&n5));
    }

    #[test]
    fn flag_names_parse_back() {
        for f in Flag::ALL {
            assert_eq!(f.name().parse::<Flag>().unwrap(), f);
        }
        assert!("nope".parse::<Flag>().is_err());
    }
}
