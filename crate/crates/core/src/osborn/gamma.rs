//! The translation words `γ0, γ1, γ01∘, γ01∗, γ23∘, ψ0, ψ1, λ13, μ13`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::params::{circ3_first, phi0, phi1, phi2, w_of, ParamTriple};
use crate::config::{Conventions, Gamma1Word};
use crate::error::{Error, Result};
use crate::geometry::word::{Letter, TranslationWord};
use crate::loops::Loop;
use crate::perm::Perm;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GammaKind {
    Gamma0,
    Gamma1,
    Gamma01Circ,
    Gamma01Star,
    Gamma23Circ,
    Psi0,
    Psi1,
    Lambda13,
    Mu13,
}

impl GammaKind {
    pub const ALL: [GammaKind; 9] = [
        GammaKind::Gamma0,
        GammaKind::Gamma1,
        GammaKind::Gamma01Circ,
        GammaKind::Gamma01Star,
        GammaKind::Gamma23Circ,
        GammaKind::Psi0,
        GammaKind::Psi1,
        GammaKind::Lambda13,
        GammaKind::Mu13,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GammaKind::Gamma0 => "gamma0",
            GammaKind::Gamma1 => "gamma1",
            GammaKind::Gamma01Circ => "gamma01o",
            GammaKind::Gamma01Star => "gamma01s",
            GammaKind::Gamma23Circ => "gamma23o",
            GammaKind::Psi0 => "psi0",
            GammaKind::Psi1 => "psi1",
            GammaKind::Lambda13 => "lambda13",
            GammaKind::Mu13 => "mu13",
        }
    }
}

impl fmt::Display for GammaKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GammaKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        GammaKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::UnknownName(format!("unknown map {s:?}")))
    }
}

/// `𝕉_v R_{u\(xv)}`.
fn right_block(l: &Loop, p: ParamTriple) -> TranslationWord {
    vec![Letter::right_inv(p.v), Letter::right(w_of(l, p))].into()
}

/// `𝕃_u L_x`.
fn left_block(p: ParamTriple) -> TranslationWord {
    vec![Letter::left_inv(p.u), Letter::left(p.x)].into()
}

/// The word for `which`. For `γ23∘` this is the right-translation form.
pub fn gamma_word(l: &Loop, which: GammaKind, p: ParamTriple, conv: &Conventions) -> TranslationWord {
    let w = w_of(l, p);
    match which {
        GammaKind::Gamma0 => right_block(l, p).then(&left_block(p)),
        GammaKind::Gamma1 => match conv.gamma1 {
            Gamma1Word::Swapped => left_block(p).then(&right_block(l, p)),
            Gamma1Word::Printed => right_block(l, p).then(&left_block(p)),
        },
        GammaKind::Gamma01Circ | GammaKind::Psi0 => {
            vec![Letter::right_inv(phi0(l, p)), Letter::right(w)].into()
        }
        GammaKind::Gamma01Star | GammaKind::Psi1 => {
            vec![Letter::left_inv(p.x), Letter::left(phi1(l, p, conv.phi1))].into()
        }
        GammaKind::Gamma23Circ => vec![
            Letter::right_inv(phi2(l, p)),
            Letter::right(l.ldiv(p.u, p.v)),
            Letter::right_inv(p.v),
            Letter::right(w),
        ]
        .into(),
        GammaKind::Lambda13 => {
            vec![Letter::right(l.ldiv(p.u, p.v)), Letter::right_inv(p.v)].into()
        }
        GammaKind::Mu13 => vec![Letter::left(p.u), Letter::left_inv(l.ldiv(p.u, p.v))].into(),
    }
}

/// The left-translation form `𝕃_x L_u 𝕃_{u\v} L_{[x(u\v)]/v}` of `γ23∘`.
pub fn gamma23_left_word(l: &Loop, p: ParamTriple) -> TranslationWord {
    vec![
        Letter::left_inv(p.x),
        Letter::left(p.u),
        Letter::left_inv(l.ldiv(p.u, p.v)),
        Letter::left(circ3_first(l, p)),
    ]
    .into()
}

/// Both forms of `γ23∘`, evaluated: `(right, left)`.
pub fn gamma23_forms(l: &Loop, p: ParamTriple, conv: &Conventions) -> (Perm, Perm) {
    (
        gamma_word(l, GammaKind::Gamma23Circ, p, conv).eval(l),
        gamma23_left_word(l, p).eval(l),
    )
}

/// Evaluates the word for `which`. `γ23∘` is only returned when its two
/// forms agree.
pub fn gamma(l: &Loop, which: GammaKind, p: ParamTriple, conv: &Conventions) -> Result<Perm> {
    if which == GammaKind::Gamma23Circ {
        let (right, left) = gamma23_forms(l, p, conv);
        return if right == left {
            Ok(right)
        } else {
            Err(Error::Gamma23Mismatch {
                params: p.as_array(),
            })
        };
    }
    Ok(gamma_word(l, which, p, conv).eval(l))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: usize) -> Loop {
        Loop::from_table(n, (0..n * n).map(|i| (i / n + i % n) % n).collect()).unwrap()
    }

    fn shift(k: usize) -> Perm {
        Perm::from_images((0..3).map(|x| (x + k) % 3).collect()).unwrap()
    }

    #[test]
    fn spot_values_on_z3() {
        let l = z(3);
        let c = Conventions::default();
        let p = ParamTriple::new(1, 0, 0);
        assert_eq!(gamma(&l, GammaKind::Gamma0, p, &c).unwrap(), shift(2));
        assert_eq!(gamma(&l, GammaKind::Gamma1, p, &c).unwrap(), shift(2));
        assert_eq!(gamma(&l, GammaKind::Gamma01Circ, p, &c).unwrap(), shift(2));
        assert_eq!(gamma(&l, GammaKind::Gamma01Star, p, &c).unwrap(), shift(1));
        assert!(gamma(&l, GammaKind::Gamma23Circ, p, &c)
            .unwrap()
            .is_identity());
    }

    #[test]
    fn gamma23_mismatch_is_an_error() {
        let l = z(3);
        let p = ParamTriple::new(0, 0, 1);
        assert_eq!(
            gamma(&l, GammaKind::Gamma23Circ, p, &Conventions::default()),
            Err(Error::Gamma23Mismatch { params: [0, 0, 1] })
        );
    }

    #[test]
    fn word_lengths() {
        let l = z(3);
        let c = Conventions::default();
        let p = ParamTriple::new(1, 2, 0);
        let lens: Vec<usize> = GammaKind::ALL
            .iter()
            .map(|&k| gamma_word(&l, k, p, &c).len())
            .collect();
        assert_eq!(lens, vec![4, 4, 2, 2, 4, 2, 2, 2, 2]);
    }

    #[test]
    fn names_round_trip() {
        for k in GammaKind::ALL {
            assert_eq!(k.name().parse::<GammaKind>().unwrap(), k);
        }
    }
}
