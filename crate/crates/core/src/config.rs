use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Order caps for the exhaustive searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bounds {
    /// Full autotopism enumeration (`n!·n` candidates).
    pub autotopisms: usize,
    /// Second Bryant–Schneider membership scan.
    pub bs2: usize,
    /// Universal Osborn test, G-loop test and the all-`p` checkers.
    pub universal: usize,
    /// Exhaustive loop enumeration.
    pub enumerate: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            autotopisms: 8,
            bs2: 6,
            universal: 16,
            enumerate: 7,
        }
    }
}

impl Bounds {
    /// Raises every cap to at least `n`.
    pub fn at_least(self, n: usize) -> Self {
        Bounds {
            autotopisms: self.autotopisms.max(n),
            bs2: self.bs2.max(n),
            universal: self.universal.max(n),
            enumerate: self.enumerate.max(n),
        }
    }

    pub(crate) fn check(what: &'static str, order: usize, bound: usize) -> Result<()> {
        if order > bound {
            Err(Error::BoundExceeded { what, order, bound })
        } else {
            Ok(())
        }
    }
}

/// Which word defines `γ1`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Gamma1Word {
    /// `𝕃_u L_x 𝕉_v R_{u\(xv)}`: the two blocks of `γ0` in the other order.
    #[default]
    Swapped,
    /// The word as printed, identical to `γ0`.
    Printed,
}

/// Which formula defines `φ1`, the first parameter of `(Q,∗1)`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Phi1Formula {
    /// `(uv)/(u\(xv))`, solved from the `γ1` arrow the same way `φ0` follows
    /// from the `γ0` arrow.
    #[default]
    Derived,
    /// The printed formula, identical to `φ0`.
    Printed,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Conventions {
    pub gamma1: Gamma1Word,
    pub phi1: Phi1Formula,
}
