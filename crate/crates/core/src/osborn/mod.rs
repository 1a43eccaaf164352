//! Osborn identities, the named isotopes and the maps between them.

pub mod diagram;
pub mod gamma;
pub mod params;
pub mod theorem;

use serde::{Deserialize, Serialize};

use crate::config::Bounds;
use crate::error::Result;
use crate::isotopy::{principal_isotope, PrincipalPair};
use crate::loops::{InverseKind, Loop};

pub use diagram::{diagram_arrows, verify_diagram, verify_diagram_all, Arrow, ArrowKind, Diagram};
pub use gamma::{gamma, gamma23_forms, gamma23_left_word, gamma_word, GammaKind};
pub use params::{build_isotope, phi, phi0, phi1, phi2, w_of, IsotopeLabel, ParamTriple, PhiIndex};
pub use theorem::{check_theorem, TheoremName};

/// `(x(yz))x = (xy)((x^λ(xz))x)`, first failure in lexicographic order.
pub fn os3_failure(l: &Loop) -> Option<[usize; 3]> {
    first_triple(l, |x, y, z| {
        let lhs = l.mul(l.mul(x, l.mul(y, z)), x);
        let xl = l.inverse_element(InverseKind::Lambda, x);
        let rhs = l.mul(l.mul(x, y), l.mul(l.mul(xl, l.mul(x, z)), x));
        lhs == rhs
    })
}

/// `(x(yz))x = (xy)((x(x^ρz))x)`, first failure in lexicographic order.
pub fn os5_failure(l: &Loop) -> Option<[usize; 3]> {
    first_triple(l, |x, y, z| {
        let lhs = l.mul(l.mul(x, l.mul(y, z)), x);
        let xr = l.inverse_element(InverseKind::Rho, x);
        let rhs = l.mul(l.mul(x, y), l.mul(l.mul(x, l.mul(xr, z)), x));
        lhs == rhs
    })
}

fn first_triple(l: &Loop, ok: impl Fn(usize, usize, usize) -> bool) -> Option<[usize; 3]> {
    for x in l.elements() {
        for y in l.elements() {
            for z in l.elements() {
                if !ok(x, y, z) {
                    return Some([x, y, z]);
                }
            }
        }
    }
    None
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct OsbornReport {
    pub holds: bool,
    pub os3_failure: Option<[usize; 3]>,
    pub os5_failure: Option<[usize; 3]>,
}

impl OsbornReport {
    /// The two identities are offered as alternative definitions; a loop
    /// satisfying exactly one of them is worth reporting.
    pub fn identities_disagree(&self) -> bool {
        self.os3_failure.is_some() != self.os5_failure.is_some()
    }
}

pub fn is_osborn(l: &Loop) -> OsbornReport {
    let os3_failure = os3_failure(l);
    let os5_failure = os5_failure(l);
    OsbornReport {
        holds: os3_failure.is_none() && os5_failure.is_none(),
        os3_failure,
        os5_failure,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct UniversalWitness {
    pub pair: PrincipalPair,
    pub triple: [usize; 3],
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct UniversalReport {
    pub holds: bool,
    pub witness: Option<UniversalWitness>,
}

/// Every principal isotope satisfies OS3. Any loop isotope is isomorphic to
/// a principal one, so these cover all isotopes.
pub fn is_universal_osborn(l: &Loop, bounds: &Bounds) -> Result<UniversalReport> {
    Bounds::check("universal Osborn test", l.order(), bounds.universal)?;
    for (f, g) in l.pairs() {
        let pair = PrincipalPair::new(f, g);
        if let Some(triple) = os3_failure(&principal_isotope(l, pair)) {
            return Ok(UniversalReport {
                holds: false,
                witness: Some(UniversalWitness { pair, triple }),
            });
        }
    }
    Ok(UniversalReport {
        holds: true,
        witness: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::identity::catalog;

    fn z(n: usize) -> Loop {
        Loop::from_table(n, (0..n * n).map(|i| (i / n + i % n) % n).collect()).unwrap()
    }

    fn n5() -> Loop {
        Loop::parse("5\n0 1 2 3 4\n1 0 3 4 2\n2 3 4 0 1\n3 4 1 2 0\n4 2 0 1 3").unwrap()
    }

    #[test]
    fn groups_are_osborn() {
        for n in 1..=6 {
            let r = is_osborn(&z(n));
            assert!(r.holds && !r.identities_disagree());
            assert!(is_universal_osborn(&z(n), &Bounds::default()).unwrap().holds);
        }
    }

    #[test]
    fn n5_is_not_osborn() {
        let r = is_osborn(&n5());
        assert!(!r.holds);
        assert_eq!(r.os3_failure, Some([1, 0, 2]));
        let u = is_universal_osborn(&n5(), &Bounds::default()).unwrap();
        assert!(!u.holds);
        assert_eq!(u.witness.unwrap().pair, PrincipalPair::new(0, 0));
    }

    #[test]
    fn hand_rolled_matches_parsed() {
        let l = n5();
        let parsed = catalog::get(catalog::OS3).check(&l);
        assert_eq!(parsed.witness().map(|w| w.to_vec()), os3_failure(&l).map(|w| w.to_vec()));
        let parsed = catalog::get(catalog::OS5).check(&l);
        assert_eq!(parsed.witness().map(|w| w.to_vec()), os5_failure(&l).map(|w| w.to_vec()));
    }
}
