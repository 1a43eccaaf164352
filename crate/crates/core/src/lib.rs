//! Finite loops given by Cayley tables, their isotopes and autotopisms, and
//! checkers for the Osborn isotope diagrams and the isomorphism statements
//! between them.

pub mod certificate;
pub mod classify;
pub mod config;
pub mod enumerate;
pub mod error;
pub mod geometry;
pub mod identity;
pub mod isotopy;
pub mod loops;
pub mod osborn;
pub mod parallel;
pub mod perm;
pub mod simplicial;

pub use certificate::{Certificate, Clause, Tally};
pub use config::{Bounds, Conventions, Gamma1Word, Phi1Formula};
pub use error::{Error, Result};
pub use isotopy::{IsoTriple, PrincipalPair};
pub use loops::{InverseKind, Loop, Nucleus, Side};
pub use perm::Perm;
