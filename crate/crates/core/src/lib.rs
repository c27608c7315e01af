//! Exact-arithmetic invariants of lens spaces L(p,q).
//!
//! Everything is computed over arbitrary-precision rationals: Dedekind
//! and Dedekind-Rademacher sums, the eta-invariant function F on spin^c
//! structures, the Seiberg-Witten polynomial in Q[Z_p], the Froyshov
//! and Casson-Walker invariants, the Milnor-Turaev torsion comparison,
//! and the Elkies invariant of the canonical negative-definite plumbing.
//! The `checks` module packages the identity and fixture suites that
//! cross-validate all of it.

pub mod error;
pub mod exact;

pub mod checks;
pub mod conjectures;
pub mod dedekind;
pub mod groupring;
pub mod lens;
pub mod plumbing;
pub mod sw;

pub use error::{Error, Result};
