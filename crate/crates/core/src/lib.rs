//! Enumeration and classification engine for tilted and silted algebras of
//! the linearly oriented quiver `1 → 2 → ⋯ → n` of type A.
//!
//! The engine runs two disk models side by side and cross-checks them against
//! purely algebraic oracles:
//!
//! * a module-side model ([`surface`]): triangulations of a marked disk encode
//!   support τ-tilting modules, and each triangulation containing the chord
//!   joining the two extra marked points induces a bound quiver algebra which
//!   is the endomorphism algebra of the corresponding module;
//! * a derived-side model ([`derived`]): graded arc systems on a disk with one
//!   red arc per vertex encode two-term silting complexes, and each system
//!   induces a graded algebra whose degree-zero part is the endomorphism
//!   algebra of the complex.
//!
//! The algebraic ground truth lives in [`modules`] (interval modules, Hom, τ)
//! and [`complexes`] (explicit two-term complexes of projectives with chain
//! maps computed modulo homotopy by exact linear algebra). [`classify`] ties
//! everything together: deduplicated catalogs, closed-form counts, and a
//! machine-readable verification report.

pub mod classify;
pub mod complexes;
pub mod derived;
mod error;
pub mod frac;
pub mod linalg;
pub mod modules;
pub mod quiver;
pub mod surface;

pub use error::{Error, Result};

/// Hard ceiling on the rank `n`. Object counts follow the Catalan numbers, so
/// this keeps accidental requests from exploding; C_15 = 9 694 845 is the
/// largest enumeration the engine will agree to run.
pub const MAX_RANK: usize = 14;

pub(crate) fn check_rank(n: usize) -> Result<()> {
    if n == 0 || n > MAX_RANK {
        Err(Error::RankOutOfRange { n, max: MAX_RANK })
    } else {
        Ok(())
    }
}
