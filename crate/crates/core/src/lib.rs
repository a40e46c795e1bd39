//! Matroids on small ground sets, stored by their basis family.
//!
//! The crate computes internal/external basis activities, Tutte polynomials
//! (by activity sums and by deletion-contraction), and decides
//! `(k,l)`-uniformity, almost-`(k,l)`-uniformity and excluded minors of the
//! almost-`(k,l)`-uniform class through several independent routes. It also
//! builds the named matroids used throughout (uniform, Schubert, and the
//! truncated direct sums `τ^m(N ⊕ U)`), searches for isomorphisms and minors,
//! and enumerates every labeled matroid on up to six elements.
//!
//! Everything here is pure computation over immutable values; the crate is
//! `no_std` and only needs `alloc`.

#![no_std]
#![warn(missing_debug_implementations)]

extern crate alloc;

pub mod activity;
pub mod census;
pub mod constructors;
mod error;
pub mod iso;
pub mod matroid;
pub mod set;
pub mod tutte;
pub mod uniformity;

pub use activity::ActivityPair;
pub use constructors::SchubertSpec;
pub use error::{Error, Result};
pub use iso::IsoCertificate;
pub use matroid::Matroid;
pub use set::ElementSet;
pub use tutte::TuttePolynomial;
pub use uniformity::{KLPair, UniformityProfile};

/// Largest supported ground set. Every subset fits in one `u16`.
pub const MAX_ELEMENTS: usize = 16;
