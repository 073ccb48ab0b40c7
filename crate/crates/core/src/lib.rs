//! Spindle numbers of isotropy orbits in the classical compact symmetric spaces.
//!
//! The crate models each classical family as matrix Lie-theoretic data
//! (a compact Lie algebra inside `u(N)`, a Cartan involution, and the
//! isotropy group as a membership predicate), builds the distinguished
//! elements of extrinsically symmetric type, and computes spindle numbers
//! twice: once from exact rational-angle arithmetic and once by searching
//! for the first return of `exp(nπξ)` to the isotropy group.
//!
//! The crate is `no_std` (it needs `alloc`); IO, serialization and the
//! command-line front end live in the companion `spindles` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

mod error;
pub mod linalg;
pub mod spaces;
pub mod spindle;

pub use error::{Error, Result};
pub use linalg::{ComplexMatrix, RationalAngle, Tolerance};
pub use spaces::{build_space, canonical_xi, FamilyTag, SpaceFamily, SpaceInstance};
pub use spindle::{ad_spectrum, spindle_number, AdSpectrum, CartanSplit, SpindleReport};

/// Complex scalar used throughout.
pub type Complex = num_complex::Complex64;
