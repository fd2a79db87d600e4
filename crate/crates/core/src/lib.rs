//! Loop-space decompositions of polyhedral products over graph families.
//!
//! The crate is split along the objects it manipulates:
//!
//! * [`complex`] builds finite simplicial complexes (paths, cycles, book graphs,
//!   iterated gluings) and the combinatorial operations on them.
//! * [`homology`] computes exact reduced Betti numbers and the Hochster
//!   brute-force Betti table of a moment-angle complex.
//! * [`series`] is exact truncated power-series arithmetic together with the
//!   face-ring Hilbert series and the Koszul loop-homology oracle.
//! * [`space`] is a term algebra of homotopy types with a normalizer, the
//!   James and Hilton–Milnor splittings, and rational Poincaré series.
//! * [`decomp`] assembles the loop-space decompositions themselves.
//!
//! Everything here is pure and allocation-only, so the crate is `no_std`.
//! IO, parallel enumeration, and the command line live in the `polyloop` crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod complex;
pub mod decomp;
mod error;
pub mod homology;
pub mod series;
pub mod space;

pub use complex::{GluingSpec, SimplicialComplex};
pub use decomp::{DecompResult, LoopModel, Step};
pub use error::{Error, Result};
pub use homology::{BettiTable, ReducedBetti};
pub use series::TruncSeries;
pub use space::{Atom, SpaceExpr, SphereMultiset};
