//! Exact arithmetic for the classification of Fano threefolds of
//! anticanonical degree 64.
//!
//! The crate is organised bottom-up:
//!
//! - [`lattice`]: rationals, vectors in Z^3, determinants.
//! - [`surfaces`]: P^2 and the Hirzebruch surfaces, intersection forms.
//! - [`bundles`]: Chern-class calculus on P^1-bundles, scrolls and quadric bundles.
//! - [`wps`]: weighted projective 3-spaces.
//! - [`toric`]: fans, cone singularities and anticanonical polytopes.
//! - [`ledger`]: degree and genus bookkeeping under projections and blow-ups.
//! - [`elimination`]: the case engine that assembles all of the above into
//!   verifiable case records and the final list of seven threefolds.
//!
//! No floating point is used anywhere.

pub mod bundles;
pub mod elimination;
pub mod error;
pub mod lattice;
pub mod ledger;
mod serde_int;
pub mod surfaces;
pub mod toric;
pub mod wps;

pub use error::{Error, Result};
pub use lattice::{Int, LatticeVec3, Rational};
