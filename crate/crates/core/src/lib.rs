//! Spectral sets and translational tilings in Z_p^d, decided exactly.
//!
//! A set `E ⊆ Z_p^d` is spectral when its function space has an orthogonal
//! basis of characters `x ↦ χ(x·a)`, and it tiles when some set of
//! translates of it partitions the space. Both questions reduce to exact
//! integer computations here: Fourier coefficients of indicators live in
//! Z[ξ] and vanish exactly when the set is equidistributed over a family of
//! parallel hyperplanes, and tilings are found by exact cover.
//!
//! The [`verifier`] module runs exhaustive campaigns over the plane Z_p^2
//! checking that the two notions coincide there.

pub mod affine;
pub mod cyclotomic;
pub mod directions;
pub mod enumerate;
pub mod error;
pub mod field;
pub mod fourier;
pub mod setfile;
pub mod space;
pub mod spectra;
pub mod tiling;
pub mod verifier;

pub use error::{Error, Result};
pub use field::{PrimeModulus, Residue};
pub use space::{Ambient, PointSet, Vector};
