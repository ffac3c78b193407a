//! Exact-arithmetic machinery for decomposing an affine (possibly nonnormal)
//! toric variety, presented by its weight monoid `P ⊂ Z^r`, into orbits of the
//! neutral component of its automorphism group.
//!
//! The pipeline: re-embed the generators so they generate the ambient lattice,
//! build the cone `σ∨ = cone(P)` and its dual `σ`, enumerate the face lattice,
//! decide for every face whether its orbit closure is invariant (via Demazure
//! roots, τ-roots and the admissibility condition `(e + P) ∩ σ∨ ⊆ P`), then
//! contract faces along the minimal-invariant-face map and read off the orbit
//! classes.
//!
//! All arithmetic is exact. The core is generic over the integer scalar via
//! [`Scalar`]; the aliases [`Int`] and [`Rat`] fix the default
//! arbitrary-precision instantiation.

pub mod bruteforce;
pub mod cone;
pub mod mat;
pub mod monoid;
pub mod orbits;
pub mod polyhedron;
pub mod reembed;
pub mod roots;
pub mod scalar;

mod error;

pub use error::{Error, Result};
pub use scalar::Scalar;

/// Default exact integer scalar.
pub type Int = num_bigint::BigInt;
/// Default exact rational scalar.
pub type Rat = num_rational::BigRational;

/// Convenience constructor for [`Int`] vectors from machine integers.
pub fn int_vec(coords: &[i64]) -> Vec<Int> {
    coords.iter().map(|&c| Int::from(c)).collect()
}
