//! Exact Galois cohomology for real forms of simple linear algebraic groups.
//!
//! Given a simple real group `G` that occurs as the differential Galois group of a
//! real Picard-Vessiot extension, the set of Picard-Vessiot extensions for the same
//! equation (up to differential isomorphism) is in bijection with `H^1(k, G(k̄))`
//! where `k` is the real closed field of constants. This crate computes that set,
//! together with the Galois group of each class, and provides exact constructive
//! checks of the cocycle and form machinery behind the counts.
//!
//! The real closed field `k` is modelled by the rationals and `k̄ = k(i)` by the
//! Gaussian rationals. Every classification result is a signature-level invariant,
//! which is complete over a real closed field.
//!
//! Module map:
//! - [`exactnum`]: rational, Gaussian rational, quaternion and cyclotomic scalars
//! - [`matrix`]: dense exact matrices, structured matrices, Cayley sampling
//! - [`forms`]: quadratic/hermitian forms, congruence diagonalization, 3-Pfister forms
//! - [`quatlin`]: the quaternionic embedding into `GL(2m, k̄)` and quaternionic forms
//! - [`cohomology`]: 1-cocycles for `Gal(k̄|k) = {1, c}` and their invariants
//! - [`classify`]: the class counts and per-class Galois groups
//! - [`verify`]: randomized exact property suites used by the CLI

pub mod classify;
pub mod cohomology;
pub mod error;
pub mod exactnum;
pub mod forms;
pub mod matrix;
pub mod quatlin;
pub mod rng;
pub mod verify;

pub use error::{Error, Result};
pub use exactnum::{CycloElement, GaussRational, Quaternion, Rational, Scalar, ScalarKind};
pub use matrix::{AnyMatrix, Matrix};
