//! Exact algebra for Burniat surfaces.
//!
//! The crate reproduces the finite computations behind the fundamental groups
//! of Burniat surfaces: the affine group `Γ` acting on `ℂ³`, its finite
//! quotient `Γ/2Λ` and the torsion quotients for `K² = 5..2`, the fixed-point
//! calculus on `E₁×E₂×E₃`, the nine-line plane arrangements, and the symbolic
//! identities for the elliptic normal forms.
//!
//! Everything is exact: integers are arbitrary precision where growth is
//! possible, rationals are `BigRational`, and algebraic numbers live in
//! `ℚ(ζ₈)`.

pub mod affine;
pub mod cyclotomic;
pub mod elliptic;
pub mod error;
pub mod exact;
pub mod finite;
pub mod pipeline;
pub mod plane;
pub mod poly;
pub mod report;
pub mod torus;

pub use error::{Error, Result};
