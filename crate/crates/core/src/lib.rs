//! Exact integer calculus for Dehn surgery between lens spaces.
//!
//! The crate is `no_std` and only needs `alloc`. Everything here is a pure
//! function over immutable values:
//!
//! - [`lens`]: lens-space values, normalization under the oriented or
//!   unoriented homeomorphism criterion, first Betti number and the
//!   quadratic-residue obstruction.
//! - [`one_bridge`]: the basic sequence of `(p, q)` and the invariants
//!   `psi`, `phi`, `phi_tilde` of the once-punctured knots `K(L(p,q); u)`,
//!   together with the torus / toroidal / hyperbolic classification.
//! - [`pi1`]: two-generator presentations of longitudinal surgeries on those
//!   knots, their abelianization, and a bounded Tietze-style simplifier.
//! - [`surgery`]: slopes, the braid-closure surgery formula, the built-in
//!   link families and the pseudo-Anosov / distance-three criteria.
//! - [`distance`]: lower and upper bounds for the surgical distances `d` and
//!   `d_H` between lens spaces, with cited evidence.
#![no_std]

extern crate alloc;

pub mod arith;
pub mod distance;
mod error;
pub mod lens;
pub mod one_bridge;
pub mod pi1;
pub mod surgery;

pub use error::{Error, Result};
pub use lens::{Convention, LensSpace, RawLensParams};
pub use one_bridge::{BasicSequence, Classification, KnotInvariants, OneBridgeKnotSpec};
pub use pi1::{GroupPresentation, Letter, SimplifyOutcome, SimplifyReport, Word};
pub use surgery::{FillingCoefficients, Slope};
