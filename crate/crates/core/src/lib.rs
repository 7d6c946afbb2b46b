//! Extended quotients of compact tori by products of symmetric groups, and the
//! component atlas they induce on the tempered dual of p-adic `GL(n)`.
//!
//! The crate has two independent routes to every count it reports:
//!
//! - [`symbolic_eq`] writes each component `X^γ/Z(γ)` of `T^n // S_n` as a
//!   product of symmetric powers of the circle, read off from the cycle type
//!   of `γ`;
//! - [`finite_oracle`] builds the discretized torus `(Z/m)^n` with an explicit
//!   permutation action and enumerates orbits of commuting pairs by brute force.
//!
//! [`torus_model`] ties the two together, [`bernstein_atlas`] models shapes of
//! Bernstein-spectrum points and their Morita classes, and
//! [`iwahori_spherical`] covers the Borel component, its Steinberg-block
//! parameters and the spherical (ordinary-quotient) piece.

pub mod bernstein_atlas;
pub mod cli;
mod error;
pub mod finite_oracle;
pub mod iwahori_spherical;
pub mod partitions;
pub mod symbolic_eq;
pub mod torus_model;

pub use error::{Error, Result};
