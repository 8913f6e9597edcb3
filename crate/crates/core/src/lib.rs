//! Exact and numeric verification of the weight-2 and weight-3 polylogarithmic
//! prism diagrams over the Grassmannian configuration complex.
//!
//! Three realizations of the field F with a derivation D are provided
//! ([`backend`]): a free lattice on determinant symbols, ℚ(t) with d/dt, and
//! complex configurations carrying a tangent vector. Every map lives in
//! [`groups`] and [`morphisms`]; [`verifier`] checks each face of both prisms.

pub mod backend;
pub mod configs;
pub mod conventions;
pub mod error;
pub mod freemod;
pub mod groups;
pub mod morphisms;
pub mod oracles;
pub mod scalars;
pub mod symlattice;
pub mod verifier;

pub use error::{Error, Result};
