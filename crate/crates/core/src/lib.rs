//! Hyperspherical and hypercylindrical harmonics in N dimensions.
//!
//! The crate covers the coordinate systems themselves ([`coords`]), the
//! numerical kernels they need ([`specfun`]), the Legendre hierarchy up to the
//! hyperspherical associated Legendre functions ([`legendre`]), assembly of
//! separated Helmholtz modes ([`physics`]) and finite-difference oracles that
//! check all of the above ([`verify`]).

// NaN must fail these range checks, so they are written as negated comparisons.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod coords;
pub mod error;
pub mod legendre;
pub mod physics;
pub mod specfun;
pub mod verify;

pub use error::{Error, Result};
