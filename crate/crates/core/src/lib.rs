//! Scalar linear index codes over GF(2) for symmetric multiple-unicast
//! broadcast with one-sided neighboring side information.
//!
//! Ten families of side-information patterns admit explicit codes of length
//! K-D, the best any scalar linear code can do. This crate builds those
//! codes, certifies them receiver by receiver, counts the transmissions each
//! receiver actually needs, and cross-checks optimality with an exact minrank
//! search over fitting matrices.
//!
//! - [`gf2`]: bit-packed vectors and matrices, rank, span membership.
//! - [`model`]: antidote patterns, parameter validation, capacity.
//! - [`construct`]: the ten code constructions.
//! - [`verify`]: decodability and exact minimum transmission counts.
//! - [`minrank`]: exact minrank and edge criticality by pruned search.
//! - [`textio`]: diffable matrix and report formats.
//! - [`cli`]: the `index-codes` command-line tool.

pub mod cli;
pub mod construct;
mod error;
pub mod gf2;
pub mod minrank;
pub mod model;
pub mod textio;
pub mod verify;

pub use error::{Error, Result};
