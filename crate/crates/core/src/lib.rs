//! Provable bounds on the probability that a random gate-set fails to be a
//! δ-approximate unitary t-design, minimal gate-set sizes derived from them,
//! and Monte Carlo estimators of the moment-operator gap.
//!
//! The crate is `no_std` and needs only `alloc`; file formats, the command
//! line and parallel drivers live in the `tdbound` crate.

#![no_std]

extern crate alloc;

pub mod bounds;
pub mod error;
pub mod montecarlo;
pub mod rep;
pub mod solver;
pub mod specfun;

pub use error::{Error, Result};
