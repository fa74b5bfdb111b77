//! Exact-arithmetic toolkit for the `(d, g, h)` parametrization of
//! `a^n + b^n = c^n`.
//!
//! The crate maps rational triples to parameters and back, builds the
//! degree `n - 1` polynomial `P_n(g, h)` whose roots correspond to real
//! solutions, verifies the symbolic derivation chain behind it, runs bounded
//! rational searches, and audits counterpart solutions with interval
//! enclosures.

pub mod arith;
pub mod audit;
mod error;
pub mod identity;
pub mod param;
pub mod poly;
pub mod search;

pub use arith::{q, ExactRational, RationalInterval};
pub use error::{Error, Result};
pub use poly::{RootEnclosure, UniPoly};
