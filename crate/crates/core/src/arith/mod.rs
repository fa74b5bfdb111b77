//! Exact integers, canonical rationals and rational-endpoint intervals.

mod binomial;
mod interval;
mod rational;

pub use binomial::{binomial, binomial_row};
pub use interval::RationalInterval;
pub use rational::{q, ExactRational};

pub use num_bigint::BigInt;
