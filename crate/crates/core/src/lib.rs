//! Truncated Dirichlet series supported on multiplicative subsemigroups of ℕ.

pub mod arith;
pub mod bohr;
pub mod cli;
pub mod error;
pub mod io;
pub mod sample;
pub mod scalar;
pub mod semigroup;
pub mod series;
pub mod stable_rank;

pub use error::{Error, Result};
