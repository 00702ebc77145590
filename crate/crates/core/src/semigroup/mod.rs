//! Multiplicative subsemigroups of ℕ: symbolic descriptions, membership sieves,
//! closure checks, atoms and factorizations.

mod atoms;
mod sieve;
mod spec;

pub use atoms::{atoms, factorizations, factorizations_over, AtomReport};
pub use sieve::{
    sieve, sieve_expr, sieve_with_ceiling, MembershipSieve, SieveJson, Violation, DEFAULT_MAX_N,
};
pub use spec::{Generators, SemigroupSpec, SetExpr};
