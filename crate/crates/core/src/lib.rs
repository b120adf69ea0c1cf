//! Exact enumeration of words whose factor-occurrence counts satisfy a linear
//! relation.
//!
//! The pipeline builds the bivariate weight-enumerator of all words with the
//! Goulden-Jackson cluster method, extracts the constant term in the marker
//! variable, and then guesses (and checks) an algebraic equation and a
//! P-recursive recurrence for the resulting counting sequence. A dynamic
//! programming oracle over the pattern automaton supplies independent terms.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod arith;
pub mod asymptotics;
pub mod cluster;
pub mod diagonal;
mod error;
pub mod guess;
pub mod holonomic;
pub mod words;

pub use error::{Error, Result};
