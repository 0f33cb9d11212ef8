//! Constrained regular expressions.
//!
//! Regular expressions extended with a constraint operator `E | φ`, which gates a
//! language by a boolean formula over words, and a match operator `α -| E`, which
//! filters a mixed word of letters and variables through an expression.
//!
//! The crate provides parsing and printing, evaluation under a fixed
//! interpretation and realization, constrained partial derivatives, the
//! ε-indicator set, and a decision procedure for the free-interpretation
//! membership test built on term normalization and propositionalisation.
//! Brute-force reference implementations live in [`oracle`].
//!
//! Satisfiability for a fixed interpretation is undecidable in general (a length
//! predicate can encode Diophantine systems), so only the free case is decided.
#![no_std]

extern crate alloc;

pub mod derivation;
pub mod error;
pub mod logic;
pub mod nullability;
pub mod oracle;
pub mod semantics;
pub mod syntax;

pub use error::{Error, Result};
