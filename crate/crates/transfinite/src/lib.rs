//! Products of ordinal-indexed sequences.
//!
//! Given a base semigroup that provides a binary product and an omega power,
//! this crate evaluates the product of any symbolically representable
//! sequence indexed by a countable ordinal below `w^w`, and ships the
//! machinery to check the laws that make that evaluation well defined:
//! generalized associativity under regrouping, independence from the choice
//! of cofinal cut sequence, and the unit law.
//!
//! The pieces:
//!
//! - [`ordinal`]: exact Cantor-normal-form arithmetic below epsilon-zero.
//! - [`seq`]: symbolic nonempty transfinite sequences (single letters,
//!   finite concatenation, omega repetition) and regroupings.
//! - [`expr`]: the text grammar for sequence expressions such as `(a b)^w c`.
//! - [`semigroup`]: the base-semigroup contract, built-in instances, finite
//!   multiplication tables, and the brute-force law checker.
//! - [`engine`]: the evaluator, with auditable traces, regrouped evaluation,
//!   alternative-cut evaluation, and the absorbing-element completion.
//! - [`lawcheck`]: seeded deterministic generators and the fuzz driver that
//!   turns the laws into repeatable property suites.

pub mod engine;
pub mod expr;
pub mod lawcheck;
pub mod ordinal;
pub mod semigroup;
pub mod seq;

// re-exports restored as modules land
pub use ordinal::{Ordinal, OrdinalClass};


