//! Exact enumeration of `R`-recurrent functional digraphs.
//!
//! A functional digraph whose recurrent points carry an `R`-structure and
//! whose remaining points hang off them as rooted trees, with internal
//! nodes and leaves kept as separate sorts. Identifying the sorts gives
//! endofunctions; placing internal nodes first gives Cayley permutations.
//!
//! The coefficient machinery is generic over [`Scalar`]; the aliases below
//! fix it to arbitrary-precision integers, which is what every counting
//! formula in the crate uses.

pub mod error;
pub mod scalar;
pub mod species;
pub mod stirling;
pub mod psi;
pub mod oracle;
pub mod joyal;
pub mod stats;
pub mod json;
pub mod verify;

pub use error::{Error, Result};
pub use scalar::Scalar;

pub use num_bigint::BigInt;

/// Unisort labeled counts over exact integers.
pub type CoeffSeq = species::Series<BigInt>;
/// Two-sort labeled counts over exact integers.
pub type CoeffTable = species::Table<BigInt>;
