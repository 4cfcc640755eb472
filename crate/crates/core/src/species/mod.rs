//! Exact coefficient calculus for unisort and two-sort species.
//!
//! Species are handled through their labeled counts only: a unisort species
//! is a [`Series`] of `|F[n]|`, a two-sort species a [`Table`] of
//! `|F[i,j]|`. Operations act on counts and stay inside the coefficient
//! ring; composition and logarithm use derivative recurrences, so integer
//! inputs give integer outputs with no intermediate division.
//!
//! Identities involving infinite virtual species (`E^{-1}`, `L^{-1}`, logs)
//! only hold up to the truncation of the operands.

mod atom;
mod expr;
mod series;
mod table;
mod trees;

pub use atom::{atom_coeffs, Atom};
pub use expr::{SpeciesExpr, Value};
pub use series::{Series, Tag};
pub use table::{compose_uni_two, Table};
pub use trees::{solve_bounded_tree, solve_tree_equation, solve_two_sort_tree};
