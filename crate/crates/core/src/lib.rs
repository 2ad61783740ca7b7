//! Exact combinatorics toolkit for the distance graphs on `{-1,0,1}` vectors
//! with three non-zero coordinates, where edges join pairs with scalar
//! product 1.
//!
//! The crate builds these graphs and their signplace-restricted subgraphs,
//! computes independence numbers exactly with a parallel branch-and-bound
//! solver, generates and verifies the extremal constructions (quad packings,
//! cobras, double cobras), evaluates the closed-form independence and
//! chromatic-bound formulas, and reproduces the published bound table for
//! signplace-constrained subgraphs.

mod bits;

pub mod appendix;
pub mod build;
pub mod cache;
pub mod constructions;
pub mod error;
pub mod formulas;
pub mod model;
pub mod solver;

pub use error::{Error, Result};
pub use model::{Graph, GraphOrigin, IndependentSet, Sign, Signplace, Vertex};
pub use solver::{Budget, SolveOptions, SolveOutcome, SolveReport};
