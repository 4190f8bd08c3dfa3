//! Exact spectral verification toolkit for `K_n` with the edges of a path
//! removed.
//!
//! The crate is organised bottom-up:
//!
//! * [`graph`]: bit-row graphs, named families, canonical forms, graph6.
//! * [`linalg`]: exact characteristic polynomials, ranks, Sturm counting,
//!   square-free multiplicity profiles and a Jacobi eigensolver.
//! * [`census`]: closed walks, small-pattern subgraph counts and the
//!   complement walk-count polynomials in the vertex count `n`.
//! * [`candidates`]: degree/triangle parameter combinations, isomorph-free
//!   enumeration of small edge sets and the candidate tables.
//! * [`pipeline`]: the elimination cascade, the DS verdict, the exhaustive
//!   oracle and the eigenstructure checks.

pub mod candidates;
pub mod census;
pub mod graph;
pub mod linalg;
pub mod pipeline;

#[cfg(test)]
mod test_support;
