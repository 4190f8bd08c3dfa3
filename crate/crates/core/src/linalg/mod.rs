//! Exact and numeric spectral computations.

mod bareiss;
mod charpoly;
mod jacobi;
mod poly;
mod profile;
mod sturm;

use thiserror::Error;

pub use bareiss::{determinant, integer_eigen_multiplicity, rank, shifted_adjacency};
pub use charpoly::{char_poly, char_poly_of_matrix, CharPoly};
pub use jacobi::{numeric_spectrum, symmetric_eigenvalues, MAX_SWEEPS};
pub use poly::Poly;
pub use profile::{
    is_squarefree, multiplicity_profile, profile_of_poly, squarefree_decomposition, strip_root,
    LinearFactor, MultiplicityProfile, ResidualFactor,
};
pub use sturm::{count_roots_between, count_roots_leq, integer_point, sturm_sequence, RootCount};

use crate::graph::Graph;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum LinalgError {
    #[error(
        "Jacobi iteration did not converge after {sweeps} sweeps (off-diagonal norm {residual:e})"
    )]
    NonConvergence { sweeps: usize, residual: f64 },
    #[error("polynomial is identically zero")]
    ZeroPolynomial,
    #[error("tolerance must be positive and finite, got {0}")]
    InvalidTolerance(f64),
}

/// Equal characteristic polynomials.
pub fn cospectral(g1: &Graph, g2: &Graph) -> bool {
    g1.order() == g2.order() && char_poly(g1) == char_poly(g2)
}
