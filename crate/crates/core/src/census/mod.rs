//! Closed walks, small-pattern subgraph counts and complement walk-count
//! polynomials.

mod npoly;
mod patterns;

pub use npoly::{complement_triangles_poly, complement_walks4_poly, complement_walks5_poly, NPoly};
pub use patterns::{count_pattern, count_pattern_exhaustive, Pattern};

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::graph::Graph;

/// `trace(A^k)`, the number of closed walks of length `k`.
pub fn closed_walks(g: &Graph, k: usize) -> BigInt {
    let n = g.order();
    let mut total = BigInt::zero();
    for start in 0..n {
        // walks from `start` ending at each vertex
        let mut counts = vec![BigInt::zero(); n];
        counts[start] = BigInt::from(1);
        for _ in 0..k {
            let mut next = vec![BigInt::zero(); n];
            for (v, slot) in next.iter_mut().enumerate() {
                for u in crate::graph::bits(g.neighbors(v)) {
                    if !counts[u].is_zero() {
                        *slot += &counts[u];
                    }
                }
            }
            counts = next;
        }
        total += &counts[start];
    }
    total
}

/// The ten not-necessarily-induced pattern counts used by the walk
/// formulas.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct SubgraphCensus {
    /// Edges.
    pub m: u64,
    /// `P_3`.
    pub m1: u64,
    /// `K_2 ∪ K_2`.
    pub m2: u64,
    /// `P_4`.
    pub m3: u64,
    /// `C_4`.
    pub m4: u64,
    /// `K_3`.
    pub s1: u64,
    /// `P_3 ∪ K_2`.
    pub s2: u64,
    /// `K_{1,3}`.
    pub s3: u64,
    /// `P_5`.
    pub s4: u64,
    /// Triangle with a pendant edge.
    pub s5: u64,
    /// `C_5`.
    pub s6: u64,
}

impl SubgraphCensus {
    pub fn get(&self, p: Pattern) -> u64 {
        match p {
            Pattern::Edge => self.m,
            Pattern::P3 => self.m1,
            Pattern::TwoK2 => self.m2,
            Pattern::P4 => self.m3,
            Pattern::C4 => self.m4,
            Pattern::K3 => self.s1,
            Pattern::P3K2 => self.s2,
            Pattern::K13 => self.s3,
            Pattern::P5 => self.s4,
            Pattern::TrianglePendant => self.s5,
            Pattern::C5 => self.s6,
        }
    }
}

pub fn census(g: &Graph) -> SubgraphCensus {
    let mut c = SubgraphCensus::default();
    for p in Pattern::ALL {
        let v = count_pattern(g, p);
        match p {
            Pattern::Edge => c.m = v,
            Pattern::P3 => c.m1 = v,
            Pattern::TwoK2 => c.m2 = v,
            Pattern::P4 => c.m3 = v,
            Pattern::C4 => c.m4 = v,
            Pattern::K3 => c.s1 = v,
            Pattern::P3K2 => c.s2 = v,
            Pattern::K13 => c.s3 = v,
            Pattern::P5 => c.s4 = v,
            Pattern::TrianglePendant => c.s5 = v,
            Pattern::C5 => c.s6 = v,
        }
    }
    c
}

/// Checks the closed-walk identities for lengths 2 to 5:
///
/// * `N(2) = 2m`
/// * `N(3) = 6 N(K_3)`
/// * `N(4) = 2m + 4 N(P_3) + 8 N(C_4)`
/// * `N(5) = 30 N(K_3) + 10 N(C_5) + 10 N(G_a)`
pub fn check_walk_identities(g: &Graph) -> bool {
    let c = census(g);
    let expected = [
        2 * c.m,
        6 * c.s1,
        2 * c.m + 4 * c.m1 + 8 * c.m4,
        30 * c.s1 + 10 * c.s6 + 10 * c.s5,
    ];
    expected
        .iter()
        .zip(2..=5)
        .all(|(&e, k)| closed_walks(g, k) == BigInt::from(e))
}
