//! Isomorph-free enumeration of graphs by edge count.

use std::collections::BTreeSet;

use rayon::prelude::*;

use super::CandidateError;
use crate::graph::{canonical_form, CanonicalCode, Graph};

pub const MAX_ENUM_EDGES: usize = 9;

/// Every graph with exactly `m` edges and no isolated vertices, one per
/// isomorphism class, in canonical order.
///
/// Level `k + 1` is generated from level `k` by adding one edge in every
/// possible way (between two existing vertices, from an existing vertex
/// to a new one, or as a new `K_2`) and keeping one canonical
/// representative per class.
pub fn enumerate_graphs(m: usize) -> Result<Vec<Graph>, CandidateError> {
    if m > MAX_ENUM_EDGES {
        return Err(CandidateError::TooManyEdges {
            requested: m,
            max: MAX_ENUM_EDGES,
        });
    }
    let mut level: Vec<Graph> = vec![Graph::new(0).expect("empty graph")];
    for _ in 0..m {
        let next: BTreeSet<CanonicalCode> = level
            .par_iter()
            .flat_map_iter(children)
            .map(|g| canonical_form(&g).expect("at most 16 vertices"))
            .collect::<Vec<_>>()
            .into_iter()
            .collect();
        level = next.into_iter().map(CanonicalCode::into_graph).collect();
    }
    Ok(level)
}

fn children(g: &Graph) -> Vec<Graph> {
    let n = g.order();
    let mut out = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if !g.has_edge(u, v) {
                let mut h = g.clone();
                h.add_edge(u, v).expect("in range");
                out.push(h);
            }
        }
    }
    let grown = g
        .disjoint_union(&Graph::new(1).expect("one vertex"))
        .expect("small");
    for u in 0..n {
        let mut h = grown.clone();
        h.add_edge(u, n).expect("in range");
        out.push(h);
    }
    let mut h = g
        .disjoint_union(&Graph::new(2).expect("two vertices"))
        .expect("small");
    h.add_edge(n, n + 1).expect("in range");
    out.push(h);
    out
}
