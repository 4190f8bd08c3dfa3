use serde::{Deserialize, Serialize};

use super::{Graph, GraphError};

/// Named graph families used throughout the candidate tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FamilySpec {
    /// Path on the given number of vertices.
    Path(usize),
    Cycle(usize),
    Complete(usize),
    /// `K_{1,k}`.
    Star(usize),
    /// Tree with a degree-3 centre and legs of `b`, `c`, `d` edges.
    Spider(usize, usize, usize),
    /// Triangle with one pendant edge.
    TrianglePendant,
    Empty(usize),
}

pub fn make_family(spec: FamilySpec) -> Result<Graph, GraphError> {
    let invalid = |msg: String| Err(GraphError::InvalidFamily(msg));
    match spec {
        FamilySpec::Path(n) => {
            if n < 1 {
                return invalid("a path needs at least 1 vertex".into());
            }
            let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
            Graph::from_edges(n, &edges)
        }
        FamilySpec::Cycle(k) => {
            if k < 3 {
                return invalid(format!("a cycle needs at least 3 vertices, got {k}"));
            }
            let edges: Vec<_> = (0..k).map(|v| (v, (v + 1) % k)).collect();
            Graph::from_edges(k, &edges)
        }
        FamilySpec::Complete(n) => {
            if n < 1 {
                return invalid("a complete graph needs at least 1 vertex".into());
            }
            Ok(Graph::new(n)?.complement())
        }
        FamilySpec::Star(k) => {
            if k < 1 {
                return invalid("a star needs at least 1 leaf".into());
            }
            let edges: Vec<_> = (1..=k).map(|v| (0, v)).collect();
            Graph::from_edges(k + 1, &edges)
        }
        FamilySpec::Spider(b, c, d) => {
            if b < 1 || c < 1 || d < 1 {
                return invalid(format!("spider legs must be at least 1, got ({b},{c},{d})"));
            }
            let mut g = Graph::new(b + c + d + 1)?;
            let mut next = 1;
            for leg in [b, c, d] {
                let mut prev = 0;
                for _ in 0..leg {
                    g.add_edge(prev, next)?;
                    prev = next;
                    next += 1;
                }
            }
            Ok(g)
        }
        FamilySpec::TrianglePendant => Graph::from_edges(4, &[(0, 1), (1, 2), (0, 2), (0, 3)]),
        FamilySpec::Empty(n) => Graph::new(n),
    }
}
