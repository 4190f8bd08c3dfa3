//! Small simple undirected graphs stored as adjacency bit rows.
//!
//! Every graph in the toolkit has at most [`MAX_ORDER`] vertices, which
//! lets each adjacency row live in a single `u64`.

mod canon;
mod family;
mod graph6;
mod structure;

pub use canon::{canonical_form, CanonicalCode, MAX_CANONICAL_ORDER};
pub use family::{make_family, FamilySpec};
pub use graph6::{graph6_decode, graph6_encode};
pub use structure::{basic_census, BasicCensus, Component, ComponentKind, StructuralFlags};

use std::fmt;

use thiserror::Error;

/// Largest supported vertex count.
pub const MAX_ORDER: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph order {order} exceeds the supported maximum of {max}")]
    OrderTooLarge { order: usize, max: usize },
    #[error("vertex {vertex} out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("invalid family parameter: {0}")]
    InvalidFamily(String),
    #[error("cannot embed a graph of order {order} into K_{n}")]
    EmbedTooSmall { order: usize, n: usize },
    #[error("malformed graph6 input: {0}")]
    Graph6(String),
}

/// A simple undirected graph on vertices `0..order`.
///
/// `rows[v]` has bit `u` set iff `u` and `v` are adjacent. Rows are kept
/// symmetric with a zero diagonal.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    order: usize,
    rows: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `order` vertices.
    pub fn new(order: usize) -> Result<Self, GraphError> {
        if order > MAX_ORDER {
            return Err(GraphError::OrderTooLarge {
                order,
                max: MAX_ORDER,
            });
        }
        Ok(Graph {
            order,
            rows: vec![0; order],
        })
    }

    pub fn from_edges(order: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::new(order)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from raw adjacency rows, enforcing symmetry and the
    /// zero diagonal.
    pub fn from_rows(rows: Vec<u64>) -> Result<Self, GraphError> {
        let order = rows.len();
        if order > MAX_ORDER {
            return Err(GraphError::OrderTooLarge {
                order,
                max: MAX_ORDER,
            });
        }
        let mask = low_mask(order);
        for (v, &row) in rows.iter().enumerate() {
            if row & !mask != 0 {
                return Err(GraphError::VertexOutOfRange {
                    vertex: (row & !mask).trailing_zeros() as usize,
                    order,
                });
            }
            if row >> v & 1 == 1 {
                return Err(GraphError::SelfLoop(v));
            }
            let mut rest = row;
            while rest != 0 {
                let u = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                if rows[u] >> v & 1 == 0 {
                    return Err(GraphError::Graph6(format!(
                        "asymmetric adjacency between {u} and {v}"
                    )));
                }
            }
        }
        Ok(Graph { order, rows })
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        for w in [u, v] {
            if w >= self.order {
                return Err(GraphError::VertexOutOfRange {
                    vertex: w,
                    order: self.order,
                });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        self.rows[u] |= 1 << v;
        self.rows[v] |= 1 << u;
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        if u < self.order && v < self.order {
            self.rows[u] &= !(1 << v);
            self.rows[v] &= !(1 << u);
        }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order && v < self.order && self.rows[u] >> v & 1 == 1
    }

    /// Neighbourhood of `v` as a bit mask.
    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.rows[v]
    }

    #[inline]
    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.order).map(|v| self.degree(v)).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.rows
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.order {
            let mut higher = self.rows[u] & !low_mask(u + 1);
            while higher != 0 {
                let v = higher.trailing_zeros() as usize;
                higher &= higher - 1;
                out.push((u, v));
            }
        }
        out
    }

    pub fn triangle_count(&self) -> u64 {
        let mut count = 0u64;
        for (u, v) in self.edges() {
            let common = self.rows[u] & self.rows[v] & !low_mask(v + 1);
            count += common.count_ones() as u64;
        }
        count
    }

    /// Mask of all vertices.
    #[inline]
    pub fn vertex_mask(&self) -> u64 {
        low_mask(self.order)
    }

    pub fn isolated_count(&self) -> usize {
        self.rows.iter().filter(|&&r| r == 0).count()
    }

    /// Relabels vertices so that old vertex `v` becomes `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.order, "permutation length mismatch");
        let mut rows = vec![0u64; self.order];
        for (u, v) in self.edges() {
            let (a, b) = (perm[u], perm[v]);
            rows[a] |= 1 << b;
            rows[b] |= 1 << a;
        }
        Graph {
            order: self.order,
            rows,
        }
    }

    pub fn complement(&self) -> Graph {
        let full = self.vertex_mask();
        let rows = self
            .rows
            .iter()
            .enumerate()
            .map(|(v, &r)| !r & full & !(1u64 << v))
            .collect();
        Graph {
            order: self.order,
            rows,
        }
    }

    /// Disjoint union with `other`'s vertices placed after `self`'s.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let order = self.order + other.order;
        if order > MAX_ORDER {
            return Err(GraphError::OrderTooLarge {
                order,
                max: MAX_ORDER,
            });
        }
        let shift = self.order;
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().map(|&r| r << shift));
        Ok(Graph { order, rows })
    }

    /// The subgraph induced on the vertices of `mask`, relabelled in
    /// increasing vertex order.
    pub fn induced_subgraph(&self, mask: u64) -> Graph {
        let keep: Vec<usize> = bits(mask & self.vertex_mask()).collect();
        let mut index = [usize::MAX; MAX_ORDER];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let rows = keep
            .iter()
            .map(|&v| bits(self.rows[v] & mask).fold(0u64, |acc, u| acc | 1 << index[u]))
            .collect();
        Graph {
            order: keep.len(),
            rows,
        }
    }

    /// Removes isolated vertices.
    pub fn strip_isolated(&self) -> Graph {
        let mask = self
            .rows
            .iter()
            .enumerate()
            .filter(|(_, &r)| r != 0)
            .fold(0u64, |acc, (v, _)| acc | 1 << v);
        self.induced_subgraph(mask)
    }

    /// Vertex masks of the connected components, ordered by smallest vertex.
    pub fn components(&self) -> Vec<u64> {
        let mut seen = 0u64;
        let mut out = Vec::new();
        for start in 0..self.order {
            if seen >> start & 1 == 1 {
                continue;
            }
            let mut comp = 1u64 << start;
            let mut frontier = comp;
            while frontier != 0 {
                let next = bits(frontier).fold(0u64, |acc, v| acc | self.rows[v]) & !comp;
                comp |= next;
                frontier = next;
            }
            seen |= comp;
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.order <= 1 || self.components().len() == 1
    }
}

/// `K_n` with the edges of `h` removed, `h` occupying vertices `0..order(h)`.
pub fn embed_complete_minus(h: &Graph, n: usize) -> Result<Graph, GraphError> {
    if n < h.order() {
        return Err(GraphError::EmbedTooSmall {
            order: h.order(),
            n,
        });
    }
    let padded = h.disjoint_union(&Graph::new(n - h.order())?)?;
    Ok(padded.complement())
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({}; {:?})", self.order, self.edges())
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&graph6_encode(self))
    }
}

#[inline]
pub(crate) fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterates over the set bit positions of `mask` in increasing order.
pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let b = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(b)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        make_family(FamilySpec::Path(n)).unwrap()
    }

    #[test]
    fn handshake_and_edges() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (3, 4)]).unwrap();
        assert_eq!(g.edge_count(), 4);
        assert_eq!(g.degrees().iter().sum::<usize>(), 2 * g.edge_count());
        assert_eq!(g.triangle_count(), 1);
        assert_eq!(g.edges(), vec![(0, 1), (0, 2), (1, 2), (3, 4)]);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(
            Graph::new(65),
            Err(GraphError::OrderTooLarge { .. })
        ));
        let mut g = Graph::new(3).unwrap();
        assert_eq!(g.add_edge(1, 1), Err(GraphError::SelfLoop(1)));
        assert!(g.add_edge(0, 3).is_err());
        assert!(Graph::from_rows(vec![0b10, 0b00]).is_err());
    }

    #[test]
    fn complement_of_complete_is_empty() {
        let k = make_family(FamilySpec::Complete(6)).unwrap();
        assert_eq!(k.complement(), Graph::new(6).unwrap());
    }

    #[test]
    fn complement_is_involution() {
        let c5 = make_family(FamilySpec::Cycle(5)).unwrap();
        assert_eq!(c5.complement().complement(), c5);
    }

    #[test]
    fn p4_is_self_complementary() {
        let p4 = path(4);
        assert_eq!(
            canonical_form(&p4.complement()).unwrap(),
            canonical_form(&p4).unwrap()
        );
    }

    #[test]
    fn disjoint_union_counts() {
        let c5 = make_family(FamilySpec::Cycle(5)).unwrap();
        let p2 = path(2);
        let u = c5.disjoint_union(&p2).unwrap();
        assert_eq!(u.order(), 7);
        assert_eq!(u.edge_count(), 6);
        assert_eq!(u.components().len(), 2);
        let swapped = p2.disjoint_union(&c5).unwrap();
        assert_eq!(
            canonical_form(&u).unwrap(),
            canonical_form(&swapped).unwrap()
        );
        let with_empty = c5.disjoint_union(&Graph::new(0).unwrap()).unwrap();
        assert_eq!(
            canonical_form(&with_empty).unwrap(),
            canonical_form(&c5).unwrap()
        );
    }

    #[test]
    fn union_overflow() {
        let a = Graph::new(40).unwrap();
        assert!(a.disjoint_union(&a).is_err());
    }

    #[test]
    fn embed_matches_definition() {
        let p7 = path(7);
        assert_eq!(embed_complete_minus(&p7, 7).unwrap(), p7.complement());
        assert_eq!(embed_complete_minus(&p7, 10).unwrap().edge_count(), 39);
        let empty = Graph::new(4).unwrap();
        assert_eq!(
            embed_complete_minus(&empty, 9).unwrap(),
            make_family(FamilySpec::Complete(9)).unwrap()
        );
        assert!(matches!(
            embed_complete_minus(&p7, 6),
            Err(GraphError::EmbedTooSmall { .. })
        ));
    }

    #[test]
    fn strip_and_induce() {
        let g = Graph::from_edges(6, &[(1, 3), (3, 5)]).unwrap();
        let s = g.strip_isolated();
        assert_eq!(s.order(), 3);
        assert_eq!(s.edges(), vec![(0, 1), (1, 2)]);
        assert_eq!(g.isolated_count(), 3);
    }
}
