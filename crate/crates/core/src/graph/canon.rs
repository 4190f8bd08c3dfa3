//! Canonical labelling by refinement and individualisation.
//!
//! Components are canonised independently and reassembled in sorted
//! order. Inside a component the ordered partition is refined to an
//! equitable one, then the first smallest non-singleton cell is
//! individualised vertex by vertex. Vertices with identical open
//! neighbourhoods (twins) are interchangeable, so only one
//! representative of each twin class is branched on.

use std::cmp::Ordering;

use serde::{Serialize, Serializer};

use super::{Graph, GraphError};

/// Largest order accepted by [`canonical_form`].
pub const MAX_CANONICAL_ORDER: usize = 20;

/// Adjacency rows of the canonically relabelled graph.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CanonicalCode {
    graph: Graph,
}

impl CanonicalCode {
    pub fn order(&self) -> usize {
        self.graph.order()
    }

    /// The canonical representative.
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }
}

impl Ord for CanonicalCode {
    fn cmp(&self, other: &Self) -> Ordering {
        self.graph
            .order()
            .cmp(&other.graph.order())
            .then_with(|| self.graph.rows().cmp(other.graph.rows()))
    }
}

impl PartialOrd for CanonicalCode {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Serialize for CanonicalCode {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&super::graph6_encode(&self.graph))
    }
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalCode, GraphError> {
    if g.order() > MAX_CANONICAL_ORDER {
        return Err(GraphError::OrderTooLarge {
            order: g.order(),
            max: MAX_CANONICAL_ORDER,
        });
    }
    let mut parts: Vec<Graph> = g
        .components()
        .into_iter()
        .map(|mask| canonical_connected(&g.induced_subgraph(mask)))
        .collect();
    parts.sort_by(|a, b| {
        a.order()
            .cmp(&b.order())
            .then_with(|| a.rows().cmp(b.rows()))
    });
    let mut graph = Graph::new(0)?;
    for part in &parts {
        graph = graph.disjoint_union(part)?;
    }
    Ok(CanonicalCode { graph })
}

fn canonical_connected(g: &Graph) -> Graph {
    let n = g.order();
    if n <= 1 {
        return g.clone();
    }
    let twin_class = twin_classes(g);
    let mut search = Search {
        g,
        twin_class,
        best: None,
    };
    let partition = refine(g, vec![(0..n).collect()]);
    search.descend(partition);
    search.best.expect("search visits at least one leaf").1
}

struct Search<'a> {
    g: &'a Graph,
    twin_class: Vec<usize>,
    best: Option<(Vec<u64>, Graph)>,
}

impl Search<'_> {
    fn descend(&mut self, partition: Vec<Vec<usize>>) {
        let target = partition
            .iter()
            .enumerate()
            .filter(|(_, c)| c.len() > 1)
            .min_by_key(|(i, c)| (c.len(), *i))
            .map(|(i, _)| i);
        let Some(ci) = target else {
            self.leaf(&partition);
            return;
        };
        let mut tried_classes: Vec<usize> = Vec::new();
        for &v in &partition[ci] {
            let class = self.twin_class[v];
            if tried_classes.contains(&class) {
                continue;
            }
            tried_classes.push(class);
            let mut next = Vec::with_capacity(partition.len() + 1);
            next.extend_from_slice(&partition[..ci]);
            next.push(vec![v]);
            next.push(partition[ci].iter().copied().filter(|&u| u != v).collect());
            next.extend_from_slice(&partition[ci + 1..]);
            self.descend(refine(self.g, next));
        }
    }

    fn leaf(&mut self, partition: &[Vec<usize>]) {
        let mut perm = vec![0usize; self.g.order()];
        for (pos, cell) in partition.iter().enumerate() {
            perm[cell[0]] = pos;
        }
        let relabelled = self.g.permute(&perm);
        let key = relabelled.rows().to_vec();
        let better = match &self.best {
            None => true,
            Some((k, _)) => key > *k,
        };
        if better {
            self.best = Some((key, relabelled));
        }
    }
}

/// Refines an ordered partition until it is equitable. Cells split by
/// neighbour count into the splitting cell, pieces ordered by that count.
fn refine(g: &Graph, mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    let mut s = 0;
    while s < cells.len() {
        let splitter = cells[s].iter().fold(0u64, |acc, &v| acc | 1 << v);
        let mut next = Vec::with_capacity(cells.len());
        let mut split = false;
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(u32, usize)> = cell
                .iter()
                .map(|&v| ((g.neighbors(v) & splitter).count_ones(), v))
                .collect();
            keyed.sort_by_key(|&(k, _)| k);
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|&(_, v)| v).collect());
                    start = i;
                }
            }
            split |= keyed[0].0 != keyed[keyed.len() - 1].0;
        }
        if split {
            cells = next;
            // earlier splitters must be re-applied to the new cells
            s = 0;
        } else {
            s += 1;
        }
    }
    cells
}

/// Class id per vertex; equal ids mean equal neighbourhoods up to each other.
fn twin_classes(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut class = vec![usize::MAX; n];
    let mut next = 0;
    for v in 0..n {
        if class[v] != usize::MAX {
            continue;
        }
        class[v] = next;
        for u in v + 1..n {
            if class[u] == usize::MAX && g.neighbors(u) & !(1 << v) == g.neighbors(v) & !(1 << u) {
                class[u] = next;
            }
        }
        next += 1;
    }
    class
}
