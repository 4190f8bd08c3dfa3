//! The ten small patterns and their subgraph counts.

use serde::{Deserialize, Serialize};

use crate::graph::{bits, canonical_form, make_family, FamilySpec, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Pattern {
    Edge,
    P3,
    TwoK2,
    P4,
    C4,
    K3,
    P3K2,
    K13,
    P5,
    TrianglePendant,
    C5,
}

impl Pattern {
    pub const ALL: [Pattern; 11] = [
        Pattern::Edge,
        Pattern::P3,
        Pattern::TwoK2,
        Pattern::P4,
        Pattern::C4,
        Pattern::K3,
        Pattern::P3K2,
        Pattern::K13,
        Pattern::P5,
        Pattern::TrianglePendant,
        Pattern::C5,
    ];

    pub fn graph(self) -> Graph {
        let f = |s| make_family(s).expect("valid pattern family");
        let k2 = || f(FamilySpec::Path(2));
        match self {
            Pattern::Edge => k2(),
            Pattern::P3 => f(FamilySpec::Path(3)),
            Pattern::TwoK2 => k2().disjoint_union(&k2()).expect("small"),
            Pattern::P4 => f(FamilySpec::Path(4)),
            Pattern::C4 => f(FamilySpec::Cycle(4)),
            Pattern::K3 => f(FamilySpec::Complete(3)),
            Pattern::P3K2 => f(FamilySpec::Path(3)).disjoint_union(&k2()).expect("small"),
            Pattern::K13 => f(FamilySpec::Star(3)),
            Pattern::P5 => f(FamilySpec::Path(5)),
            Pattern::TrianglePendant => f(FamilySpec::TrianglePendant),
            Pattern::C5 => f(FamilySpec::Cycle(5)),
        }
    }

    pub fn edge_count(self) -> usize {
        self.graph().edge_count()
    }
}

fn choose2(d: u64) -> u64 {
    d * d.saturating_sub(1) / 2
}

fn choose3(d: u64) -> u64 {
    d * d.saturating_sub(1) * d.saturating_sub(2) / 6
}

fn deg(g: &Graph, v: usize) -> u64 {
    g.degree(v) as u64
}

fn pop(mask: u64) -> u64 {
    u64::from(mask.count_ones())
}

/// Number of edge subsets of `g` forming a copy of `pattern`.
///
/// Uses degree and common-neighbour counting; agrees with
/// [`count_pattern_exhaustive`].
pub fn count_pattern(g: &Graph, pattern: Pattern) -> u64 {
    let n = g.order();
    let m = g.edge_count() as u64;
    let p3 = || (0..n).map(|v| choose2(deg(g, v))).sum::<u64>();
    match pattern {
        Pattern::Edge => m,
        Pattern::P3 => p3(),
        Pattern::TwoK2 => choose2(m) - p3(),
        Pattern::K3 => g.triangle_count(),
        Pattern::K13 => (0..n).map(|v| choose3(deg(g, v))).sum(),
        Pattern::P4 => {
            let walks: u64 = g
                .edges()
                .iter()
                .map(|&(u, v)| (deg(g, u) - 1) * (deg(g, v) - 1))
                .sum();
            walks - 3 * g.triangle_count()
        }
        Pattern::C4 => {
            let mut twice = 0;
            for u in 0..n {
                for w in u + 1..n {
                    twice += choose2(pop(g.neighbors(u) & g.neighbors(w)));
                }
            }
            twice / 2
        }
        Pattern::P3K2 => {
            let mut total = 0;
            for v in 0..n {
                let nv = g.neighbors(v);
                for a in bits(nv) {
                    for b in bits(nv & !((2u64 << a) - 1)) {
                        let ab = u64::from(g.has_edge(a, b));
                        total += m + 2 + ab - deg(g, a) - deg(g, v) - deg(g, b);
                    }
                }
            }
            total
        }
        Pattern::P5 => {
            let mut total = 0;
            for v in 0..n {
                let nv = g.neighbors(v);
                for a in bits(nv) {
                    for b in bits(nv & !((2u64 << a) - 1)) {
                        let va = g.neighbors(a) & !(1 << v) & !(1 << b);
                        let vb = g.neighbors(b) & !(1 << v) & !(1 << a);
                        let common = g.neighbors(a) & g.neighbors(b) & !(1 << v);
                        total += pop(va) * pop(vb) - pop(common);
                    }
                }
            }
            total
        }
        Pattern::TrianglePendant => {
            let mut total = 0;
            for v in 0..n {
                let nv = g.neighbors(v);
                let twice_tri: u64 = bits(nv).map(|u| pop(g.neighbors(u) & nv)).sum();
                total += twice_tri / 2 * deg(g, v).saturating_sub(2);
            }
            total
        }
        Pattern::C5 => {
            let mut twice = 0;
            for s in 0..n {
                let above = !((2u64 << s) - 1);
                let ns = g.neighbors(s) & above;
                for a in bits(ns) {
                    for b in bits(g.neighbors(a) & above & !(1 << s)) {
                        for c in bits(g.neighbors(b) & above & !(1 << a)) {
                            let ds = g.neighbors(c) & ns & !(1 << a) & !(1 << b);
                            twice += pop(ds);
                        }
                    }
                }
            }
            twice / 2
        }
    }
}

/// Reference count by enumerating every edge subset of the pattern's size
/// and comparing the subgraph it spans with the pattern up to isomorphism.
pub fn count_pattern_exhaustive(g: &Graph, pattern: Pattern) -> u64 {
    let target = pattern.graph();
    let target_order = target.order();
    let mut target_degrees = target.degrees();
    target_degrees.sort_unstable();
    let target_code = canonical_form(&target).expect("pattern is small");
    let edges = g.edges();
    let k = target.edge_count();
    let mut count = 0;
    let mut chosen: Vec<usize> = Vec::with_capacity(k);
    visit_subsets(edges.len(), k, 0, &mut chosen, &mut |subset| {
        let mut support = 0u64;
        for &i in subset {
            support |= (1 << edges[i].0) | (1 << edges[i].1);
        }
        if support.count_ones() as usize != target_order {
            return;
        }
        let index: Vec<usize> = (0..g.order())
            .map(|v| (support & ((1u64 << v) - 1)).count_ones() as usize)
            .collect();
        let pairs: Vec<(usize, usize)> = subset
            .iter()
            .map(|&i| (index[edges[i].0], index[edges[i].1]))
            .collect();
        let sub = Graph::from_edges(target_order, &pairs).expect("valid subgraph");
        let mut d = sub.degrees();
        d.sort_unstable();
        if d != target_degrees {
            return;
        }
        if canonical_form(&sub).expect("small") == target_code {
            count += 1;
        }
    });
    count
}

fn visit_subsets(
    n: usize,
    k: usize,
    start: usize,
    chosen: &mut Vec<usize>,
    f: &mut impl FnMut(&[usize]),
) {
    if chosen.len() == k {
        f(chosen);
        return;
    }
    let need = k - chosen.len();
    if start + need > n {
        return;
    }
    for i in start..=n - need {
        chosen.push(i);
        visit_subsets(n, k, i + 1, chosen, f);
        chosen.pop();
    }
}
