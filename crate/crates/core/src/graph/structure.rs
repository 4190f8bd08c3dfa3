//! Degree data, triangle counts and component classification.

use serde::Serialize;

use super::{bits, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum ComponentKind {
    Path,
    Cycle,
    Other,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Component {
    pub kind: ComponentKind,
    pub order: usize,
    pub edges: usize,
}

/// Structural exclusion flags for a candidate graph.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct StructuralFlags {
    /// Some component is a cycle other than `C_3` or `C_4`.
    pub bad_cycle_component: bool,
    /// Two vertex-disjoint induced cycles with no edge between them.
    pub disjoint_induced_cycles: bool,
    /// Two path components of equal order other than `P_1` and `P_3`.
    pub repeated_paths: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BasicCensus {
    /// Sorted ascending.
    pub degrees: Vec<usize>,
    pub triangles: u64,
    /// Sorted by (kind, order, edges).
    pub components: Vec<Component>,
    pub flags: StructuralFlags,
}

pub fn basic_census(g: &Graph) -> BasicCensus {
    let mut degrees = g.degrees();
    degrees.sort_unstable();

    let mut components: Vec<Component> = g
        .components()
        .into_iter()
        .map(|mask| classify(g, mask))
        .collect();
    components.sort();

    let bad_cycle_component = components
        .iter()
        .any(|c| c.kind == ComponentKind::Cycle && c.order > 4);
    let mut path_orders: Vec<usize> = components
        .iter()
        .filter(|c| c.kind == ComponentKind::Path && c.order >= 2 && c.order != 3)
        .map(|c| c.order)
        .collect();
    path_orders.sort_unstable();
    let repeated_paths = path_orders.windows(2).any(|w| w[0] == w[1]);

    BasicCensus {
        degrees,
        triangles: g.triangle_count(),
        components,
        flags: StructuralFlags {
            bad_cycle_component,
            disjoint_induced_cycles: has_disjoint_induced_cycles(g),
            repeated_paths,
        },
    }
}

fn classify(g: &Graph, mask: u64) -> Component {
    let order = mask.count_ones() as usize;
    let degs: Vec<usize> = bits(mask).map(|v| g.degree(v)).collect();
    let edges = degs.iter().sum::<usize>() / 2;
    let max_deg = degs.iter().copied().max().unwrap_or(0);
    let kind = if max_deg <= 2 && edges + 1 == order {
        ComponentKind::Path
    } else if order >= 3 && degs.iter().all(|&d| d == 2) {
        ComponentKind::Cycle
    } else {
        ComponentKind::Other
    };
    Component { kind, order, edges }
}

/// Vertex masks of all chordless cycles of `g`.
pub(crate) fn induced_cycles(g: &Graph) -> Vec<u64> {
    let mut found = Vec::new();
    for s in 0..g.order() {
        let above = !super::low_mask(s + 1);
        let mut path = vec![s];
        extend_chordless(g, s, above, &mut path, &mut found);
    }
    found
}

fn extend_chordless(g: &Graph, s: usize, above: u64, path: &mut Vec<usize>, found: &mut Vec<u64>) {
    let last = *path.last().expect("path is never empty");
    let on_path = path.iter().fold(0u64, |acc, &v| acc | 1 << v);
    // interior vertices must not see the next vertex
    let interior = path[1..]
        .iter()
        .take(path.len().saturating_sub(2))
        .fold(0u64, |acc, &v| acc | 1 << v);
    for w in bits(g.neighbors(last) & above & !on_path) {
        if g.neighbors(w) & interior != 0 {
            continue;
        }
        if path.len() >= 2 && g.has_edge(w, s) {
            // closes a chordless cycle; count each once via orientation
            if path[1] < w {
                found.push(on_path | 1 << w);
            }
        } else {
            path.push(w);
            extend_chordless(g, s, above, path, found);
            path.pop();
        }
    }
}

fn has_disjoint_induced_cycles(g: &Graph) -> bool {
    let cycles = induced_cycles(g);
    for (i, &a) in cycles.iter().enumerate() {
        let reach = bits(a).fold(a, |acc, v| acc | g.neighbors(v));
        if cycles[i + 1..].iter().any(|&b| b & reach == 0) {
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_family, FamilySpec};

    fn fam(spec: FamilySpec) -> Graph {
        make_family(spec).unwrap()
    }

    #[test]
    fn path_seven() {
        let c = basic_census(&fam(FamilySpec::Path(7)));
        assert_eq!(c.degrees, vec![1, 1, 2, 2, 2, 2, 2]);
        assert_eq!(c.triangles, 0);
        assert_eq!(
            c.components,
            vec![Component {
                kind: ComponentKind::Path,
                order: 7,
                edges: 6
            }]
        );
        assert_eq!(c.flags, StructuralFlags::default());
    }

    #[test]
    fn two_triangles() {
        let c3 = fam(FamilySpec::Cycle(3));
        let c = basic_census(&c3.disjoint_union(&c3).unwrap());
        assert!(c.flags.disjoint_induced_cycles);
        assert!(!c.flags.bad_cycle_component);
        assert_eq!(c.triangles, 2);
    }

    #[test]
    fn repeated_paths() {
        let p4 = fam(FamilySpec::Path(4));
        assert!(
            basic_census(&p4.disjoint_union(&p4).unwrap())
                .flags
                .repeated_paths
        );
        let p3 = fam(FamilySpec::Path(3));
        assert!(
            !basic_census(&p3.disjoint_union(&p3).unwrap())
                .flags
                .repeated_paths
        );
    }

    #[test]
    fn long_cycle_component() {
        let g = fam(FamilySpec::Cycle(5))
            .disjoint_union(&fam(FamilySpec::Path(2)))
            .unwrap();
        let c = basic_census(&g);
        assert!(c.flags.bad_cycle_component);
        assert!(!c.flags.disjoint_induced_cycles);
        let ok = fam(FamilySpec::Cycle(4))
            .disjoint_union(&fam(FamilySpec::Path(3)))
            .unwrap();
        assert!(!basic_census(&ok).flags.bad_cycle_component);
    }

    #[test]
    fn chordless_cycles() {
        assert_eq!(induced_cycles(&fam(FamilySpec::Complete(5))).len(), 10);
        assert_eq!(induced_cycles(&fam(FamilySpec::Cycle(6))).len(), 1);
        // triangles joined by an edge are not "disjoint" in the induced sense
        let bowtie_edge =
            Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)])
                .unwrap();
        assert_eq!(induced_cycles(&bowtie_edge).len(), 2);
        assert!(!basic_census(&bowtie_edge).flags.disjoint_induced_cycles);
    }
}
