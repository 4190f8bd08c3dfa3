//! Degree/triangle parameter combinations, isomorph-free enumeration of
//! small edge sets, and the candidate tables.

mod combos;
mod enumerate;
mod spider;
mod tables;

pub use combos::{degree_bound, max_triangles, solve_combos, vector_length, ParamCombo};
pub use enumerate::{enumerate_graphs, MAX_ENUM_EDGES};
pub use spider::{spider_table_rows, spider_union_census, SpiderRow, SymEntry, SPIDER_COLUMNS};
pub use tables::{
    figure_certificates, printed_combos, reproduce_table, table_rows, EntryReport, EntryStatus,
    FigureCertificate, Part, PrintedComboCheck, RowReport, TableEntry, TableReport, TableRow,
};

use serde::Serialize;
use thiserror::Error;

use crate::graph::{canonical_form, graph6_encode, make_family, FamilySpec, Graph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CandidateError {
    #[error("edge count {requested} exceeds the supported maximum of {max}")]
    TooManyEdges { requested: usize, max: usize },
    #[error("parameters do not satisfy the degree/triangle equations: {0}")]
    NotASolution(String),
    #[error("no table {0}; tables 2, 3 and 4 list candidate graphs")]
    UnknownTable(u8),
}

/// Candidate graphs realizing one parameter combination.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CandidateSet {
    pub combo: ParamCombo,
    /// Canonical representatives in canonical order, without `P_ℓ`.
    pub graphs: Vec<Graph>,
}

#[derive(Serialize)]
struct Sidecar<'a> {
    ell: usize,
    t_prime: usize,
    x: &'a [usize],
    graphs: usize,
}

impl CandidateSet {
    pub fn is_graphic(&self) -> bool {
        !self.graphs.is_empty()
    }

    /// One graph6 string per line.
    pub fn graph6_lines(&self) -> String {
        self.graphs
            .iter()
            .map(|g| graph6_encode(g) + "\n")
            .collect()
    }

    /// JSON description of the combination accompanying
    /// [`graph6_lines`](Self::graph6_lines).
    pub fn sidecar_json(&self) -> String {
        serde_json::to_string(&Sidecar {
            ell: self.combo.ell,
            t_prime: self.combo.t_prime,
            x: &self.combo.x,
            graphs: self.graphs.len(),
        })
        .expect("plain data serializes")
    }
}

/// All graphs with `ℓ - 1` edges, no isolated vertices, the combination's
/// degree multiplicities and triangle count, excluding `P_ℓ` itself.
pub fn realize_combo(combo: &ParamCombo) -> Result<CandidateSet, CandidateError> {
    if !combo.satisfies_equations() {
        return Err(CandidateError::NotASolution(combo.to_string()));
    }
    let path = canonical_form(&make_family(FamilySpec::Path(combo.ell)).expect("ell >= 1"))
        .expect("small");
    let graphs = enumerate_graphs(combo.ell - 1)?
        .into_iter()
        .filter(|g| combo.matches(g))
        .filter(|g| canonical_form(g).expect("small") != path)
        .collect();
    Ok(CandidateSet {
        combo: combo.clone(),
        graphs,
    })
}

/// Realizations of every combination for `ell`, in combination order.
pub fn realize_all(ell: usize) -> Result<Vec<CandidateSet>, CandidateError> {
    let all = enumerate_graphs(ell - 1)?;
    let path =
        canonical_form(&make_family(FamilySpec::Path(ell)).expect("ell >= 1")).expect("small");
    Ok(solve_combos(ell)
        .into_iter()
        .map(|combo| {
            let graphs = all
                .iter()
                .filter(|g| combo.matches(g))
                .filter(|g| canonical_form(g).expect("small") != path)
                .cloned()
                .collect();
            CandidateSet { combo, graphs }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::graph6_decode;

    fn union(parts: &[FamilySpec]) -> Graph {
        parts
            .iter()
            .map(|&s| make_family(s).unwrap())
            .reduce(|a, b| a.disjoint_union(&b).unwrap())
            .unwrap()
    }

    fn codes(graphs: &[Graph]) -> Vec<crate::graph::CanonicalCode> {
        let mut v: Vec<_> = graphs.iter().map(|g| canonical_form(g).unwrap()).collect();
        v.sort();
        v
    }

    #[test]
    fn cycles_with_a_path() {
        let combo = ParamCombo::new(7, 0, vec![2, 5, 0, 0, 0]);
        let set = realize_combo(&combo).unwrap();
        let want = [
            union(&[FamilySpec::Cycle(5), FamilySpec::Path(2)]),
            union(&[FamilySpec::Cycle(4), FamilySpec::Path(3)]),
        ];
        assert_eq!(codes(&set.graphs), codes(&want));
    }

    #[test]
    fn two_regular_with_one_triangle_is_not_graphic() {
        let set = realize_combo(&ParamCombo::new(7, 1, vec![0, 6, 0, 0, 0])).unwrap();
        assert!(!set.is_graphic());
    }

    #[test]
    fn triangle_combo_has_three_graphs() {
        let set = realize_combo(&ParamCombo::new(7, 1, vec![3, 3, 1, 0, 0])).unwrap();
        assert_eq!(set.graphs.len(), 3);
        // triangle with a two-edge tail, plus a separate edge
        let tail = Graph::from_edges(7, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (5, 6)]).unwrap();
        assert!(codes(&set.graphs).contains(&canonical_form(&tail).unwrap()));
    }

    #[test]
    fn rejects_non_solutions() {
        assert!(realize_combo(&ParamCombo::new(7, 0, vec![1, 1, 0, 0, 0])).is_err());
    }

    #[test]
    fn export_round_trips() {
        let set = realize_combo(&ParamCombo::new(8, 0, vec![2, 6, 0, 0, 0])).unwrap();
        let lines = set.graph6_lines();
        let back: Vec<Graph> = lines
            .lines()
            .map(|l| graph6_decode(l.as_bytes()).unwrap())
            .collect();
        assert_eq!(back, set.graphs);
        let v: serde_json::Value = serde_json::from_str(&set.sidecar_json()).unwrap();
        assert_eq!(v["ell"], 8);
        assert_eq!(v["graphs"], 3);
    }
}
