//! Brute-force cospectral mate search over all graphs of a small order.

use std::collections::BTreeMap;

use rayon::prelude::*;

use super::PipelineError;
use crate::graph::{canonical_form, CanonicalCode, Graph};
use crate::linalg::char_poly;

pub const MAX_EXHAUSTIVE_ORDER: usize = 9;

/// Every graph on `n` vertices that is cospectral with `target` and not
/// isomorphic to it, one per class, in canonical order.
///
/// Cospectral graphs share their edge count `e`, so only graphs with `e`
/// edges are generated. When `e` exceeds half of `C(n, 2)` the search
/// runs over complements with `C(n, 2) - e` edges instead. Graphs are
/// grown one vertex at a time (every graph is a one-vertex extension of
/// any of its vertex-deleted subgraphs), keeping one canonical
/// representative per class at each intermediate order.
pub fn exhaustive_search(n: usize, target: &Graph) -> Result<Vec<Graph>, PipelineError> {
    if n > MAX_EXHAUSTIVE_ORDER {
        return Err(PipelineError::OrderTooLarge {
            n,
            max: MAX_EXHAUSTIVE_ORDER,
        });
    }
    if target.order() != n {
        return Err(PipelineError::Precondition(format!(
            "target has order {}, expected {n}",
            target.order()
        )));
    }
    let pairs = n * n.saturating_sub(1) / 2;
    let e = target.edge_count();
    let complemented = 2 * e > pairs;
    let budget = if complemented { pairs - e } else { e };

    let target_poly = char_poly(target);
    let target_triangles = target.triangle_count();
    let target_code = canonical_form(target)?;

    let mut level: Vec<Graph> = vec![Graph::new(0)?];
    for k in 0..n {
        let last = k + 1 == n;
        let children: Vec<Vec<Graph>> = level
            .par_iter()
            .map(|parent| extensions(parent, budget, last))
            .collect();
        if last {
            let found: Vec<(CanonicalCode, Graph)> = children
                .into_par_iter()
                .flatten()
                .filter_map(|h| {
                    let g = if complemented { h.complement() } else { h };
                    let hit =
                        g.triangle_count() == target_triangles && char_poly(&g) == target_poly;
                    hit.then(|| (canonical_form(&g).expect("small"), g))
                })
                .collect();
            let mut classes: BTreeMap<CanonicalCode, Graph> = BTreeMap::new();
            for (code, g) in found {
                if code != target_code {
                    classes.entry(code).or_insert(g);
                }
            }
            return Ok(classes.into_values().collect());
        }
        let coded: Vec<CanonicalCode> = children
            .into_par_iter()
            .flatten()
            .map(|g| canonical_form(&g).expect("small"))
            .collect();
        let mut unique: Vec<CanonicalCode> = coded;
        unique.sort();
        unique.dedup();
        level = unique.into_iter().map(CanonicalCode::into_graph).collect();
    }
    // n == 0: the only graph is the target itself
    Ok(Vec::new())
}

/// One-vertex extensions of `g` with at most `budget` edges in total, or
/// exactly `budget` when `exact`.
fn extensions(g: &Graph, budget: usize, exact: bool) -> Vec<Graph> {
    let k = g.order();
    let used = g.edge_count();
    let Some(room) = budget.checked_sub(used) else {
        return Vec::new();
    };
    let mut out = Vec::new();
    for mask in 0u64..1 << k {
        let deg = mask.count_ones() as usize;
        if deg > room || (exact && deg != room) {
            continue;
        }
        let mut rows: Vec<u64> = g.rows().to_vec();
        for (u, row) in rows.iter_mut().enumerate() {
            if mask >> u & 1 == 1 {
                *row |= 1 << k;
            }
        }
        rows.push(mask);
        out.push(Graph::from_rows(rows).expect("valid extension"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{embed_complete_minus, make_family, FamilySpec};

    #[test]
    fn star_has_one_mate() {
        let star = make_family(FamilySpec::Star(4)).unwrap();
        let mates = exhaustive_search(5, &star).unwrap();
        assert_eq!(mates.len(), 1);
        let c4k1 = make_family(FamilySpec::Cycle(4))
            .unwrap()
            .disjoint_union(&Graph::new(1).unwrap())
            .unwrap();
        assert_eq!(
            canonical_form(&mates[0]).unwrap(),
            canonical_form(&c4k1).unwrap()
        );
    }

    #[test]
    fn dense_targets_use_complements() {
        // six of ten pairs are edges, so the search runs over complements;
        // the complement of the star is K_4 plus K_1, which is its only
        // class on this spectrum
        let k4k1 = make_family(FamilySpec::Star(4)).unwrap().complement();
        assert!(exhaustive_search(5, &k4k1).unwrap().is_empty());
        let bowtie = make_family(FamilySpec::Cycle(4))
            .unwrap()
            .disjoint_union(&Graph::new(1).unwrap())
            .unwrap()
            .complement();
        for m in exhaustive_search(5, &bowtie).unwrap() {
            assert_eq!(char_poly(&m), char_poly(&bowtie));
        }
    }

    #[test]
    fn complete_minus_short_path_has_no_mate() {
        let p5 = make_family(FamilySpec::Path(5)).unwrap();
        let g = embed_complete_minus(&p5, 7).unwrap();
        assert!(exhaustive_search(7, &g).unwrap().is_empty());
    }

    #[test]
    fn level_sizes_match_known_counts() {
        // 1, 2, 4, 11, 34 graphs on 1..5 vertices with unlimited edges
        let mut level = vec![Graph::new(0).unwrap()];
        let mut sizes = Vec::new();
        for _ in 0..5 {
            let mut codes: Vec<CanonicalCode> = level
                .iter()
                .flat_map(|g| extensions(g, usize::MAX / 2, false))
                .map(|g| canonical_form(&g).unwrap())
                .collect();
            codes.sort();
            codes.dedup();
            sizes.push(codes.len());
            level = codes.into_iter().map(CanonicalCode::into_graph).collect();
        }
        assert_eq!(sizes, vec![1, 2, 4, 11, 34]);
    }

    #[test]
    fn rejects_bad_input() {
        let g = Graph::new(10).unwrap();
        assert!(exhaustive_search(10, &g).is_err());
        assert!(exhaustive_search(4, &Graph::new(3).unwrap()).is_err());
    }
}
