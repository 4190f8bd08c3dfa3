//! Independent reference computations checked against the fast kernels.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use cospec::candidates::enumerate_graphs;
use cospec::graph::{canonical_form, CanonicalCode, Graph};
use cospec::linalg::{
    char_poly, count_roots_leq, determinant, integer_eigen_multiplicity, multiplicity_profile,
    numeric_spectrum, shifted_adjacency,
};

fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut g = Graph::new(n).unwrap();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

/// Classes of graphs with `m` edges and no isolated vertices, from every
/// labelled edge set on `v <= 2m` vertices that covers all vertices.
fn labelled_classes(m: usize) -> BTreeSet<CanonicalCode> {
    let mut out = BTreeSet::new();
    for v in 2..=2 * m {
        let pairs: Vec<(usize, usize)> = (0..v)
            .flat_map(|a| (a + 1..v).map(move |b| (a, b)))
            .collect();
        let full = (1u64 << v) - 1;
        let mut chosen = Vec::new();
        choose(&pairs, 0, m, 0, full, &mut chosen, &mut |edges| {
            let g = Graph::from_edges(v, edges).unwrap();
            out.insert(canonical_form(&g).unwrap());
        });
    }
    out
}

fn choose(
    pairs: &[(usize, usize)],
    start: usize,
    left: usize,
    covered: u64,
    full: u64,
    chosen: &mut Vec<(usize, usize)>,
    emit: &mut dyn FnMut(&[(usize, usize)]),
) {
    let uncovered = (full & !covered).count_ones() as usize;
    if uncovered > 2 * left {
        return;
    }
    if left == 0 {
        emit(chosen);
        return;
    }
    for i in start..pairs.len() {
        if pairs.len() - i < left {
            break;
        }
        let (a, b) = pairs[i];
        // the lowest uncovered vertex can only be covered by a pair from here
        let low = (full & !covered).trailing_zeros() as usize;
        if uncovered > 0 && a > low {
            break;
        }
        chosen.push((a, b));
        choose(
            pairs,
            i + 1,
            left - 1,
            covered | 1 << a | 1 << b,
            full,
            chosen,
            emit,
        );
        chosen.pop();
    }
}

#[test]
fn enumeration_matches_labelled_oracle() {
    for m in 1..=5 {
        let fast: BTreeSet<CanonicalCode> = enumerate_graphs(m)
            .unwrap()
            .iter()
            .map(|g| canonical_form(g).unwrap())
            .collect();
        assert_eq!(fast, labelled_classes(m), "m = {m}");
    }
}

#[test]
fn char_poly_values_match_determinants() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..100 {
        let n = rng.gen_range(1..=10);
        let p = rng.gen_range(0.1..0.9);
        let g = random_graph(&mut rng, n, p);
        let cp = char_poly(&g);
        for x in [-3i64, -1, 0, 2] {
            // det(A - xI) = (-1)^n det(xI - A)
            let det = determinant(shifted_adjacency(&g, &BigInt::from(x)));
            let sign = if n % 2 == 0 { 1 } else { -1 };
            assert_eq!(det * sign, cp.poly().eval(&BigInt::from(x)), "{g:?} at {x}");
        }
    }
}

#[test]
fn ranks_match_multiplicity_profiles() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..100 {
        let n = rng.gen_range(1..=12);
        let p = rng.gen_range(0.1..0.9);
        let g = random_graph(&mut rng, n, p);
        let prof = multiplicity_profile(&char_poly(&g)).unwrap();
        for c in [-1i64, 0] {
            assert_eq!(
                integer_eigen_multiplicity(&g, c),
                prof.multiplicity_of(c),
                "{g:?}"
            );
        }
    }
}

#[test]
fn exact_root_counts_match_numeric_spectra() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..200 {
        let n = rng.gen_range(2..=12);
        let p = rng.gen_range(0.1..0.9);
        let g = random_graph(&mut rng, n, p);
        let spec = numeric_spectrum(&g, 1e-12).unwrap();
        let cp = char_poly(&g);
        // probe midway between numerically distinct eigenvalues
        for w in spec.windows(2).filter(|w| w[1] - w[0] > 1e-6) {
            let mid = (w[0] + w[1]) / 2.0;
            let q = BigRational::from_float(mid).unwrap();
            let below = spec.iter().filter(|&&l| l < mid).count();
            assert_eq!(
                count_roots_leq(cp.poly(), &q).unwrap().with_multiplicity,
                below
            );
        }
        let top = BigRational::from_float(spec[n - 1] + 1.0).unwrap();
        assert_eq!(
            count_roots_leq(cp.poly(), &top).unwrap().with_multiplicity,
            n
        );
    }
}
