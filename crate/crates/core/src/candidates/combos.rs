//! Solutions of the degree/triangle equations
//! `sum i x_i = 2ℓ - 2` and `sum i^2 x_i = 4ℓ - 6 + 2t'`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::graph::Graph;

/// Degree multiplicities `x_1, x_2, ...` and triangle count `t'` of a
/// graph with `ℓ - 1` edges and no isolated vertices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ParamCombo {
    pub ell: usize,
    pub t_prime: usize,
    /// `x[i - 1]` vertices of degree `i`.
    pub x: Vec<usize>,
}

impl ParamCombo {
    pub fn new(ell: usize, t_prime: usize, x: Vec<usize>) -> Self {
        ParamCombo { ell, t_prime, x }
    }

    pub fn degree_sum(&self) -> usize {
        self.x.iter().enumerate().map(|(i, &c)| (i + 1) * c).sum()
    }

    pub fn degree_square_sum(&self) -> usize {
        self.x
            .iter()
            .enumerate()
            .map(|(i, &c)| (i + 1) * (i + 1) * c)
            .sum()
    }

    pub fn satisfies_equations(&self) -> bool {
        self.ell >= 2
            && self.degree_sum() == 2 * self.ell - 2
            && self.degree_square_sum() == 4 * self.ell - 6 + 2 * self.t_prime
    }

    /// Degree multiplicities of `g` padded or compared against `x`.
    pub fn matches(&self, g: &Graph) -> bool {
        if g.isolated_count() > 0 || g.triangle_count() != self.t_prime as u64 {
            return false;
        }
        let mut counts = vec![0usize; self.x.len()];
        for d in g.degrees() {
            match counts.get_mut(d - 1) {
                Some(c) => *c += 1,
                None => return false,
            }
        }
        counts == self.x
    }

    /// `{t', x_1, ..., x_k}`.
    pub fn braces(&self) -> String {
        let mut parts = vec![self.t_prime.to_string()];
        parts.extend(self.x.iter().map(ToString::to_string));
        format!("{{{}}}", parts.join(","))
    }
}

impl fmt::Display for ParamCombo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.braces())
    }
}

/// Maximum number of triangles in a graph with `m` edges: writing
/// `m = C(a,2) + b` with `0 <= b < a` gives `C(a,3) + C(b,2)`.
pub fn max_triangles(m: usize) -> usize {
    let mut a = 0;
    while (a + 1) * a / 2 <= m {
        a += 1;
    }
    let b = m - a * (a - 1) / 2;
    a * (a - 1) * (a.saturating_sub(2)) / 6 + b * b.saturating_sub(1) / 2
}

/// Largest possible degree: `ℓ - 1` (one vertex on every edge).
pub fn degree_bound(ell: usize) -> usize {
    ell - 1
}

/// Length of the multiplicity vector: the largest `i <= ℓ - 1` with
/// `i^2 <= 4ℓ - 6 + 2 t'_max`, since one vertex of degree `i` already
/// contributes `i^2` to the square sum.
pub fn vector_length(ell: usize) -> usize {
    let cap = 4 * ell - 6 + 2 * max_triangles(ell - 1);
    let mut k = 0;
    while (k + 1) * (k + 1) <= cap && k < degree_bound(ell) {
        k += 1;
    }
    k
}

/// All nonnegative solutions for `ell`, ordered by `(t', x_1, x_2, ...)`.
pub fn solve_combos(ell: usize) -> Vec<ParamCombo> {
    assert!(ell >= 2, "ell must be at least 2");
    let k = vector_length(ell);
    let mut out = Vec::new();
    for t in 0..=max_triangles(ell - 1) {
        let sum = 2 * ell - 2;
        let sq = 4 * ell - 6 + 2 * t;
        let mut x = vec![0; k];
        search(k, 0, sum, sq, &mut x, &mut |x| {
            out.push(ParamCombo::new(ell, t, x.to_vec()))
        });
    }
    out.sort();
    out
}

/// Fills `x[i..]` so that the remaining degree and square sums are met.
fn search(
    k: usize,
    i: usize,
    sum: usize,
    sq: usize,
    x: &mut Vec<usize>,
    f: &mut impl FnMut(&[usize]),
) {
    if i == k {
        if sum == 0 && sq == 0 {
            f(x);
        }
        return;
    }
    let d = i + 1;
    let mut c = 0;
    while c * d <= sum && c * d * d <= sq {
        x[i] = c;
        search(k, i + 1, sum - c * d, sq - c * d * d, x, f);
        c += 1;
    }
    x[i] = 0;
}
