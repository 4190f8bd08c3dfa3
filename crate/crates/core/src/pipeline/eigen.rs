//! Exact and numeric checks of the spectrum of `K_n - P_ℓ`.

use std::f64::consts::PI;

use num_bigint::BigInt;
use serde::Serialize;

use super::PipelineError;
use crate::graph::{embed_complete_minus, make_family, FamilySpec, Graph};
use crate::linalg::{
    char_poly, count_roots_leq, integer_eigen_multiplicity, integer_point, is_squarefree,
    numeric_spectrum, rank, strip_root,
};

/// Tolerance for matching the closed-form eigenvalues.
const VALUE_TOL: f64 = 1e-8;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PathValueCheck {
    pub i: usize,
    /// `-1 + 2 cos(π (i - 1) / (ℓ + 1))`.
    pub value: f64,
    pub nearest: f64,
    pub error: f64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EigenvectorCheck {
    /// Which construction produced the vectors.
    pub pattern: String,
    pub count: usize,
    /// Every vector satisfies `Bx = -x` exactly.
    pub exact: bool,
    /// Rank of the vectors as rows.
    pub rank: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EigenReport {
    pub ell: usize,
    pub n: usize,
    /// `n - rank(B + I)`.
    pub minus_one_multiplicity: usize,
    /// `n - ℓ` for odd `ℓ`, `n - ℓ - 1` for even `ℓ`; may be negative.
    pub expected_minus_one: i64,
    /// Roots `<= -3`, with multiplicity.
    pub roots_at_most_minus_three: usize,
    /// Characteristic polynomial with every `(x + 1)` removed is
    /// square-free.
    pub squarefree_after_minus_one: bool,
    pub path_values: Vec<PathValueCheck>,
    pub eigenvectors: EigenvectorCheck,
    /// One line per failed check; empty when every check passes.
    pub failures: Vec<String>,
}

impl EigenReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks the spectrum of `B = A(K_n - P_ℓ)`:
///
/// * exact: multiplicity of `-1` against the closed form, no root `<= -3`
///   (Sturm), every other root simple, and the explicit `-1`-eigenvectors;
/// * numeric: each `-1 + 2 cos(π (i - 1) / (ℓ + 1))` with `i ≡ ℓ (mod 2)`,
///   `2 <= i <= ℓ`, lies within `1e-8` of a computed eigenvalue.
///
/// The eigenvectors solve `(J - A) x = 0`, i.e. `A x = (1ᵀx) 1`:
/// differences `e_j - e_{ℓ+1}` of vertices outside the path, and for odd
/// `ℓ` the vector alternating `-1, +1, ...` on the odd path positions, which
/// is killed by `A`. It sums to 0 when `ℓ ≡ 3 (mod 4)` and is used on its
/// own; it sums to `-1` when `ℓ ≡ 1 (mod 4)` and is paired with each
/// `e_j` outside the path.
pub fn check_eigen_structure(ell: usize, n: usize) -> Result<EigenReport, PipelineError> {
    if ell < 3 || n < ell {
        return Err(PipelineError::Precondition(format!(
            "need n >= ell >= 3, got ell = {ell}, n = {n}"
        )));
    }
    let path = make_family(FamilySpec::Path(ell))?;
    let g = embed_complete_minus(&path, n)?;
    let mut failures = Vec::new();

    let minus_one_multiplicity = integer_eigen_multiplicity(&g, -1);
    let expected_minus_one = n as i64 - ell as i64 - i64::from(ell.is_multiple_of(2));
    if minus_one_multiplicity as i64 != expected_minus_one {
        failures.push(format!(
            "multiplicity of -1: found {minus_one_multiplicity}, closed form gives {expected_minus_one}"
        ));
    }

    let cp = char_poly(&g);
    let roots_at_most_minus_three =
        count_roots_leq(cp.poly(), &integer_point(-3))?.with_multiplicity;
    if roots_at_most_minus_three != 0 {
        failures.push(format!(
            "smallest eigenvalue: {roots_at_most_minus_three} roots <= -3"
        ));
    }

    let (rest, stripped) = strip_root(cp.poly(), -1);
    debug_assert_eq!(stripped, minus_one_multiplicity);
    let squarefree_after_minus_one = is_squarefree(&rest);
    if !squarefree_after_minus_one {
        failures.push("an eigenvalue other than -1 is repeated".into());
    }

    let spectrum = numeric_spectrum(&g, 1e-12)?;
    let path_values: Vec<PathValueCheck> = (2..=ell)
        .filter(|i| i % 2 == ell % 2)
        .map(|i| {
            let value = -1.0 + 2.0 * (PI * (i - 1) as f64 / (ell + 1) as f64).cos();
            let nearest = spectrum
                .iter()
                .copied()
                .min_by(|a, b| (a - value).abs().total_cmp(&(b - value).abs()))
                .expect("n >= 3");
            PathValueCheck {
                i,
                value,
                nearest,
                error: (nearest - value).abs(),
            }
        })
        .collect();
    for c in path_values.iter().filter(|c| c.error > VALUE_TOL) {
        failures.push(format!(
            "closed-form eigenvalue i = {}: {} is {:e} from the nearest computed eigenvalue",
            c.i, c.value, c.error
        ));
    }

    let (pattern, vectors) = minus_one_vectors(ell, n);
    let exact = vectors.iter().all(|x| is_minus_one_vector(&g, x));
    let vec_rank = rank(
        vectors
            .iter()
            .map(|x| x.iter().map(|&v| BigInt::from(v)).collect())
            .collect(),
    );
    if !exact {
        failures.push(format!(
            "explicit vectors ({pattern}) are not -1-eigenvectors"
        ));
    }
    if vec_rank != vectors.len() {
        failures.push(format!(
            "explicit vectors ({pattern}) are linearly dependent"
        ));
    }

    Ok(EigenReport {
        ell,
        n,
        minus_one_multiplicity,
        expected_minus_one,
        roots_at_most_minus_three,
        squarefree_after_minus_one,
        path_values,
        eigenvectors: EigenvectorCheck {
            pattern,
            count: vectors.len(),
            exact,
            rank: vec_rank,
        },
        failures,
    })
}

/// Explicit `-1`-eigenvectors of `K_n - P_ℓ` with the path on `0..ℓ`.
fn minus_one_vectors(ell: usize, n: usize) -> (String, Vec<Vec<i64>>) {
    let unit = |j: usize| {
        let mut v = vec![0i64; n];
        v[j] = 1;
        v
    };
    let differences = || {
        (ell + 1..n).map(move |j| {
            let mut v = unit(j);
            v[ell] = -1;
            v
        })
    };
    let alternating = || {
        let mut v = vec![0i64; n];
        for (k, pos) in (0..ell).step_by(2).enumerate() {
            v[pos] = if k % 2 == 0 { -1 } else { 1 };
        }
        v
    };
    match ell % 4 {
        0 | 2 => ("outside differences".into(), differences().collect()),
        1 => (
            "alternating path vector plus outside unit".into(),
            (ell..n)
                .map(|j| {
                    let mut v = alternating();
                    v[j] = 1;
                    v
                })
                .collect(),
        ),
        _ => (
            "alternating path vector and outside differences".into(),
            std::iter::once(alternating())
                .chain(differences())
                .collect(),
        ),
    }
}

fn is_minus_one_vector(g: &Graph, x: &[i64]) -> bool {
    (0..g.order()).all(|u| {
        let s: i64 = (0..g.order())
            .filter(|&v| g.has_edge(u, v))
            .map(|v| x[v])
            .sum();
        s == -x[u]
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seven_at_twelve() {
        let r = check_eigen_structure(7, 12).unwrap();
        assert_eq!(r.minus_one_multiplicity, 5);
        assert_eq!(r.roots_at_most_minus_three, 0);
        assert!(r.squarefree_after_minus_one);
        assert_eq!(r.eigenvectors.count, 5);
        assert!(r.passed(), "{:?}", r.failures);
    }

    #[test]
    fn eight_at_twelve() {
        let r = check_eigen_structure(8, 12).unwrap();
        assert_eq!(r.minus_one_multiplicity, 3);
        assert!(r.passed(), "{:?}", r.failures);
    }

    #[test]
    fn nine_at_nine_values() {
        let r = check_eigen_structure(9, 9).unwrap();
        let is: Vec<usize> = r.path_values.iter().map(|c| c.i).collect();
        assert_eq!(is, vec![3, 5, 7, 9]);
        assert!(r.path_values.iter().all(|c| c.error < 1e-8));
        assert!(r.passed(), "{:?}", r.failures);
    }

    #[test]
    fn closed_form_breaks_at_n_equal_ell() {
        // K_7 - P_7 keeps the alternating vector although n - ℓ = 0
        let r = check_eigen_structure(7, 7).unwrap();
        assert_eq!(r.minus_one_multiplicity, 1);
        assert_eq!(r.expected_minus_one, 0);
        assert!(!r.passed());
        assert!(r.eigenvectors.exact);
    }

    #[test]
    fn two_triangles_force_minus_three() {
        // the complement of C_3 ∪ C_3 is K_{3,3}, with eigenvalue -3
        let c3 = make_family(FamilySpec::Cycle(3)).unwrap();
        let g = c3.disjoint_union(&c3).unwrap().complement();
        let cp = char_poly(&g);
        assert!(
            count_roots_leq(cp.poly(), &integer_point(-3))
                .unwrap()
                .distinct
                >= 1
        );
    }

    #[test]
    fn rejects_bad_input() {
        assert!(check_eigen_structure(2, 5).is_err());
        assert!(check_eigen_structure(7, 6).is_err());
    }
}
