//! Fraction-free Gaussian elimination.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::graph::Graph;

/// Exact determinant by Bareiss elimination.
pub fn determinant(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = v;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

/// Exact rank of a (possibly rectangular) integer matrix.
pub fn rank(mut m: Vec<Vec<BigInt>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let v = (&m[i][j] * &m[r][c] - &m[i][c] * &m[r][j]) / &prev;
                m[i][j] = v;
            }
            m[i][c] = BigInt::zero();
        }
        prev = m[r][c].clone();
        r += 1;
    }
    r
}

/// `A - cI` as a dense integer matrix.
pub fn shifted_adjacency(g: &Graph, c: &BigInt) -> Vec<Vec<BigInt>> {
    let n = g.order();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        -c
                    } else {
                        BigInt::from(g.has_edge(i, j) as u8)
                    }
                })
                .collect()
        })
        .collect()
}

/// Multiplicity of the integer eigenvalue `c`: `order - rank(A - cI)`.
pub fn integer_eigen_multiplicity(g: &Graph, c: i64) -> usize {
    g.order() - rank(shifted_adjacency(g, &BigInt::from(c)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{embed_complete_minus, make_family, FamilySpec};

    fn mat(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
            .collect()
    }

    #[test]
    fn small_determinants() {
        assert_eq!(determinant(mat(&[&[2, 1], &[7, -3]])), BigInt::from(-13));
        assert_eq!(determinant(mat(&[&[0, 1], &[1, 0]])), BigInt::from(-1));
        assert_eq!(
            determinant(mat(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 10]])),
            BigInt::from(-3)
        );
        assert_eq!(determinant(mat(&[&[1, 2], &[2, 4]])), BigInt::zero());
    }

    #[test]
    fn ranks() {
        assert_eq!(rank(mat(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(rank(mat(&[&[0, 0, 1], &[0, 0, 2], &[1, 0, 0]])), 2);
        assert_eq!(rank(mat(&[&[1, 0, 1, 0]])), 1);
    }

    #[test]
    fn complete_graph_minus_one() {
        let k6 = make_family(FamilySpec::Complete(6)).unwrap();
        assert_eq!(integer_eigen_multiplicity(&k6, -1), 5);
        assert_eq!(integer_eigen_multiplicity(&k6, 5), 1);
    }

    #[test]
    fn complete_minus_path_minus_one() {
        let p7 = make_family(FamilySpec::Path(7)).unwrap();
        let p8 = make_family(FamilySpec::Path(8)).unwrap();
        assert_eq!(
            integer_eigen_multiplicity(&embed_complete_minus(&p7, 12).unwrap(), -1),
            5
        );
        assert_eq!(
            integer_eigen_multiplicity(&embed_complete_minus(&p8, 12).unwrap(), -1),
            3
        );
    }
}
