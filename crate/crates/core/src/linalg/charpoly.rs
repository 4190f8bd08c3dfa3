//! Division-free characteristic polynomials (Berkowitz).

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use super::Poly;
use crate::graph::Graph;

/// `det(xI - A)` with exact integer coefficients. Always monic.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CharPoly(Poly);

impl CharPoly {
    pub fn poly(&self) -> &Poly {
        &self.0
    }

    pub fn into_poly(self) -> Poly {
        self.0
    }

    pub fn degree(&self) -> usize {
        self.0
            .degree()
            .expect("characteristic polynomials are nonzero")
    }

    /// Wraps a polynomial known to be monic.
    pub fn from_monic(p: Poly) -> Option<Self> {
        p.is_monic().then_some(CharPoly(p))
    }
}

impl fmt::Display for CharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl Serialize for CharPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let coeffs: Vec<String> = self.0.coeffs().iter().map(ToString::to_string).collect();
        coeffs.serialize(s)
    }
}

pub fn char_poly(g: &Graph) -> CharPoly {
    let n = g.order();
    let matrix: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| BigInt::from(g.has_edge(i, j) as u8))
                .collect()
        })
        .collect();
    CharPoly(char_poly_of_matrix(&matrix))
}

/// Characteristic polynomial of a square integer matrix.
///
/// For each leading block `A_r = [[M, c], [r, a]]` the coefficient vector
/// of `det(xI - A_r)` is the lower-triangular Toeplitz matrix with first
/// column `1, -a, -r c, -r M c, ..., -r M^(r-2) c` applied to the vector
/// of the previous block.
pub fn char_poly_of_matrix(a: &[Vec<BigInt>]) -> Poly {
    let n = a.len();
    // highest degree first while iterating
    let mut current: Vec<BigInt> = vec![BigInt::one()];
    for r in 0..n {
        let diag = &a[r][r];
        let mut toeplitz: Vec<BigInt> = Vec::with_capacity(r + 2);
        toeplitz.push(BigInt::one());
        toeplitz.push(-diag);
        // v = M^k c, where M = a[0..r][0..r], c = a[0..r][r]
        let mut v: Vec<BigInt> = (0..r).map(|i| a[i][r].clone()).collect();
        for k in 0..r {
            let dot: BigInt = (0..r).map(|j| &a[r][j] * &v[j]).sum();
            toeplitz.push(-dot);
            if k + 1 < r {
                v = (0..r)
                    .map(|i| {
                        let row = &a[i];
                        let mut s = BigInt::zero();
                        for j in 0..r {
                            if !row[j].is_zero() && !v[j].is_zero() {
                                s += &row[j] * &v[j];
                            }
                        }
                        s
                    })
                    .collect();
            }
        }
        let next: Vec<BigInt> = (0..r + 2)
            .map(|i| {
                let mut s = BigInt::zero();
                for j in 0..=r.min(i) {
                    if i - j < toeplitz.len() && j < current.len() {
                        s += &toeplitz[i - j] * &current[j];
                    }
                }
                s
            })
            .collect();
        current = next;
    }
    current.reverse();
    Poly::new(current)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_family, FamilySpec};

    fn cp(spec: FamilySpec) -> Poly {
        char_poly(&make_family(spec).unwrap()).into_poly()
    }

    #[test]
    fn closed_forms() {
        assert_eq!(cp(FamilySpec::Complete(3)), Poly::from_i64(&[-2, -3, 0, 1]));
        assert_eq!(cp(FamilySpec::Path(3)), Poly::from_i64(&[0, -2, 0, 1]));
        assert_eq!(cp(FamilySpec::Empty(0)), Poly::one());
        assert_eq!(cp(FamilySpec::Cycle(4)), Poly::from_i64(&[0, 0, -4, 0, 1]));
    }

    #[test]
    fn star_and_c4_plus_k1_share_polynomial() {
        let star = cp(FamilySpec::Star(4));
        let c4k1 = char_poly(
            &make_family(FamilySpec::Cycle(4))
                .unwrap()
                .disjoint_union(&make_family(FamilySpec::Empty(1)).unwrap())
                .unwrap(),
        )
        .into_poly();
        assert_eq!(star, Poly::from_i64(&[0, 0, 0, -4, 0, 1]));
        assert_eq!(star, c4k1);
    }

    #[test]
    fn general_matrix() {
        let m = |v: i64| BigInt::from(v);
        let a = vec![vec![m(2), m(1)], vec![m(7), m(-3)]];
        // x^2 + x - 13
        assert_eq!(char_poly_of_matrix(&a), Poly::from_i64(&[-13, 1, 1]));
    }
}
