//! Polynomials in the symbolic vertex count `n`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use super::SubgraphCensus;
use crate::graph::Graph;
use crate::linalg::Poly;

/// A polynomial in `n` with exact rational coefficients, lowest degree
/// first. Values at integer `n` of the walk-count polynomials are integers
/// even though binomials such as `C(n, 3)` have fractional coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct NPoly {
    coeffs: Vec<BigRational>,
}

impl NPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        NPoly { coeffs }
    }

    pub fn zero() -> Self {
        NPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: i64) -> Self {
        NPoly::new(vec![BigRational::from_integer(BigInt::from(c))])
    }

    /// Integer coefficients, lowest degree first.
    pub fn from_i64(coeffs: &[i64]) -> Self {
        NPoly::new(
            coeffs
                .iter()
                .map(|&c| BigRational::from_integer(BigInt::from(c)))
                .collect(),
        )
    }

    /// The polynomial `n`.
    pub fn var() -> Self {
        NPoly::from_i64(&[0, 1])
    }

    /// `C(n, k) = n (n-1) ... (n-k+1) / k!`.
    pub fn binomial(k: u32) -> Self {
        let mut p = NPoly::constant(1);
        for i in 0..k {
            p = &p * &NPoly::from_i64(&[-i64::from(i), 1]);
        }
        let fact: BigInt = (1..=k).map(BigInt::from).product();
        p.scale(&BigRational::new(BigInt::one(), fact))
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn scale(&self, k: &BigRational) -> NPoly {
        NPoly::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn scale_int(&self, k: i64) -> NPoly {
        self.scale(&BigRational::from_integer(BigInt::from(k)))
    }

    pub fn eval(&self, n: &BigInt) -> BigRational {
        let x = BigRational::from_integer(n.clone());
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * &x + c)
    }

    /// Value at `n` when it is an integer.
    pub fn eval_integer(&self, n: i64) -> Option<BigInt> {
        let v = self.eval(&BigInt::from(n));
        v.is_integer().then(|| v.to_integer())
    }

    /// Clears denominators: a positive multiple with integer coefficients.
    pub fn to_integer_poly(&self) -> Poly {
        let lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        Poly::new(
            self.coeffs
                .iter()
                .map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer())
                .collect(),
        )
    }

    /// Integer roots `>= lower`, ascending. `None` for the zero polynomial.
    pub fn integer_roots_at_least(&self, lower: i64) -> Option<Vec<i64>> {
        if self.is_zero() {
            return None;
        }
        let lower = BigInt::from(lower);
        let mut roots: Vec<i64> = self
            .to_integer_poly()
            .integer_roots()
            .into_iter()
            .filter(|r| r >= &lower)
            .map(|r| i64::try_from(r).expect("roots are bounded by small coefficients"))
            .collect();
        roots.sort_unstable();
        Some(roots)
    }
}

impl Add for &NPoly {
    type Output = NPoly;
    fn add(self, rhs: &NPoly) -> NPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let get = |p: &NPoly, i: usize| p.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero);
        NPoly::new((0..len).map(|i| get(self, i) + get(rhs, i)).collect())
    }
}

impl Neg for &NPoly {
    type Output = NPoly;
    fn neg(self) -> NPoly {
        NPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Sub for &NPoly {
    type Output = NPoly;
    fn sub(self, rhs: &NPoly) -> NPoly {
        self + &(-rhs)
    }
}

impl Mul for &NPoly {
    type Output = NPoly;
    fn mul(self, rhs: &NPoly) -> NPoly {
        if self.is_zero() || rhs.is_zero() {
            return NPoly::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        NPoly::new(out)
    }
}

impl fmt::Display for NPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            let show_coeff = i == 0 || !a.is_one();
            if show_coeff {
                if a.is_integer() {
                    write!(f, "{}", a.numer())?;
                } else {
                    write!(f, "({a})")?;
                }
            }
            match i {
                0 => {}
                1 => write!(f, "n")?,
                _ => write!(f, "n^{i}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for NPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

fn int(v: u64) -> NPoly {
    NPoly::new(vec![BigRational::from_integer(BigInt::from(v))])
}

/// Triangles in `K_n` with the edges of `g` removed, valid for
/// `n >= order(g)`:
/// `C(n,3) - (n-1) m + (1/2) sum d_i^2 - t`.
pub fn complement_triangles_poly(g: &Graph) -> NPoly {
    let m = g.edge_count() as u64;
    let sum_sq: u64 = g.degrees().iter().map(|&d| (d * d) as u64).sum();
    let t = g.triangle_count();
    let half_sum_sq = NPoly::new(vec![BigRational::new(
        BigInt::from(sum_sq),
        BigInt::from(2),
    )]);
    let n_minus_1 = NPoly::from_i64(&[-1, 1]);
    let mut p = NPoly::binomial(3);
    p = &p - &(&n_minus_1 * &int(m));
    p = &p + &half_sum_sq;
    &p - &int(t)
}

/// Closed 4-walks in the complement of a graph with census `c` inside
/// `K_n`:
/// `W_n - (8n^2 - 32n + 34) m + (8n - 20) m1 + 16 m2 - 8 m3 + 8 m4`
/// with `W_n = (n-1)^4 + n - 1`.
pub fn complement_walks4_poly(c: &SubgraphCensus) -> NPoly {
    let n1 = NPoly::from_i64(&[-1, 1]);
    let w = &(&(&n1 * &n1) * &(&n1 * &n1)) + &n1;
    let terms = [
        (&NPoly::from_i64(&[-34, 32, -8]) * &int(c.m)),
        (&NPoly::from_i64(&[-20, 8]) * &int(c.m1)),
        int(c.m2).scale_int(16),
        int(c.m3).scale_int(-8),
        int(c.m4).scale_int(8),
    ];
    terms.iter().fold(w, |acc, t| &acc + t)
}

/// Closed 5-walks in the complement of a graph with census `c` inside
/// `K_n`:
/// `W_n - (10n^3 - 50n^2 + 90n - 60) m + (10n^2 - 20n) m1 + (40n - 120) m2
///  - (10n - 20) m3 - (30n - 60) s1 - 20 s2 - 30 s3 + 10 s4 + 10 s5 - 10 s6`
/// with `W_n = 30 C(n,3) + 120 C(n,5) + 30 (n-3) C(n,3)`. There is no
/// `C_4` term.
pub fn complement_walks5_poly(c: &SubgraphCensus) -> NPoly {
    let c3 = NPoly::binomial(3);
    let w = &(&c3.scale_int(30) + &NPoly::binomial(5).scale_int(120))
        + &(&NPoly::from_i64(&[-90, 30]) * &c3);
    let terms = [
        (&NPoly::from_i64(&[60, -90, 50, -10]) * &int(c.m)),
        (&NPoly::from_i64(&[0, -20, 10]) * &int(c.m1)),
        (&NPoly::from_i64(&[-120, 40]) * &int(c.m2)),
        (&NPoly::from_i64(&[20, -10]) * &int(c.m3)),
        (&NPoly::from_i64(&[60, -30]) * &int(c.s1)),
        int(c.s2).scale_int(-20),
        int(c.s3).scale_int(-30),
        int(c.s4).scale_int(10),
        int(c.s5).scale_int(10),
        int(c.s6).scale_int(-10),
    ];
    terms.iter().fold(w, |acc, t| &acc + t)
}
