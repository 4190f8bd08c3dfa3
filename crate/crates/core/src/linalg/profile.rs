//! Square-free decomposition and eigenvalue multiplicity profiles.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use super::{CharPoly, LinalgError, Poly};

/// Square-free decomposition `p = c * prod f_i^i` over `Z[x]`.
///
/// Returns the pairs `(f_i, i)` with `deg f_i > 0`, each `f_i` primitive
/// with positive leading coefficient. Repeated gcds of the derivative:
/// `g = gcd(p, p')`, `w = p / g`, then `y = gcd(w, g)` peels off the
/// factor `w / y` of the current multiplicity.
pub fn squarefree_decomposition(p: &Poly) -> Vec<(Poly, usize)> {
    let p = p.primitive_part();
    if p.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    let mut g = p.gcd(&p.derivative());
    let mut w = p.div_exact(&g).expect("gcd divides p").primitive_part();
    let mut out = Vec::new();
    let mut i = 1;
    while w.degree().unwrap_or(0) > 0 {
        let y = w.gcd(&g);
        let z = w.div_exact(&y).expect("gcd divides w").primitive_part();
        if z.degree().unwrap_or(0) > 0 {
            out.push((z, i));
        }
        g = g.div_exact(&y).expect("gcd divides g").primitive_part();
        w = y;
        i += 1;
    }
    out
}

/// A linear factor `(x - root)^multiplicity` with integer root.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LinearFactor {
    #[serde(serialize_with = "ser_bigint")]
    pub root: BigInt,
    pub multiplicity: usize,
}

/// Square-free factor without integer roots, with its multiplicity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidualFactor {
    pub factor: Poly,
    pub multiplicity: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplicityProfile {
    /// Sorted by root.
    pub linear: Vec<LinearFactor>,
    /// Sorted by multiplicity.
    pub residual: Vec<ResidualFactor>,
}

impl MultiplicityProfile {
    /// Multiplicity of the integer eigenvalue `c` (zero if absent).
    pub fn multiplicity_of(&self, c: i64) -> usize {
        let c = BigInt::from(c);
        self.linear
            .iter()
            .find(|f| f.root == c)
            .map_or(0, |f| f.multiplicity)
    }

    /// True if every root other than the integer `except` is simple.
    pub fn simple_except(&self, except: i64) -> bool {
        let except = BigInt::from(except);
        self.linear
            .iter()
            .all(|f| f.root == except || f.multiplicity == 1)
            && self.residual.iter().all(|r| r.multiplicity == 1)
    }

    /// Product of all factors.
    pub fn expand(&self) -> Poly {
        let mut out = Poly::one();
        for f in &self.linear {
            out = &out * &Poly::linear(&f.root).pow(f.multiplicity);
        }
        for r in &self.residual {
            out = &out * &r.factor.pow(r.multiplicity);
        }
        out
    }
}

pub fn multiplicity_profile(p: &CharPoly) -> Result<MultiplicityProfile, LinalgError> {
    profile_of_poly(p.poly())
}

pub fn profile_of_poly(p: &Poly) -> Result<MultiplicityProfile, LinalgError> {
    if p.is_zero() {
        return Err(LinalgError::ZeroPolynomial);
    }
    let mut linear = Vec::new();
    let mut residual = Vec::new();
    for (mut factor, multiplicity) in squarefree_decomposition(p) {
        for root in factor.integer_roots() {
            factor = factor
                .div_exact(&Poly::linear(&root))
                .expect("integer root gives a linear factor");
            linear.push(LinearFactor { root, multiplicity });
        }
        if factor.degree().unwrap_or(0) > 0 {
            residual.push(ResidualFactor {
                factor,
                multiplicity,
            });
        }
    }
    linear.sort_by(|a, b| a.root.cmp(&b.root));
    residual.sort_by_key(|r| r.multiplicity);
    Ok(MultiplicityProfile { linear, residual })
}

/// True if `p` has no repeated factor.
pub fn is_squarefree(p: &Poly) -> bool {
    p.gcd(&p.derivative()).degree().unwrap_or(0) == 0
}

/// Removes every factor `(x - root)` from `p`.
pub fn strip_root(p: &Poly, root: i64) -> (Poly, usize) {
    let lin = Poly::linear(&BigInt::from(root));
    let mut rest = p.clone();
    let mut count = 0;
    while !rest.is_zero() && rest.eval(&BigInt::from(root)).is_zero() {
        rest = rest.div_exact(&lin).expect("root gives a linear factor");
        count += 1;
    }
    (rest, count)
}

fn ser_bigint<S: serde::Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_family, FamilySpec};
    use crate::linalg::char_poly;

    fn p(c: &[i64]) -> Poly {
        Poly::from_i64(c)
    }

    #[test]
    fn decomposition_recovers_powers() {
        let f = &(&p(&[1, 1]).pow(3) * &p(&[-2, 0, 1]).pow(2)) * &p(&[0, 1]);
        let parts = squarefree_decomposition(&f);
        assert_eq!(
            parts,
            vec![(p(&[0, 1]), 1), (p(&[-2, 0, 1]), 2), (p(&[1, 1]), 3)]
        );
    }

    #[test]
    fn complete_graph_profile() {
        let k4 = char_poly(&make_family(FamilySpec::Complete(4)).unwrap());
        let prof = multiplicity_profile(&k4).unwrap();
        assert_eq!(
            prof.linear,
            vec![
                LinearFactor {
                    root: BigInt::from(-1),
                    multiplicity: 3
                },
                LinearFactor {
                    root: BigInt::from(3),
                    multiplicity: 1
                }
            ]
        );
        assert!(prof.residual.is_empty());
        assert_eq!(&prof.expand(), k4.poly());
    }

    #[test]
    fn path_is_squarefree() {
        let p6 = char_poly(&make_family(FamilySpec::Path(6)).unwrap());
        assert!(is_squarefree(p6.poly()));
        let prof = multiplicity_profile(&p6).unwrap();
        assert!(prof.simple_except(i64::MIN));
        assert_eq!(&prof.expand(), p6.poly());
    }

    #[test]
    fn strip() {
        let f = &p(&[1, 1]).pow(4) * &p(&[-5, 1]);
        assert_eq!(strip_root(&f, -1), (p(&[-5, 1]), 4));
    }
}
