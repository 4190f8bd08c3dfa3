//! Real root counting with Sturm sequences over exact rationals.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use super::{squarefree_decomposition, LinalgError, Poly};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RootCount {
    /// Distinct real roots.
    pub distinct: usize,
    /// Real roots counted with multiplicity.
    pub with_multiplicity: usize,
}

/// Sturm sequence `p, p', -rem(p, p'), ...`, each term reduced to its
/// primitive part with a positive scale so signs are preserved.
pub fn sturm_sequence(p: &Poly) -> Vec<Poly> {
    let mut seq = vec![p.clone()];
    let d = p.derivative();
    if d.is_zero() {
        return seq;
    }
    seq.push(d);
    loop {
        let n = seq.len();
        let (a, b) = (&seq[n - 2], &seq[n - 1]);
        if b.degree() == Some(0) {
            break;
        }
        let da = a.degree().expect("nonzero");
        let db = b.degree().expect("nonzero");
        let mut r = a.pseudo_rem(b);
        // prem multiplies by lc(b)^(da-db+1); undo a negative factor
        let lc_negative = b.leading().is_some_and(|c| c < &BigInt::zero());
        if lc_negative && (da - db + 1) % 2 == 1 {
            r = -&r;
        }
        if r.is_zero() {
            break;
        }
        let content = r.content();
        let reduced = Poly::new(r.coeffs().iter().map(|c| -(c / &content)).collect());
        seq.push(reduced);
    }
    seq
}

fn variations(signs: impl Iterator<Item = Ordering>) -> usize {
    let mut last = Ordering::Equal;
    let mut count = 0;
    for s in signs {
        if s == Ordering::Equal {
            continue;
        }
        if last != Ordering::Equal && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

/// Distinct real roots of a square-free `p` strictly below `q`, where `q`
/// is not a root of `p`.
fn count_below_nonroot(seq: &[Poly], q: &BigRational) -> usize {
    let at_neg_inf = variations(seq.iter().map(Poly::sign_at_neg_infinity));
    let at_q = variations(seq.iter().map(|s| s.sign_at(q)));
    at_neg_inf - at_q
}

/// Distinct real roots `<= q` of a square-free polynomial.
fn distinct_leq_squarefree(p: &Poly, q: &BigRational) -> usize {
    if p.degree().unwrap_or(0) == 0 {
        return 0;
    }
    if p.sign_at(q) == Ordering::Equal {
        // deflate by (den x - num); the quotient no longer vanishes at q
        let factor = Poly::new(vec![-q.numer().clone(), q.denom().clone()]);
        let rest = p
            .div_exact(&factor)
            .expect("a rational root gives an integral linear factor");
        1 + distinct_leq_squarefree(&rest.primitive_part(), q)
    } else {
        count_below_nonroot(&sturm_sequence(p), q)
    }
}

/// Real roots of `p` that are `<= q`.
pub fn count_roots_leq(p: &Poly, q: &BigRational) -> Result<RootCount, LinalgError> {
    if p.is_zero() {
        return Err(LinalgError::ZeroPolynomial);
    }
    let parts = squarefree_decomposition(p);
    let mut distinct = 0;
    let mut with_multiplicity = 0;
    for (factor, mult) in &parts {
        let c = distinct_leq_squarefree(factor, q);
        distinct += c;
        with_multiplicity += c * mult;
    }
    Ok(RootCount {
        distinct,
        with_multiplicity,
    })
}

/// Real roots in the half-open interval `(lo, hi]`.
pub fn count_roots_between(
    p: &Poly,
    lo: &BigRational,
    hi: &BigRational,
) -> Result<RootCount, LinalgError> {
    let upper = count_roots_leq(p, hi)?;
    let lower = count_roots_leq(p, lo)?;
    Ok(RootCount {
        distinct: upper.distinct - lower.distinct,
        with_multiplicity: upper.with_multiplicity - lower.with_multiplicity,
    })
}

pub fn integer_point(v: i64) -> BigRational {
    BigRational::new(BigInt::from(v), BigInt::one())
}
