//! Dense univariate polynomials over arbitrary-precision integers.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Coefficients stored lowest degree first with no trailing zeros; the
/// zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Poly {
    coeffs: Vec<BigInt>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Poly::new(vec![c])
    }

    /// `x - root`.
    pub fn linear(root: &BigInt) -> Self {
        Poly::new(vec![-root, BigInt::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with the zero polynomial reported as `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// Sign of the value at a rational point, computed without fractions.
    pub fn sign_at(&self, x: &BigRational) -> Ordering {
        let (num, den) = (x.numer(), x.denom());
        let Some(d) = self.degree() else {
            return Ordering::Equal;
        };
        // sum c_i num^i den^(d-i); den > 0 so the sign is preserved
        let mut den_pows = Vec::with_capacity(d + 1);
        let mut den_pow = BigInt::one();
        for _ in 0..=d {
            den_pows.push(den_pow.clone());
            den_pow *= den;
        }
        let mut total = BigInt::zero();
        let mut num_pow = BigInt::one();
        for (i, c) in self.coeffs.iter().enumerate() {
            total += c * &num_pow * &den_pows[d - i];
            num_pow *= num;
        }
        total.sign_ordering()
    }

    /// Sign as `x -> -infinity`.
    pub fn sign_at_neg_infinity(&self) -> Ordering {
        match (self.degree(), self.leading()) {
            (Some(d), Some(lc)) => {
                let s = lc.sign_ordering();
                if d % 2 == 1 {
                    s.reverse()
                } else {
                    s
                }
            }
            _ => Ordering::Equal,
        }
    }

    pub fn sign_at_pos_infinity(&self) -> Ordering {
        self.leading()
            .map_or(Ordering::Equal, |lc| lc.sign_ordering())
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn scale(&self, k: &BigInt) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// Gcd of the coefficients (non-negative).
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Divides out the content and normalises the leading coefficient to be
    /// positive.
    pub fn primitive_part(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut content = self.content();
        if self.leading().is_some_and(Signed::is_negative) {
            content = -content;
        }
        Poly::new(self.coeffs.iter().map(|c| c / &content).collect())
    }

    /// Pseudo-remainder `lc(d)^(deg a - deg d + 1) * a mod d`.
    pub fn pseudo_rem(&self, d: &Poly) -> Poly {
        let dd = d.degree().expect("pseudo-remainder by the zero polynomial");
        let lc = d.leading().expect("nonzero divisor").clone();
        let mut r = self.clone();
        let Some(da) = r.degree() else {
            return r;
        };
        if da < dd {
            return r;
        }
        let mut steps = da - dd + 1;
        while let Some(dr) = r.degree() {
            if dr < dd {
                break;
            }
            let lr = r.leading().expect("nonzero").clone();
            let shift = dr - dd;
            let mut next: Vec<BigInt> = r.coeffs.iter().map(|c| c * &lc).collect();
            for (i, c) in d.coeffs.iter().enumerate() {
                next[i + shift] -= &lr * c;
            }
            r = Poly::new(next);
            steps -= 1;
        }
        if steps > 0 {
            r = r.scale(&num_traits::pow(lc, steps));
        }
        r
    }

    /// Exact quotient `self / d` in `Z[x]`, or `None` if `d` does not divide
    /// `self` with an integral quotient.
    pub fn div_exact(&self, d: &Poly) -> Option<Poly> {
        let dd = d.degree()?;
        let lc = d.leading()?;
        let mut r = self.coeffs.clone();
        let Some(da) = self.degree() else {
            return Some(Poly::zero());
        };
        if da < dd {
            return None;
        }
        let mut q = vec![BigInt::zero(); da - dd + 1];
        for shift in (0..=da - dd).rev() {
            let top = &r[shift + dd];
            if top.is_zero() {
                continue;
            }
            let (quot, rem) = top.div_rem(lc);
            if !rem.is_zero() {
                return None;
            }
            for (i, c) in d.coeffs.iter().enumerate() {
                r[shift + i] -= &quot * c;
            }
            q[shift] = quot;
        }
        if r.iter().all(Zero::is_zero) {
            Some(Poly::new(q))
        } else {
            None
        }
    }

    /// Greatest common divisor, primitive with positive leading coefficient.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive_part();
            a = b;
            b = r;
        }
        a
    }

    /// Integer roots, ascending, each listed once.
    pub fn integer_roots(&self) -> Vec<BigInt> {
        if self.is_zero() {
            return Vec::new();
        }
        let mut roots = Vec::new();
        // strip x^k
        let low = self.coeffs.iter().position(|c| !c.is_zero()).unwrap_or(0);
        if low > 0 {
            roots.push(BigInt::zero());
        }
        let reduced = Poly::new(self.coeffs[low..].to_vec());
        if reduced.degree().unwrap_or(0) == 0 {
            return roots;
        }
        let bound = reduced.root_bound();
        let constant = reduced.coeffs[0].abs();
        let mut c = -bound.clone();
        while c <= bound {
            // a root c divides the constant term
            if !c.is_zero() && (&constant % c.abs()).is_zero() && reduced.eval(&c).is_zero() {
                roots.push(c.clone());
            }
            c += 1;
        }
        roots.sort();
        roots
    }

    /// An integer `B` with every complex root of modulus at most `B`
    /// (Fujiwara's bound rounded up).
    pub fn root_bound(&self) -> BigInt {
        let Some(d) = self.degree() else {
            return BigInt::zero();
        };
        let lc = self.leading().expect("nonzero").abs();
        let mut best = BigInt::zero();
        for k in 1..=d {
            let c = self.coeffs[d - k].abs();
            if c.is_zero() {
                continue;
            }
            // ceil((c / lc)^(1/k)), halved term for the constant coefficient
            let ratio = if k == d {
                c.div_ceil(&(&lc * 2))
            } else {
                c.div_ceil(&lc)
            };
            let mut r = ratio.nth_root(k as u32);
            if num_traits::pow(r.clone(), k) < ratio {
                r += 1;
            }
            if r > best {
                best = r;
            }
        }
        best * 2
    }

    pub fn pow(&self, e: usize) -> Poly {
        (0..e).fold(Poly::one(), |acc, _| &acc * self)
    }
}

trait SignOrdering {
    fn sign_ordering(&self) -> Ordering;
}

impl SignOrdering for BigInt {
    fn sign_ordering(&self) -> Ordering {
        self.cmp(&BigInt::zero())
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            let show_mag = !mag.is_one() || i == 0;
            if show_mag {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}
