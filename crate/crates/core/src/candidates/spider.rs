//! Pattern counts of a path together with a spider.

use std::fmt;

use serde::Serialize;

use crate::census::{census, SubgraphCensus};
use crate::graph::{make_family, FamilySpec, GraphError};

/// A polynomial in `ℓ`: `(c0 + c1 ℓ + c2 ℓ^2) / den`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SymEntry {
    pub coeffs: [i64; 3],
    pub den: i64,
}

impl SymEntry {
    pub const fn constant(c: i64) -> Self {
        SymEntry {
            coeffs: [c, 0, 0],
            den: 1,
        }
    }

    /// `ℓ + c`.
    pub const fn ell_plus(c: i64) -> Self {
        SymEntry {
            coeffs: [c, 1, 0],
            den: 1,
        }
    }

    pub fn eval(&self, ell: i64) -> i64 {
        let [a, b, c] = self.coeffs;
        let num = a + b * ell + c * ell * ell;
        assert_eq!(num % self.den, 0, "{self} at ℓ = {ell} is not an integer");
        num / self.den
    }
}

impl fmt::Display for SymEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.coeffs;
        let mut s = String::new();
        for (coef, var) in [(c, "ℓ²"), (b, "ℓ"), (a, "")] {
            if coef == 0 && !(var.is_empty() && s.is_empty()) {
                continue;
            }
            let sign = if coef < 0 { "-" } else { "+" };
            if s.is_empty() {
                if coef < 0 {
                    s.push('-');
                }
            } else {
                s.push_str(&format!(" {sign} "));
            }
            let mag = coef.abs();
            if var.is_empty() || mag != 1 {
                s.push_str(&mag.to_string());
            }
            s.push_str(var);
        }
        if self.den != 1 {
            write!(f, "({s})/{}", self.den)
        } else {
            write!(f, "{s}")
        }
    }
}

/// Lower bound with an optional upper bound (inclusive).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ParamRange {
    pub min: usize,
    pub max: Option<usize>,
}

impl ParamRange {
    const fn exactly(v: usize) -> Self {
        ParamRange {
            min: v,
            max: Some(v),
        }
    }

    const fn at_least(v: usize) -> Self {
        ParamRange { min: v, max: None }
    }

    pub fn contains(&self, v: usize) -> bool {
        v >= self.min && self.max.is_none_or(|m| v <= m)
    }
}

impl fmt::Display for ParamRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.max {
            Some(m) if m == self.min => write!(f, "={m}"),
            _ => write!(f, "≥{}", self.min),
        }
    }
}

/// Column order of [`SpiderRow::entries`].
pub const SPIDER_COLUMNS: [&str; 10] = ["m1", "m2", "m3", "m4", "s1", "s2", "s3", "s4", "s5", "s6"];

/// One row of the path-plus-spider census table. Blank cells are `None`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpiderRow {
    pub a: ParamRange,
    pub b: ParamRange,
    pub c: ParamRange,
    pub d: ParamRange,
    pub entries: [Option<SymEntry>; 10],
}

impl SpiderRow {
    pub fn label(&self) -> String {
        format!("a{},b{},c{},d{}", self.a, self.b, self.c, self.d)
    }

    pub fn admits(&self, a: usize, b: usize, c: usize, d: usize) -> bool {
        self.a.contains(a) && self.b.contains(b) && self.c.contains(c) && self.d.contains(d)
    }

    /// Smallest admissible parameters.
    pub fn minimal(&self) -> (usize, usize, usize, usize) {
        (self.a.min, self.b.min, self.c.min, self.d.min)
    }

    /// Admissible `(a, b, c, d)` with `b <= c <= d` and sum `ell`.
    pub fn instances(&self, ell: usize) -> Vec<(usize, usize, usize, usize)> {
        let mut out = Vec::new();
        for b in 1..ell {
            for c in b..ell {
                for d in c..ell {
                    if b + c + d >= ell {
                        continue;
                    }
                    let a = ell - b - c - d;
                    if self.admits(a, b, c, d) {
                        out.push((a, b, c, d));
                    }
                }
            }
        }
        out
    }
}

fn census_values(c: &SubgraphCensus) -> [u64; 10] {
    [c.m1, c.m2, c.m3, c.m4, c.s1, c.s2, c.s3, c.s4, c.s5, c.s6]
}

/// Census of `P_a ∪ T_{b,c,d}` with the first table row admitting the
/// parameters.
pub fn spider_union_census(
    a: usize,
    b: usize,
    c: usize,
    d: usize,
) -> Result<(SubgraphCensus, Option<SpiderRow>), GraphError> {
    if a < 2 {
        return Err(GraphError::InvalidFamily(format!(
            "the path needs at least 2 vertices, got {a}"
        )));
    }
    let g = make_family(FamilySpec::Path(a))?
        .disjoint_union(&make_family(FamilySpec::Spider(b, c, d))?)?;
    let mut legs = [b, c, d];
    legs.sort_unstable();
    let row = spider_table_rows()
        .into_iter()
        .find(|r| r.admits(a, legs[0], legs[1], legs[2]));
    Ok((census(&g), row))
}

impl SpiderRow {
    /// Columns where the census disagrees with the row at `ℓ`:
    /// `(column, printed value, computed value)`.
    pub fn mismatches(&self, c: &SubgraphCensus, ell: usize) -> Vec<(&'static str, i64, u64)> {
        let values = census_values(c);
        SPIDER_COLUMNS
            .iter()
            .zip(self.entries.iter().zip(values))
            .filter_map(|(&name, (entry, value))| {
                let e = entry.as_ref()?.eval(ell as i64);
                (e != value as i64).then_some((name, e, value))
            })
            .collect()
    }
}

/// The sixteen rows of the path-plus-spider census table, as printed.
pub fn spider_table_rows() -> Vec<SpiderRow> {
    use ParamRange as R;
    let m1 = Some(SymEntry::ell_plus(-2));
    let m2 = Some(SymEntry {
        coeffs: [6, -5, 1],
        den: 2,
    });
    let zero = Some(SymEntry::constant(0));
    let s2 = Some(SymEntry {
        coeffs: [9, -7, 1],
        den: 1,
    });
    let one = Some(SymEntry::constant(1));
    let short = |a, b, c, d, m3: i64| SpiderRow {
        a,
        b,
        c,
        d,
        entries: [
            m1,
            m2,
            Some(SymEntry::ell_plus(m3)),
            zero,
            None,
            None,
            None,
            None,
            None,
            None,
        ],
    };
    let full = |a, b, c, d, s4: i64| SpiderRow {
        a,
        b,
        c,
        d,
        entries: [
            m1,
            m2,
            Some(SymEntry::ell_plus(-3)),
            zero,
            zero,
            s2,
            one,
            Some(SymEntry::ell_plus(s4)),
            zero,
            zero,
        ],
    };
    let (e, l) = (R::exactly, R::at_least);
    vec![
        short(l(4), e(1), e(1), e(1), -6),
        short(l(3), e(1), e(1), l(2), -5),
        short(e(2), e(1), e(1), l(2), -4),
        short(l(3), e(1), l(2), l(2), -4),
        short(e(2), l(2), l(2), l(2), -2),
        SpiderRow {
            a: e(2),
            b: e(1),
            c: e(2),
            d: e(2),
            entries: [
                m1,
                m2,
                Some(SymEntry::ell_plus(-3)),
                zero,
                None,
                Some(SymEntry::constant(9)),
                one,
                one,
                None,
                None,
            ],
        },
        full(e(2), e(1), e(2), l(3), -5),
        full(e(2), e(1), l(3), l(3), -4),
        full(e(3), e(2), e(2), e(2), -6),
        full(l(4), e(2), e(2), e(2), -7),
        full(e(3), e(2), e(2), l(3), -5),
        full(l(4), e(2), e(2), l(3), -6),
        full(e(3), e(2), l(3), l(3), -4),
        full(l(4), e(2), l(3), l(3), -5),
        full(e(3), l(3), l(3), l(3), -3),
        full(l(4), l(3), l(3), l(3), -4),
    ]
}
