//! The per-candidate elimination cascade.

use std::fmt;
use std::sync::OnceLock;

use serde::Serialize;

use super::{ser_graph6, PipelineError};
use crate::census::{
    census, complement_triangles_poly, complement_walks4_poly, complement_walks5_poly, NPoly,
};
use crate::graph::{
    basic_census, canonical_form, embed_complete_minus, make_family, CanonicalCode, FamilySpec,
    Graph,
};
use crate::linalg::{char_poly, integer_eigen_multiplicity, CharPoly};

/// Inclusive range of vertex counts `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct NRange {
    pub min: usize,
    pub max: usize,
}

impl NRange {
    pub fn new(min: usize, max: usize) -> Result<Self, PipelineError> {
        if min > max {
            return Err(PipelineError::InvalidRange {
                min,
                max,
                reason: "min exceeds max".into(),
            });
        }
        Ok(NRange { min, max })
    }

    /// `[ℓ, ℓ + 12]`.
    pub fn default_for(ell: usize) -> Self {
        NRange {
            min: ell,
            max: ell + 12,
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> {
        self.min..=self.max
    }

    pub fn contains(&self, n: usize) -> bool {
        (self.min..=self.max).contains(&n)
    }
}

impl fmt::Display for NRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.min, self.max)
    }
}

/// Filters in cascade order. `Survived` means no filter separated the
/// candidate from the target at some tested `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum FilterKind {
    Walks3,
    Walks4,
    Walks5,
    Parity,
    StructuralCycle,
    StructuralTwoCycles,
    StructuralRepeatedPath,
    ZeroMultiplicity,
    ExactCospectral,
    Survived,
}

impl FilterKind {
    /// The spectral property the filter compares.
    pub fn property(self) -> &'static str {
        match self {
            FilterKind::Walks3 => "closed 3-walk count (triangles) of the complement",
            FilterKind::Walks4 => "closed 4-walk count of the complement",
            FilterKind::Walks5 => "closed 5-walk count of the complement",
            FilterKind::Parity => "triangle parity forced by equal 3- and 4-walk counts",
            FilterKind::StructuralCycle => {
                "cycle component other than C_3, C_4 gives a repeated eigenvalue other than -1"
            }
            FilterKind::StructuralTwoCycles => {
                "two disjoint induced cycles force an eigenvalue <= -3"
            }
            FilterKind::StructuralRepeatedPath => {
                "two equal path components other than P_3 give a repeated eigenvalue other than -1"
            }
            FilterKind::ZeroMultiplicity => "multiplicity of the eigenvalue 0",
            FilterKind::ExactCospectral => "exact characteristic polynomial",
            FilterKind::Survived => "no filter separates the pair",
        }
    }
}

impl fmt::Display for FilterKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Whether an elimination holds for every `n` or only at tested values.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Scope {
    /// Polynomial identity in `n`, valid for every `n >= from`.
    AllN { from: usize },
    /// Checked at each listed `n`.
    PerN { tested: Vec<usize> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PerNRecord {
    pub n: usize,
    pub eliminated_by: FilterKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FilterOutcome {
    #[serde(serialize_with = "ser_graph6")]
    pub candidate: Graph,
    pub eliminated_by: FilterKind,
    pub scope: Scope,
    /// Empty for all-`n` eliminations.
    pub per_n: Vec<PerNRecord>,
    /// Candidate minus target for the eliminating walk filter.
    pub difference: Option<String>,
    pub description: String,
}

impl FilterOutcome {
    pub fn survived(&self) -> bool {
        self.eliminated_by == FilterKind::Survived
    }

    /// First `n` at which the candidate survived every filter.
    pub fn surviving_n(&self) -> Option<usize> {
        self.per_n
            .iter()
            .find(|r| r.eliminated_by == FilterKind::Survived)
            .map(|r| r.n)
    }
}

/// Target data for `K_n` minus `P_ℓ`, with per-`n` exact quantities
/// computed once and shared across candidates.
pub(crate) struct PathTarget {
    pub ell: usize,
    path: Graph,
    canon: CanonicalCode,
    walk_polys: [NPoly; 3],
    zero_mult: Vec<OnceLock<usize>>,
    char_polys: Vec<OnceLock<CharPoly>>,
}

impl PathTarget {
    pub fn new(ell: usize, n_max: usize) -> Result<Self, PipelineError> {
        let path = make_family(FamilySpec::Path(ell))?;
        let canon = canonical_form(&path)?;
        let walk_polys = walk_polys(&path);
        Ok(PathTarget {
            ell,
            path,
            canon,
            walk_polys,
            zero_mult: (0..=n_max).map(|_| OnceLock::new()).collect(),
            char_polys: (0..=n_max).map(|_| OnceLock::new()).collect(),
        })
    }

    fn embedded(&self, n: usize) -> Graph {
        embed_complete_minus(&self.path, n).expect("n >= ell within range")
    }

    fn zero_multiplicity(&self, n: usize) -> usize {
        *self.zero_mult[n].get_or_init(|| integer_eigen_multiplicity(&self.embedded(n), 0))
    }

    fn char_poly(&self, n: usize) -> &CharPoly {
        self.char_polys[n].get_or_init(|| char_poly(&self.embedded(n)))
    }

    fn n_max(&self) -> usize {
        self.zero_mult.len() - 1
    }
}

/// Complement triangle, 4-walk and 5-walk polynomials of `g` in `n`.
fn walk_polys(g: &Graph) -> [NPoly; 3] {
    let c = census(g);
    [
        complement_triangles_poly(g),
        complement_walks4_poly(&c),
        complement_walks5_poly(&c),
    ]
}

const WALK_FILTERS: [FilterKind; 3] = [FilterKind::Walks3, FilterKind::Walks4, FilterKind::Walks5];

/// Runs the elimination cascade for `K_n - h` against `K_n - P_ℓ`.
///
/// Walk-count differences that are nonzero polynomials without integer
/// roots from `max(ℓ, order(h))` on, odd triangle counts and the
/// structural rules eliminate for every `n`. Otherwise each `n` in the
/// range is checked in turn: walk counts, multiplicity of the eigenvalue
/// 0, then exact characteristic polynomials.
pub fn filter_candidate(
    h: &Graph,
    ell: usize,
    range: NRange,
) -> Result<FilterOutcome, PipelineError> {
    if ell < 2 {
        return Err(PipelineError::Precondition(format!(
            "ell = {ell} must be at least 2"
        )));
    }
    let target = PathTarget::new(ell, range.max)?;
    filter_with_target(h, &target, range)
}

pub(crate) fn filter_with_target(
    h: &Graph,
    target: &PathTarget,
    range: NRange,
) -> Result<FilterOutcome, PipelineError> {
    let ell = target.ell;
    if h.edge_count() != ell - 1 {
        return Err(PipelineError::Precondition(format!(
            "candidate has {} edges, expected {}",
            h.edge_count(),
            ell - 1
        )));
    }
    if h.isolated_count() > 0 {
        return Err(PipelineError::Precondition(
            "candidate has isolated vertices".into(),
        ));
    }
    let n0 = ell.max(h.order());
    if range.min < n0 {
        return Err(PipelineError::Precondition(format!(
            "range minimum {} is below max(ell, order) = {n0}",
            range.min
        )));
    }
    if range.max > target.n_max() {
        return Err(PipelineError::Precondition(format!(
            "range maximum {} exceeds the prepared target range",
            range.max
        )));
    }
    if canonical_form(h)? == target.canon {
        return Err(PipelineError::Precondition(format!(
            "candidate is isomorphic to P_{ell}"
        )));
    }

    let own = walk_polys(h);
    let diffs: Vec<NPoly> = own
        .iter()
        .zip(&target.walk_polys)
        .map(|(a, b)| a - b)
        .collect();
    let all_n = |kind, difference: Option<String>, description: String| FilterOutcome {
        candidate: h.clone(),
        eliminated_by: kind,
        scope: Scope::AllN { from: n0 },
        per_n: Vec::new(),
        difference,
        description,
    };

    for (kind, diff) in WALK_FILTERS.into_iter().zip(&diffs) {
        let roots = diff.integer_roots_at_least(n0 as i64);
        if roots.as_ref().is_some_and(Vec::is_empty) {
            return Ok(all_n(
                kind,
                Some(diff.to_string()),
                format!(
                    "{} differs by {diff}, nonzero for every n >= {n0}",
                    kind.property()
                ),
            ));
        }
    }

    let t = h.triangle_count();
    if t % 2 == 1 {
        return Ok(all_n(
            FilterKind::Parity,
            None,
            format!("odd triangle count t' = {t}; equal walk counts force t' even"),
        ));
    }

    let flags = basic_census(h).flags;
    let structural = [
        (flags.bad_cycle_component, FilterKind::StructuralCycle),
        (
            flags.disjoint_induced_cycles,
            FilterKind::StructuralTwoCycles,
        ),
        (flags.repeated_paths, FilterKind::StructuralRepeatedPath),
    ];
    if let Some(&(_, kind)) = structural.iter().find(|(hit, _)| *hit) {
        return Ok(all_n(kind, None, kind.property().to_string()));
    }

    let mut per_n = Vec::new();
    for n in range.iter() {
        let walk_hit = WALK_FILTERS
            .into_iter()
            .zip(&diffs)
            .find(|(_, d)| d.eval_integer(n as i64).is_none_or(|v| v != 0.into()))
            .map(|(k, _)| k);
        let eliminated_by = match walk_hit {
            Some(kind) => kind,
            None => {
                let g = embed_complete_minus(h, n)?;
                if integer_eigen_multiplicity(&g, 0) != target.zero_multiplicity(n) {
                    FilterKind::ZeroMultiplicity
                } else if &char_poly(&g) != target.char_poly(n) {
                    FilterKind::ExactCospectral
                } else {
                    FilterKind::Survived
                }
            }
        };
        per_n.push(PerNRecord { n, eliminated_by });
    }

    let survived_at: Vec<usize> = per_n
        .iter()
        .filter(|r| r.eliminated_by == FilterKind::Survived)
        .map(|r| r.n)
        .collect();
    let eliminated_by = if survived_at.is_empty() {
        per_n
            .iter()
            .map(|r| r.eliminated_by)
            .max()
            .expect("range is nonempty")
    } else {
        FilterKind::Survived
    };
    let difference = WALK_FILTERS
        .iter()
        .position(|&k| k == eliminated_by)
        .map(|i| diffs[i].to_string());
    let description = if survived_at.is_empty() {
        let mut kinds: Vec<FilterKind> = per_n.iter().map(|r| r.eliminated_by).collect();
        kinds.sort();
        kinds.dedup();
        let names: Vec<String> = kinds.iter().map(ToString::to_string).collect();
        format!("separated at every n in {range} by {}", names.join(", "))
    } else {
        format!("cospectral with the target at n = {survived_at:?}")
    };
    Ok(FilterOutcome {
        candidate: h.clone(),
        eliminated_by,
        scope: Scope::PerN {
            tested: range.iter().collect(),
        },
        per_n,
        difference,
        description,
    })
}
