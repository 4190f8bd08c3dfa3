//! The DS verdict over every candidate for one path length.

use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use super::filter::{filter_with_target, PathTarget};
use super::{FilterKind, FilterOutcome, NRange, PipelineError, Scope};
use crate::candidates::{realize_all, ParamCombo};
use crate::graph::graph6_encode;

/// Largest vertex count accepted by [`verify_ds`].
pub const MAX_N: usize = 40;
/// Largest path length whose verdict the toolkit certifies. One more is
/// accepted as an experiment and labelled non-certifying.
pub const MAX_CERTIFIED_ELL: usize = 9;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Verdict {
    DsConfirmed,
    Counterexample { graph6: String, n: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComboOutcome {
    pub combo: ParamCombo,
    pub label: String,
    pub outcomes: Vec<FilterOutcome>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DsReport {
    pub ell: usize,
    pub n_range: NRange,
    pub certifying: bool,
    pub combos: Vec<ComboOutcome>,
    /// Candidates with more than `n_range.max` vertices; they cannot occur
    /// inside `K_n` for any tested `n`.
    pub skipped: Vec<String>,
    pub verdict: Verdict,
}

impl DsReport {
    pub fn outcomes(&self) -> impl Iterator<Item = &FilterOutcome> {
        self.combos.iter().flat_map(|c| c.outcomes.iter())
    }

    pub fn confirmed(&self) -> bool {
        self.verdict == Verdict::DsConfirmed
    }

    /// Outcome for the candidate with this graph6 code, if any.
    pub fn find(&self, graph6: &str) -> Option<&FilterOutcome> {
        self.outcomes()
            .find(|o| graph6_encode(&o.candidate) == graph6)
    }

    /// Number of candidates eliminated by each filter.
    pub fn tally(&self) -> Vec<(FilterKind, usize)> {
        let mut out: Vec<(FilterKind, usize)> = Vec::new();
        for o in self.outcomes() {
            match out.iter_mut().find(|(k, _)| *k == o.eliminated_by) {
                Some((_, c)) => *c += 1,
                None => out.push((o.eliminated_by, 1)),
            }
        }
        out.sort();
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "K_n - P_{} for n in {}", self.ell, self.n_range);
        if !self.certifying {
            let _ = writeln!(s, "experimental run: this path length is not certified");
        }
        for c in &self.combos {
            let _ = writeln!(s, "{} ({} candidates)", c.label, c.outcomes.len());
            for o in &c.outcomes {
                let scope = match &o.scope {
                    Scope::AllN { from } => format!("all n >= {from}"),
                    Scope::PerN { tested } => format!(
                        "n = {}..{}",
                        tested.first().copied().unwrap_or(0),
                        tested.last().copied().unwrap_or(0)
                    ),
                };
                let _ = writeln!(
                    s,
                    "  {:<16} {:<24} {:<14} {}",
                    graph6_encode(&o.candidate),
                    o.eliminated_by.to_string(),
                    scope,
                    o.description
                );
            }
        }
        for g in &self.skipped {
            let _ = writeln!(s, "skipped (order above n_max): {g}");
        }
        let tally: Vec<String> = self
            .tally()
            .iter()
            .map(|(k, c)| format!("{k}={c}"))
            .collect();
        let _ = writeln!(s, "eliminations: {}", tally.join(" "));
        let verdict = match &self.verdict {
            Verdict::DsConfirmed => "DS-confirmed".to_string(),
            Verdict::Counterexample { graph6, n } => format!("counterexample {graph6} at n = {n}"),
        };
        let _ = writeln!(s, "verdict: {verdict}");
        s
    }
}

/// Filters every candidate for `K_n - P_ℓ` over `range` and aggregates
/// the verdict. Deterministic: candidates are processed in parallel but
/// collected in combination order and canonical order within each.
pub fn verify_ds(ell: usize, range: NRange) -> Result<DsReport, PipelineError> {
    if !(2..=MAX_CERTIFIED_ELL + 1).contains(&ell) {
        return Err(PipelineError::Precondition(format!(
            "ell = {ell} outside the supported range [2, {}]",
            MAX_CERTIFIED_ELL + 1
        )));
    }
    if range.min < ell || range.max > MAX_N || range.min > range.max {
        return Err(PipelineError::InvalidRange {
            min: range.min,
            max: range.max,
            reason: format!("must lie within [{ell}, {MAX_N}]"),
        });
    }
    let target = PathTarget::new(ell, range.max)?;
    let sets = realize_all(ell)?;

    let mut skipped = Vec::new();
    let mut jobs = Vec::new();
    for (i, set) in sets.iter().enumerate() {
        for g in &set.graphs {
            if g.order() > range.max {
                skipped.push(graph6_encode(g));
            } else {
                let local = NRange {
                    min: range.min.max(g.order()),
                    max: range.max,
                };
                jobs.push((i, g, local));
            }
        }
    }
    let results: Vec<(usize, FilterOutcome)> = jobs
        .par_iter()
        .map(|&(i, g, local)| filter_with_target(g, &target, local).map(|o| (i, o)))
        .collect::<Result<_, _>>()?;

    let mut combos: Vec<ComboOutcome> = sets
        .into_iter()
        .map(|set| ComboOutcome {
            label: set.combo.braces(),
            combo: set.combo,
            outcomes: Vec::new(),
        })
        .collect();
    for (i, o) in results {
        combos[i].outcomes.push(o);
    }

    let verdict = combos
        .iter()
        .flat_map(|c| c.outcomes.iter())
        .find_map(|o| {
            o.surviving_n().map(|n| Verdict::Counterexample {
                graph6: graph6_encode(&o.candidate),
                n,
            })
        })
        .unwrap_or(Verdict::DsConfirmed);

    Ok(DsReport {
        ell,
        n_range: range,
        certifying: ell <= MAX_CERTIFIED_ELL,
        combos,
        skipped,
        verdict,
    })
}
