//! The printed combination lists and candidate tables, and their
//! reproduction from the enumeration.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use super::{enumerate_graphs, solve_combos, CandidateError, ParamCombo};
use crate::graph::{canonical_form, graph6_encode, make_family, CanonicalCode, FamilySpec, Graph};

/// Building block of a printed table entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Part {
    Cycle(usize),
    /// Path on the given number of vertices.
    Path(usize),
    Spider(usize, usize, usize),
    /// `K_{1,k}`.
    Star(usize),
    /// Triangle with a pendant edge, `G_a`.
    TrianglePendant,
    /// A graph known only from a drawing, by its letter.
    Figure(char),
}

impl Part {
    fn graph(self) -> Option<Graph> {
        let spec = match self {
            Part::Cycle(k) => FamilySpec::Cycle(k),
            Part::Path(k) => FamilySpec::Path(k),
            Part::Spider(b, c, d) => FamilySpec::Spider(b, c, d),
            Part::Star(k) => FamilySpec::Star(k),
            Part::TrianglePendant => FamilySpec::TrianglePendant,
            Part::Figure(_) => return None,
        };
        Some(make_family(spec).expect("table parts are valid"))
    }
}

impl fmt::Display for Part {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Part::Cycle(k) => write!(f, "C_{k}"),
            Part::Path(k) => write!(f, "P_{k}"),
            Part::Spider(b, c, d) => write!(f, "T_{{{b},{c},{d}}}"),
            Part::Star(k) => write!(f, "K_{{1,{k}}}"),
            Part::TrianglePendant => write!(f, "G_a"),
            Part::Figure(c) => write!(f, "G_{c}"),
        }
    }
}

/// A disjoint union of parts with multiplicities.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableEntry {
    pub parts: Vec<(usize, Part)>,
}

impl TableEntry {
    pub fn label(&self) -> String {
        self.parts
            .iter()
            .map(|&(k, p)| {
                if k == 1 {
                    p.to_string()
                } else {
                    format!("{k}{p}")
                }
            })
            .collect::<Vec<_>>()
            .join("∪")
    }

    fn figure(&self) -> Option<char> {
        self.parts.iter().find_map(|&(_, p)| match p {
            Part::Figure(c) => Some(c),
            _ => None,
        })
    }

    /// Canonical codes of the named components, with repetition.
    fn named_components(&self) -> Vec<CanonicalCode> {
        let mut out = Vec::new();
        for &(k, p) in &self.parts {
            if let Some(g) = p.graph() {
                let code = canonical_form(&g).expect("small");
                out.extend(std::iter::repeat_n(code, k));
            }
        }
        out.sort();
        out
    }

    fn named_edges(&self) -> usize {
        self.parts
            .iter()
            .filter_map(|&(k, p)| p.graph().map(|g| k * g.edge_count()))
            .sum()
    }
}

/// One printed row: a combination and the graphs listed for it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableRow {
    /// The combination exactly as printed.
    pub printed: String,
    pub combo: ParamCombo,
    /// How the printed combination was read, when it needed reading.
    pub note: Option<String>,
    pub entries: Vec<TableEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum EntryStatus {
    /// The named union is one of the realizations.
    Matched { graph6: String },
    /// Realizations containing the named parts plus exactly one further
    /// component, which is a possible shape of the drawn graph.
    Figure {
        letter: char,
        candidates: Vec<String>,
        components: Vec<String>,
    },
    /// The entry cannot have the row's parameters. `readings` lists
    /// realizations reachable by changing a single printed parameter.
    Inconsistent {
        reason: String,
        readings: Vec<(String, String)>,
    },
    /// No realization matches.
    Missing,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EntryReport {
    pub label: String,
    #[serde(flatten)]
    pub status: EntryStatus,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RowReport {
    pub printed: String,
    pub combo: String,
    pub note: Option<String>,
    pub realized: Vec<String>,
    pub entries: Vec<EntryReport>,
    /// Realizations matched by no printed entry.
    pub unlisted: Vec<String>,
}

impl RowReport {
    /// Every printed entry is either matched or has a figure certificate.
    pub fn reproduced(&self) -> bool {
        self.entries.iter().all(|e| {
            matches!(
                e.status,
                EntryStatus::Matched { .. } | EntryStatus::Figure { .. }
            )
        })
    }
}

/// Graph6 certificates for a drawn graph, intersected over every row it
/// appears in.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FigureCertificate {
    pub letter: char,
    pub certificates: Vec<String>,
    pub appearances: usize,
    /// Sorted ascending, for each certificate.
    pub degrees: Vec<Vec<usize>>,
    pub triangles: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableReport {
    pub table: u8,
    pub ell: usize,
    pub rows: Vec<RowReport>,
    /// Graphic combinations missing from the table, with their number of
    /// realizations.
    pub unlisted_graphic: Vec<(String, usize)>,
    pub figures: Vec<FigureCertificate>,
}

impl TableReport {
    pub fn reproduced(&self) -> bool {
        self.rows.iter().all(RowReport::reproduced)
    }

    /// Human-readable summary.
    pub fn to_text(&self) -> String {
        let mut s = format!("Table {} (ℓ = {})\n", self.table, self.ell);
        for r in &self.rows {
            s.push_str(&format!(
                "{}  [{} realizations]\n",
                r.combo,
                r.realized.len()
            ));
            if let Some(n) = &r.note {
                s.push_str(&format!("    note: {n}\n"));
            }
            for e in &r.entries {
                let status = match &e.status {
                    EntryStatus::Matched { graph6 } => format!("matched {graph6}"),
                    EntryStatus::Figure {
                        letter, components, ..
                    } => format!("G_{letter} ∈ {{{}}}", components.join(", ")),
                    EntryStatus::Inconsistent { reason, readings } => {
                        let mut t = format!("inconsistent: {reason}");
                        for (label, g6) in readings {
                            t.push_str(&format!("; realized as {label} ({g6})"));
                        }
                        t
                    }
                    EntryStatus::Missing => "MISSING".into(),
                };
                s.push_str(&format!("    {:<28} {status}\n", e.label));
            }
            for u in &r.unlisted {
                s.push_str(&format!("    {:<28} {u}\n", "(not printed)"));
            }
        }
        for (c, k) in &self.unlisted_graphic {
            s.push_str(&format!(
                "graphic but not printed: {c} [{k} realizations]\n"
            ));
        }
        for f in &self.figures {
            s.push_str(&format!(
                "G_{}: {} (in {} rows)\n",
                f.letter,
                f.certificates.join(" or "),
                f.appearances
            ));
        }
        s
    }
}

/// Printed list against the equation solver.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PrintedComboCheck {
    pub ell: usize,
    pub printed: usize,
    pub solved: usize,
    /// Printed entries that violate the equations.
    pub violating: Vec<String>,
    /// Solutions absent from the printed list.
    pub not_printed: Vec<String>,
    pub set_equal: bool,
    /// `4ℓ - 6`, the constant in the square-sum equation.
    pub expected_square_constant: usize,
    /// Distinct values of `sum i^2 x_i - 2t'` over the printed entries.
    pub printed_square_constants: Vec<usize>,
}

/// The combination lists as printed, `[t', x_1, ..., x_k]`.
pub fn printed_combos(ell: usize) -> Option<Vec<ParamCombo>> {
    let raw: &[&[usize]] = match ell {
        7 => &[
            &[0, 2, 5, 0, 0, 0],
            &[0, 5, 2, 1, 0, 0],
            &[1, 0, 6, 0, 0, 0],
            &[1, 3, 3, 1, 0, 0],
            &[1, 6, 0, 2, 0, 0],
            &[1, 8, 0, 0, 1, 0],
            &[2, 1, 4, 1, 0, 0],
            &[2, 4, 1, 2, 0, 0],
            &[2, 6, 1, 0, 1, 0],
            &[3, 2, 2, 2, 0, 0],
            &[3, 4, 2, 0, 1, 0],
            &[4, 0, 3, 2, 0, 0],
            &[4, 2, 3, 0, 1, 0],
            &[4, 3, 0, 3, 0, 0],
            &[4, 5, 0, 1, 1, 0],
        ],
        8 => &[
            &[0, 2, 6, 0, 0, 0],
            &[0, 5, 3, 1, 0, 0],
            &[0, 8, 0, 2, 0, 0],
            &[0, 10, 0, 0, 1, 0],
            &[1, 0, 7, 0, 0, 0],
            &[1, 3, 4, 1, 0, 0],
            &[1, 6, 1, 2, 0, 0],
            &[1, 8, 1, 0, 1, 0],
            &[2, 1, 5, 1, 0, 0],
            &[2, 4, 2, 2, 0, 0],
            &[2, 6, 2, 0, 1, 0],
            &[3, 2, 3, 2, 0, 0],
            &[3, 4, 3, 0, 1, 0],
            &[3, 5, 0, 3, 0, 0],
            &[3, 7, 0, 1, 1, 0],
            &[4, 0, 4, 2, 0, 0],
            &[4, 2, 4, 0, 1, 0],
            &[4, 3, 1, 3, 0, 0],
            &[4, 5, 1, 1, 1, 0],
            &[4, 9, 0, 0, 0, 1],
        ],
        9 => &[
            &[0, 0, 6, 0, 1, 0, 0],
            &[0, 1, 3, 3, 0, 0, 0],
            &[0, 3, 3, 1, 1, 0, 0],
            &[0, 4, 0, 4, 0, 0, 0],
            &[0, 6, 0, 2, 1, 0, 0],
            &[0, 7, 2, 0, 0, 1, 0],
            &[0, 8, 0, 0, 2, 0, 0],
            &[1, 1, 4, 1, 1, 0, 0],
            &[1, 2, 1, 4, 0, 0, 0],
            &[1, 4, 1, 2, 1, 0, 0],
            &[1, 5, 3, 0, 0, 1, 0],
            &[1, 6, 1, 0, 2, 0, 0],
            &[1, 8, 0, 1, 0, 1, 0],
            &[2, 0, 2, 4, 0, 0, 0],
            &[2, 2, 2, 2, 1, 0, 0],
            &[2, 3, 4, 0, 0, 1, 0],
            &[2, 4, 2, 0, 2, 0, 0],
            &[2, 6, 1, 1, 0, 1, 0],
            &[3, 0, 3, 2, 1, 0, 0],
            &[3, 1, 5, 0, 0, 1, 0],
            &[3, 2, 3, 0, 2, 0, 0],
            &[3, 3, 0, 3, 1, 0, 0],
            &[3, 4, 2, 1, 0, 1, 0],
            &[3, 5, 0, 1, 2, 0, 0],
            &[3, 10, 0, 0, 0, 0, 1],
            &[4, 0, 4, 0, 2, 0, 0],
            &[4, 1, 1, 3, 1, 0, 0],
            &[4, 2, 3, 1, 0, 1, 0],
            &[4, 3, 1, 1, 2, 0, 0],
            &[4, 5, 0, 2, 0, 1, 0],
            &[4, 7, 0, 0, 1, 1, 0],
            &[4, 8, 1, 0, 0, 0, 1],
            &[5, 0, 4, 1, 0, 1, 0],
            &[5, 1, 2, 1, 2, 0, 0],
            &[5, 3, 1, 2, 0, 1, 0],
            &[5, 5, 1, 0, 1, 1, 0],
            &[5, 6, 2, 0, 0, 0, 1],
        ],
        _ => return None,
    };
    Some(
        raw.iter()
            .map(|r| ParamCombo::new(ell, r[0], r[1..].to_vec()))
            .collect(),
    )
}

impl PrintedComboCheck {
    pub fn run(ell: usize) -> Option<Self> {
        let printed = printed_combos(ell)?;
        let solved = solve_combos(ell);
        let violating = printed
            .iter()
            .filter(|c| !c.satisfies_equations())
            .map(ToString::to_string)
            .collect();
        let not_printed = solved
            .iter()
            .filter(|c| !printed.contains(c))
            .map(ToString::to_string)
            .collect();
        let mut a = printed.clone();
        a.sort();
        let mut constants: Vec<usize> = printed
            .iter()
            .map(|c| c.degree_square_sum().saturating_sub(2 * c.t_prime))
            .collect();
        constants.sort_unstable();
        constants.dedup();
        Some(PrintedComboCheck {
            ell,
            printed: printed.len(),
            solved: solved.len(),
            violating,
            not_printed,
            set_equal: a == solved,
            expected_square_constant: 4 * ell - 6,
            printed_square_constants: constants,
        })
    }
}

fn entry(parts: &[(usize, Part)]) -> TableEntry {
    TableEntry {
        parts: parts.to_vec(),
    }
}

fn row(ell: usize, printed: &str, combo: &[usize], entries: Vec<TableEntry>) -> TableRow {
    TableRow {
        printed: printed.to_string(),
        combo: ParamCombo::new(ell, combo[0], combo[1..].to_vec()),
        note: None,
        entries,
    }
}

/// Rows of table 2 (`ℓ = 7`), 3 (`ℓ = 8`) or 4 (`ℓ = 9`) as printed.
pub fn table_rows(which: u8) -> Result<(usize, Vec<TableRow>), CandidateError> {
    use Part::{Cycle as C, Figure as F, Path as P, Spider as T, Star as K, TrianglePendant as Ga};
    let e = entry;
    match which {
        2 => Ok((
            7,
            vec![
                row(
                    7,
                    "{0,2,5,0,0,0}",
                    &[0, 2, 5, 0, 0, 0],
                    vec![e(&[(1, C(5)), (1, P(2))]), e(&[(1, C(4)), (1, P(3))])],
                ),
                row(
                    7,
                    "{0,5,2,1,0,0}",
                    &[0, 5, 2, 1, 0, 0],
                    vec![
                        e(&[(1, T(1, 1, 3)), (1, P(2))]),
                        e(&[(1, T(1, 2, 2)), (1, P(2))]),
                        e(&[(1, T(1, 1, 2)), (1, P(3))]),
                        e(&[(1, T(1, 1, 1)), (1, P(4))]),
                    ],
                ),
                row(
                    7,
                    "{1,3,3,1,0,0}",
                    &[1, 3, 3, 1, 0, 0],
                    vec![
                        e(&[(1, K(3)), (1, C(3))]),
                        e(&[(1, Ga), (1, P(3))]),
                        e(&[(1, F('h')), (1, P(2))]),
                    ],
                ),
            ],
        )),
        3 => Ok((
            8,
            vec![
                row(
                    8,
                    "{0,2,6,0,0,0}",
                    &[0, 2, 6, 0, 0, 0],
                    vec![
                        e(&[(1, C(6)), (1, P(2))]),
                        e(&[(1, C(5)), (1, P(3))]),
                        e(&[(1, C(4)), (1, P(4))]),
                    ],
                ),
                row(
                    8,
                    "{0,5,3,1,0,0}",
                    &[0, 5, 3, 1, 0, 0],
                    vec![
                        e(&[(1, T(1, 1, 4)), (1, P(2))]),
                        e(&[(1, T(1, 2, 3)), (1, P(2))]),
                        e(&[(1, T(2, 2, 2)), (1, P(2))]),
                        e(&[(1, T(1, 1, 3)), (1, P(3))]),
                        e(&[(1, T(1, 2, 2)), (1, P(3))]),
                        e(&[(1, T(1, 1, 2)), (1, P(4))]),
                        e(&[(1, T(1, 1, 1)), (1, P(5))]),
                    ],
                ),
                row(
                    8,
                    "{0,8,0,2,0,0}",
                    &[0, 8, 0, 2, 0, 0],
                    vec![e(&[(1, F('b')), (2, P(2))]), e(&[(2, K(3)), (1, P(2))])],
                ),
                row(
                    8,
                    "{0,10,0,0,1,0}",
                    &[0, 10, 0, 0, 1, 0],
                    vec![e(&[(1, K(4)), (3, P(2))])],
                ),
                row(
                    8,
                    "{1,0,7,0,0,0}",
                    &[1, 0, 7, 0, 0, 0],
                    vec![e(&[(1, C(3)), (1, C(4))])],
                ),
                row(
                    8,
                    "{1,3,4,1,0,0}",
                    &[1, 3, 4, 1, 0, 0],
                    vec![e(&[(1, Ga), (1, P(4))]), e(&[(1, T(1, 1, 2)), (1, C(3))])],
                ),
                row(
                    8,
                    "{1,6,1,2,0,0}",
                    &[1, 6, 1, 2, 0, 0],
                    vec![e(&[(1, F('c')), (2, P(2))])],
                ),
                row(
                    8,
                    "{2,1,5,1,0,0}",
                    &[2, 1, 5, 1, 0, 0],
                    vec![e(&[(1, Ga), (1, C(3))])],
                ),
                row(
                    8,
                    "{2,4,2,2,0,0}",
                    &[2, 4, 2, 2, 0, 0],
                    vec![e(&[(1, F('d')), (2, P(2))])],
                ),
            ],
        )),
        4 => {
            let mut rows = vec![
                row(
                    9,
                    "{0,2,7,0,0,0,0}",
                    &[0, 2, 7, 0, 0, 0, 0],
                    vec![
                        e(&[(1, C(7)), (1, P(2))]),
                        e(&[(1, C(6)), (1, P(3))]),
                        e(&[(1, C(5)), (1, P(4))]),
                        e(&[(1, C(4)), (1, P(5))]),
                    ],
                ),
                row(
                    9,
                    "{0,5,4,1,0,0,0}",
                    &[0, 5, 4, 1, 0, 0, 0],
                    vec![
                        e(&[(1, T(1, 1, 5)), (1, P(2))]),
                        e(&[(1, T(1, 2, 4)), (1, P(2))]),
                        e(&[(1, T(1, 3, 3)), (1, P(2))]),
                        e(&[(1, T(2, 2, 3)), (1, P(2))]),
                        e(&[(1, T(1, 1, 4)), (1, P(3))]),
                        e(&[(1, T(1, 2, 3)), (1, P(3))]),
                        e(&[(1, T(2, 2, 2)), (1, P(3))]),
                        e(&[(1, T(1, 1, 3)), (1, P(4))]),
                        e(&[(1, T(1, 2, 2)), (1, P(4))]),
                        e(&[(1, T(1, 1, 2)), (1, P(5))]),
                        e(&[(1, T(1, 1, 6)), (1, P(6))]),
                    ],
                ),
                row(
                    9,
                    "{0,8,1,2,0,0,0}",
                    &[0, 8, 1, 2, 0, 0, 0],
                    vec![
                        e(&[(1, F('e')), (2, P(2))]),
                        e(&[(1, F('f')), (2, P(2))]),
                        e(&[(1, F('b')), (1, P(2)), (1, P(3))]),
                        e(&[(1, T(1, 1, 2)), (1, K(3)), (1, P(2))]),
                        e(&[(2, K(3)), (1, P(3))]),
                    ],
                ),
                row(
                    9,
                    "{0,10,1,0,1,0,0}",
                    &[0, 10, 1, 0, 1, 0, 0],
                    vec![
                        e(&[(1, F('g')), (3, P(2))]),
                        e(&[(1, K(4)), (2, P(2)), (1, P(3))]),
                    ],
                ),
                row(
                    9,
                    "{1,0,8,0,0,0,0}",
                    &[1, 0, 8, 0, 0, 0, 0],
                    vec![e(&[(1, C(3)), (1, C(5))])],
                ),
                row(
                    9,
                    "{1,3,5,1,0,0,0}",
                    &[1, 3, 5, 1, 0, 0, 0],
                    vec![e(&[(1, F('h')), (1, P(4))]), e(&[(1, Ga), (1, P(5))])],
                ),
                row(
                    9,
                    "{1,6,2,2,0,0,0}",
                    &[1, 6, 2, 2, 0, 0, 0],
                    vec![
                        e(&[(1, F('i')), (2, P(2))]),
                        e(&[(1, F('c')), (1, P(2)), (1, P(3))]),
                    ],
                ),
                row(
                    9,
                    "{1,8,2,0,1,0,0,0}",
                    &[1, 8, 2, 0, 1, 0, 0],
                    vec![e(&[(1, F('j')), (3, P(2))])],
                ),
                row(
                    9,
                    "{2,1,6,1,0,0,0}",
                    &[2, 1, 6, 1, 0, 0, 0],
                    vec![e(&[(1, F('h')), (1, C(3))])],
                ),
                row(
                    9,
                    "{2,4,3,2,0,0,0}",
                    &[2, 4, 3, 2, 0, 0, 0],
                    vec![e(&[(1, F('d')), (1, P(2)), (1, P(3))])],
                ),
            ];
            rows[7].note = Some(
                "printed with eight entries; read as t' = 1 and x = (8,2,0,1,0,0)".to_string(),
            );
            Ok((9, rows))
        }
        other => Err(CandidateError::UnknownTable(other)),
    }
}

fn component_codes(g: &Graph) -> Vec<CanonicalCode> {
    let mut out: Vec<CanonicalCode> = g
        .components()
        .into_iter()
        .filter(|&c| c.count_ones() > 1)
        .map(|c| canonical_form(&g.induced_subgraph(c)).expect("small"))
        .collect();
    out.sort();
    out
}

/// Removes `sub` from the sorted multiset `all`; `None` if not contained.
fn multiset_minus(all: &[CanonicalCode], sub: &[CanonicalCode]) -> Option<Vec<CanonicalCode>> {
    let mut rest = all.to_vec();
    for s in sub {
        let i = rest.iter().position(|r| r == s)?;
        rest.remove(i);
    }
    Some(rest)
}

/// Part variants differing in exactly one numeric parameter.
fn part_variants(p: Part, max: usize) -> Vec<Part> {
    let mut out = Vec::new();
    for v in 1..=max {
        match p {
            Part::Cycle(k) if v != k && v >= 3 => out.push(Part::Cycle(v)),
            Part::Path(k) if v != k && v >= 2 => out.push(Part::Path(v)),
            Part::Star(k) if v != k => out.push(Part::Star(v)),
            Part::Spider(b, c, d) => {
                for q in [(v, c, d), (b, v, d), (b, c, v)] {
                    if q != (b, c, d) {
                        out.push(Part::Spider(q.0, q.1, q.2));
                    }
                }
            }
            _ => {}
        }
    }
    out
}

/// Entries obtained from `e` by changing one parameter that are realized
/// in the row, as `(label, graph6)`.
fn single_edit_readings(
    e: &TableEntry,
    ell: usize,
    graphs: &[Graph],
    comps: &[Vec<CanonicalCode>],
) -> Vec<(String, String)> {
    let mut out = Vec::new();
    for (i, &(k, p)) in e.parts.iter().enumerate() {
        for q in part_variants(p, ell) {
            let mut alt = e.clone();
            alt.parts[i] = (k, q);
            if alt.named_edges() != ell - 1 {
                continue;
            }
            let named = alt.named_components();
            if let Some(j) = comps.iter().position(|c| *c == named) {
                let item = (alt.label(), certificate(&graphs[j]));
                if !out.contains(&item) {
                    out.push(item);
                }
            }
        }
    }
    out
}

fn certificate(g: &Graph) -> String {
    graph6_encode(g)
}

/// Reproduces a candidate table from the enumeration.
pub fn reproduce_table(which: u8) -> Result<TableReport, CandidateError> {
    let (ell, rows) = table_rows(which)?;
    let all = enumerate_graphs(ell - 1)?;
    let path =
        canonical_form(&make_family(FamilySpec::Path(ell)).expect("ell >= 1")).expect("small");
    let realize = |combo: &ParamCombo| -> Vec<Graph> {
        all.iter()
            .filter(|g| combo.matches(g))
            .filter(|g| canonical_form(g).expect("small") != path)
            .cloned()
            .collect()
    };
    // letter -> list of component sets, one per appearance
    let mut figure_options: BTreeMap<char, Vec<Vec<CanonicalCode>>> = BTreeMap::new();
    let mut row_reports = Vec::new();
    for r in &rows {
        if !r.combo.satisfies_equations() {
            return Err(CandidateError::NotASolution(r.combo.to_string()));
        }
        let graphs = realize(&r.combo);
        let comps: Vec<Vec<CanonicalCode>> = graphs.iter().map(component_codes).collect();
        let mut claimed = vec![false; graphs.len()];
        let mut entries = Vec::new();
        for e in &r.entries {
            let named = e.named_components();
            let named_edges = e.named_edges();
            let status = match e.figure() {
                None if named_edges != ell - 1 => EntryStatus::Inconsistent {
                    reason: format!("has {named_edges} edges, the row needs {}", ell - 1),
                    readings: single_edit_readings(e, ell, &graphs, &comps),
                },
                None => {
                    let hit = comps.iter().position(|c| *c == named);
                    match hit {
                        Some(i) => {
                            claimed[i] = true;
                            EntryStatus::Matched {
                                graph6: certificate(&graphs[i]),
                            }
                        }
                        None => EntryStatus::Missing,
                    }
                }
                Some(_) if named_edges >= ell - 1 => EntryStatus::Inconsistent {
                    reason: format!("named parts already use {named_edges} edges"),
                    readings: Vec::new(),
                },
                Some(letter) => {
                    let mut cands = Vec::new();
                    let mut leftovers: Vec<CanonicalCode> = Vec::new();
                    for (i, c) in comps.iter().enumerate() {
                        if let Some(rest) = multiset_minus(c, &named) {
                            if rest.len() == 1 {
                                claimed[i] = true;
                                cands.push(certificate(&graphs[i]));
                                if !leftovers.contains(&rest[0]) {
                                    leftovers.push(rest[0].clone());
                                }
                            }
                        }
                    }
                    leftovers.sort();
                    if cands.is_empty() {
                        EntryStatus::Missing
                    } else {
                        figure_options
                            .entry(letter)
                            .or_default()
                            .push(leftovers.clone());
                        EntryStatus::Figure {
                            letter,
                            candidates: cands,
                            components: leftovers.iter().map(|c| certificate(c.graph())).collect(),
                        }
                    }
                }
            };
            entries.push(EntryReport {
                label: e.label(),
                status,
            });
        }
        row_reports.push(RowReport {
            printed: r.printed.clone(),
            combo: r.combo.to_string(),
            note: r.note.clone(),
            realized: graphs.iter().map(certificate).collect(),
            entries,
            unlisted: graphs
                .iter()
                .zip(&claimed)
                .filter(|(_, &c)| !c)
                .map(|(g, _)| certificate(g))
                .collect(),
        });
    }
    let listed: Vec<&ParamCombo> = rows.iter().map(|r| &r.combo).collect();
    let unlisted_graphic = solve_combos(ell)
        .into_iter()
        .filter(|c| !listed.contains(&c))
        .filter_map(|c| {
            let k = realize(&c).len();
            (k > 0).then(|| (c.to_string(), k))
        })
        .collect();
    let figures = figure_certificates_from(&figure_options);
    Ok(TableReport {
        table: which,
        ell,
        rows: row_reports,
        unlisted_graphic,
        figures,
    })
}

fn figure_certificates_from(
    options: &BTreeMap<char, Vec<Vec<CanonicalCode>>>,
) -> Vec<FigureCertificate> {
    options
        .iter()
        .map(|(&letter, sets)| {
            let mut common = sets[0].clone();
            for s in &sets[1..] {
                common.retain(|c| s.contains(c));
            }
            FigureCertificate {
                letter,
                certificates: common.iter().map(|c| certificate(c.graph())).collect(),
                appearances: sets.len(),
                degrees: common
                    .iter()
                    .map(|c| {
                        let mut d = c.graph().degrees();
                        d.sort_unstable();
                        d
                    })
                    .collect(),
                triangles: common.iter().map(|c| c.graph().triangle_count()).collect(),
            }
        })
        .collect()
}

/// Certificates for every drawn graph, intersected across tables 2 to 4.
pub fn figure_certificates() -> Result<Vec<FigureCertificate>, CandidateError> {
    let mut merged: BTreeMap<char, Vec<Vec<CanonicalCode>>> = BTreeMap::new();
    for which in 2..=4 {
        let report = reproduce_table(which)?;
        for row in report.rows {
            for e in row.entries {
                if let EntryStatus::Figure {
                    letter, components, ..
                } = e.status
                {
                    let codes = components
                        .iter()
                        .map(|s| {
                            let g = crate::graph::graph6_decode(s.as_bytes()).expect("own output");
                            canonical_form(&g).expect("small")
                        })
                        .collect();
                    merged.entry(letter).or_default().push(codes);
                }
            }
        }
    }
    Ok(figure_certificates_from(&merged))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn printed_lists_for_seven_and_eight_match() {
        for ell in [7, 8] {
            let check = PrintedComboCheck::run(ell).unwrap();
            assert!(check.set_equal, "{check:?}");
            assert!(check.violating.is_empty());
        }
    }

    #[test]
    fn printed_list_for_nine_is_inconsistent() {
        let check = PrintedComboCheck::run(9).unwrap();
        assert!(!check.set_equal);
        assert!(check.violating.contains(&"{0,0,6,0,1,0,0}".to_string()));
        // every printed entry uses 40 in place of 4ℓ - 6 = 30
        assert_eq!(check.expected_square_constant, 30);
        assert_eq!(check.printed_square_constants, vec![40]);
    }

    #[test]
    fn table_two_is_reproduced() {
        let report = reproduce_table(2).unwrap();
        assert!(report.reproduced(), "{}", report.to_text());
        let sizes: Vec<usize> = report.rows.iter().map(|r| r.realized.len()).collect();
        assert_eq!(sizes, vec![2, 4, 3]);
    }

    #[test]
    fn misprinted_spider_is_read_by_one_edit() {
        let report = reproduce_table(4).unwrap();
        let entry = report.rows[1]
            .entries
            .iter()
            .find(|e| e.label == "T_{1,1,6}∪P_6")
            .unwrap();
        match &entry.status {
            EntryStatus::Inconsistent { readings, .. } => {
                let labels: Vec<&str> = readings.iter().map(|r| r.0.as_str()).collect();
                assert_eq!(labels, vec!["T_{1,1,1}∪P_6"]);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn labels() {
        let e = entry(&[(2, Part::Star(3)), (1, Part::Path(2))]);
        assert_eq!(e.label(), "2K_{1,3}∪P_2");
        assert_eq!(entry(&[(1, Part::Figure('b'))]).label(), "G_b");
    }
}
