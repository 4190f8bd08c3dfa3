//! Command-line front end for the cospec toolkit.
//!
//! [`run`] parses arguments, dispatches to the library and writes the
//! report to `out` (notes and errors to `err`). Exit codes: 0 when the
//! verdict is as expected (DS confirmed, graphs cospectral, table
//! reproduced, checks passed), 1 when a counterexample or mismatch is
//! found, 2 on usage errors.

use std::fmt::Write as _;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use cospec::candidates::{
    realize_all, realize_combo, reproduce_table, solve_combos, spider_table_rows,
    spider_union_census, CandidateSet, EntryStatus, ParamCombo, PrintedComboCheck, TableReport,
    SPIDER_COLUMNS,
};
use cospec::census::{census, SubgraphCensus};
use cospec::graph::{basic_census, graph6_decode, graph6_encode, Graph};
use cospec::linalg::{char_poly, cospectral};
use cospec::pipeline::{check_eigen_structure, exhaustive_search, verify_ds, NRange, MAX_N};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
    Graph6,
}

#[derive(Debug, Parser)]
#[command(
    name = "cospec",
    about = "Exact spectral verification for K_n minus a path"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value = "json", global = true)]
    pub format: Format,
    /// Worker threads for parallel stages.
    #[arg(long, global = true, value_parser = clap::value_parser!(u16).range(1..))]
    pub workers: Option<u16>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run the elimination cascade over every candidate.
    VerifyDs {
        #[arg(long)]
        ell: usize,
        /// Defaults to ell.
        #[arg(long)]
        n_min: Option<usize>,
        /// Defaults to ell + 12.
        #[arg(long)]
        n_max: Option<usize>,
    },
    /// Solutions of the degree/triangle equations.
    Combos {
        #[arg(long)]
        ell: usize,
    },
    /// Candidate graphs for every combination, or for one.
    Candidates {
        #[arg(long)]
        ell: usize,
        /// A combination such as "{0,2,5,0,0,0}".
        #[arg(long)]
        combo: Option<String>,
    },
    /// Subgraph census of a graph.
    Census { graph6: String },
    /// Characteristic polynomial of a graph.
    Charpoly { graph6: String },
    /// Whether two graphs have the same characteristic polynomial.
    Cospectral { first: String, second: String },
    /// All graphs on n vertices cospectral with the target.
    Exhaustive {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        target: String,
    },
    /// Spectrum checks for K_n minus P_ell.
    EigenStructure {
        #[arg(long)]
        ell: usize,
        #[arg(long)]
        n: usize,
    },
    /// Reproduce a census or candidate table.
    Tables {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=4))]
        which: u8,
    },
}

/// Report text and exit code of a finished command.
struct Outcome {
    text: String,
    notes: String,
    code: i32,
}

impl Outcome {
    fn new(text: String, ok: bool) -> Self {
        Outcome {
            text,
            notes: String::new(),
            code: if ok { EXIT_OK } else { EXIT_MISMATCH },
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let result = match cli.workers {
        Some(w) => match rayon::ThreadPoolBuilder::new()
            .num_threads(usize::from(w))
            .build()
        {
            Ok(pool) => pool.install(|| dispatch(&cli)),
            Err(e) => Err(format!("cannot start worker pool: {e}")),
        },
        None => dispatch(&cli),
    };
    match result {
        Ok(o) => {
            let _ = out.write_all(o.text.as_bytes());
            let _ = err.write_all(o.notes.as_bytes());
            o.code
        }
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}

fn dispatch(cli: &Cli) -> Result<Outcome, String> {
    let f = cli.format;
    match &cli.command {
        Command::VerifyDs { ell, n_min, n_max } => {
            let range = NRange::new(
                n_min.unwrap_or(*ell),
                n_max.unwrap_or((ell + 12).min(MAX_N)),
            )
            .map_err(|e| e.to_string())?;
            let r = verify_ds(*ell, range).map_err(|e| e.to_string())?;
            let text = match f {
                Format::Json => r.to_json() + "\n",
                Format::Table => r.to_text(),
                Format::Graph6 => r
                    .outcomes()
                    .map(|o| format!("{} {}\n", graph6_encode(&o.candidate), o.eliminated_by))
                    .collect(),
            };
            Ok(Outcome::new(text, r.confirmed()))
        }
        Command::Combos { ell } => combos(*ell, f),
        Command::Candidates { ell, combo } => candidates(*ell, combo.as_deref(), f),
        Command::Census { graph6 } => {
            let g = parse_graph(graph6)?;
            let c = census(&g);
            let text = match f {
                Format::Table => census_table(&c),
                _ => json_line(&json!({ "graph6": graph6_encode(&g), "census": c })),
            };
            Ok(Outcome::new(text, true))
        }
        Command::Charpoly { graph6 } => {
            let g = parse_graph(graph6)?;
            let cp = char_poly(&g);
            let text = match f {
                Format::Table => format!("{cp}\n"),
                _ => json_line(&json!({ "graph6": graph6_encode(&g), "coefficients": cp })),
            };
            Ok(Outcome::new(text, true))
        }
        Command::Cospectral { first, second } => {
            let (a, b) = (parse_graph(first)?, parse_graph(second)?);
            let same = cospectral(&a, &b);
            let text = match f {
                Format::Table => format!("cospectral: {same}\n"),
                _ => json_line(&json!({ "cospectral": same })),
            };
            Ok(Outcome::new(text, same))
        }
        Command::Exhaustive { n, target } => {
            let g = parse_graph(target)?;
            let mates = exhaustive_search(*n, &g).map_err(|e| e.to_string())?;
            let codes: Vec<String> = mates.iter().map(graph6_encode).collect();
            let text = match f {
                Format::Json => json_line(&json!({
                    "n": n,
                    "target": graph6_encode(&g),
                    "mates": codes,
                })),
                _ => codes.iter().map(|c| c.clone() + "\n").collect(),
            };
            Ok(Outcome::new(text, mates.is_empty()))
        }
        Command::EigenStructure { ell, n } => {
            let r = check_eigen_structure(*ell, *n).map_err(|e| e.to_string())?;
            let text = match f {
                Format::Table => eigen_table(&r),
                _ => serde_json::to_string_pretty(&r).expect("plain data") + "\n",
            };
            Ok(Outcome::new(text, r.passed()))
        }
        Command::Tables { which } => {
            if *which == 1 {
                census_table_rows(f)
            } else {
                let r = reproduce_table(*which).map_err(|e| e.to_string())?;
                let ok = table_consistent(&r);
                let text = match f {
                    Format::Table => r.to_text(),
                    Format::Graph6 => r
                        .figures
                        .iter()
                        .flat_map(|fc| {
                            fc.certificates
                                .iter()
                                .map(move |c| format!("{c} G_{}\n", fc.letter))
                        })
                        .collect(),
                    Format::Json => serde_json::to_string_pretty(&r).expect("plain data") + "\n",
                };
                Ok(Outcome::new(text, ok))
            }
        }
    }
}

/// Every printed entry is realized, has a figure certificate, or is a
/// misprint with exactly one realized single-parameter reading.
pub fn table_consistent(r: &TableReport) -> bool {
    r.rows.iter().all(|row| {
        row.entries.iter().all(|e| match &e.status {
            EntryStatus::Matched { .. } | EntryStatus::Figure { .. } => true,
            EntryStatus::Inconsistent { readings, .. } => readings.len() == 1,
            EntryStatus::Missing => false,
        })
    }) && r.unlisted_graphic.is_empty()
}

fn parse_graph(s: &str) -> Result<Graph, String> {
    graph6_decode(s.trim().as_bytes()).map_err(|e| e.to_string())
}

fn json_line(v: &serde_json::Value) -> String {
    serde_json::to_string_pretty(v).expect("plain data") + "\n"
}

fn combos(ell: usize, f: Format) -> Result<Outcome, String> {
    if ell < 2 {
        return Err(format!("ell = {ell} must be at least 2"));
    }
    let solved = solve_combos(ell);
    let check = PrintedComboCheck::run(ell);
    let text = match f {
        Format::Json => json_line(&json!({
            "ell": ell,
            "combos": solved.iter().map(ParamCombo::braces).collect::<Vec<_>>(),
            "printed_list_check": check,
        })),
        _ => solved.iter().map(|c| c.braces() + "\n").collect(),
    };
    let mut out = Outcome::new(text, true);
    if f != Format::Json {
        if let Some(c) = check.filter(|c| !c.set_equal) {
            let _ = writeln!(
                out.notes,
                "note: the printed list for ell = {ell} has {} entries, {} violating the \
                 square-sum equation (printed constants {:?}, expected {}); {} solutions are not printed",
                c.printed,
                c.violating.len(),
                c.printed_square_constants,
                c.expected_square_constant,
                c.not_printed.len()
            );
        }
    }
    Ok(out)
}

/// Parses `{t', x_1, ..., x_k}`.
fn parse_combo(ell: usize, s: &str) -> Result<ParamCombo, String> {
    let inner = s.trim().trim_start_matches('{').trim_end_matches('}');
    let nums: Vec<usize> = inner
        .split(',')
        .map(|p| p.trim().parse::<usize>())
        .collect::<Result<_, _>>()
        .map_err(|e| format!("malformed combination {s:?}: {e}"))?;
    match nums.split_first() {
        Some((&t, x)) if !x.is_empty() => Ok(ParamCombo::new(ell, t, x.to_vec())),
        _ => Err(format!(
            "combination {s:?} needs t' and at least one multiplicity"
        )),
    }
}

fn candidates(ell: usize, combo: Option<&str>, f: Format) -> Result<Outcome, String> {
    if ell < 2 {
        return Err(format!("ell = {ell} must be at least 2"));
    }
    let sets: Vec<CandidateSet> = match combo {
        Some(s) => vec![realize_combo(&parse_combo(ell, s)?).map_err(|e| e.to_string())?],
        None => realize_all(ell).map_err(|e| e.to_string())?,
    };
    let text = match f {
        Format::Graph6 => sets.iter().map(CandidateSet::graph6_lines).collect(),
        Format::Table => {
            let mut s = String::new();
            for set in sets.iter().filter(|s| s.is_graphic()) {
                let _ = writeln!(s, "{} ({} graphs)", set.combo, set.graphs.len());
                for g in &set.graphs {
                    let b = basic_census(g);
                    let _ = writeln!(
                        s,
                        "  {:<14} degrees {:?} triangles {}",
                        graph6_encode(g),
                        b.degrees,
                        b.triangles
                    );
                }
            }
            s
        }
        Format::Json => json_line(&json!(sets
            .iter()
            .map(|set| json!({
                "combo": set.combo.braces(),
                "t_prime": set.combo.t_prime,
                "x": set.combo.x,
                "graphs": set.graphs.iter().map(graph6_encode).collect::<Vec<_>>(),
            }))
            .collect::<Vec<_>>())),
    };
    Ok(Outcome::new(text, true))
}

fn census_table(c: &SubgraphCensus) -> String {
    let cols = [
        ("m", c.m),
        ("m1", c.m1),
        ("m2", c.m2),
        ("m3", c.m3),
        ("m4", c.m4),
        ("s1", c.s1),
        ("s2", c.s2),
        ("s3", c.s3),
        ("s4", c.s4),
        ("s5", c.s5),
        ("s6", c.s6),
    ];
    cols.iter().map(|(k, v)| format!("{k:<3} {v}\n")).collect()
}

fn eigen_table(r: &cospec::pipeline::EigenReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "K_{} - P_{}", r.n, r.ell);
    let _ = writeln!(
        s,
        "multiplicity of -1: {} (closed form {})",
        r.minus_one_multiplicity, r.expected_minus_one
    );
    let _ = writeln!(s, "roots <= -3: {}", r.roots_at_most_minus_three);
    let _ = writeln!(
        s,
        "other eigenvalues simple: {}",
        r.squarefree_after_minus_one
    );
    for c in &r.path_values {
        let _ = writeln!(
            s,
            "i = {:<2} value {:+.12} error {:.2e}",
            c.i, c.value, c.error
        );
    }
    let _ = writeln!(
        s,
        "-1 eigenvectors ({}): {} vectors, exact {}, rank {}",
        r.eigenvectors.pattern, r.eigenvectors.count, r.eigenvectors.exact, r.eigenvectors.rank
    );
    for fl in &r.failures {
        let _ = writeln!(s, "FAILED: {fl}");
    }
    s
}

/// Table 1: each row's symbolic entries against the census at the
/// minimal parameters and at every admissible instance with `ℓ = 9`.
fn census_table_rows(f: Format) -> Result<Outcome, String> {
    let mut rows = Vec::new();
    let mut ok = true;
    for row in spider_table_rows() {
        let (a, b, c, d) = row.minimal();
        let mut instances = vec![(a, b, c, d)];
        instances.extend(row.instances(9).into_iter().filter(|i| *i != (a, b, c, d)));
        let mut checks = Vec::new();
        for (a, b, c, d) in instances {
            let (cen, _) = spider_union_census(a, b, c, d).map_err(|e| e.to_string())?;
            let ell = a + b + c + d;
            let mismatches = row.mismatches(&cen, ell);
            ok &= mismatches.is_empty();
            checks.push(json!({
                "a": a, "b": b, "c": c, "d": d, "ell": ell,
                "mismatches": mismatches,
            }));
        }
        let entries: Vec<String> = row
            .entries
            .iter()
            .map(|e| e.as_ref().map_or_else(String::new, ToString::to_string))
            .collect();
        rows.push((row.label(), entries, checks));
    }
    let text = match f {
        Format::Table => {
            let mut s = format!("{:<28}", "(a,b,c,d)");
            for col in SPIDER_COLUMNS {
                let _ = write!(s, " {col:<12}");
            }
            s.push('\n');
            for (label, entries, checks) in &rows {
                let _ = write!(s, "{label:<28}");
                for e in entries {
                    let _ = write!(s, " {e:<12}");
                }
                let bad = checks
                    .iter()
                    .filter(|c| !c["mismatches"].as_array().is_some_and(Vec::is_empty))
                    .count();
                let _ = writeln!(s, " [{} instances, {bad} mismatched]", checks.len());
            }
            s
        }
        _ => json_line(&json!(rows
            .iter()
            .map(|(label, entries, checks)| json!({
                "row": label,
                "entries": entries,
                "checks": checks,
            }))
            .collect::<Vec<_>>())),
    };
    Ok(Outcome::new(text, ok))
}
