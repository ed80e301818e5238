//! Command-line front end.
//!
//! Exit codes: verdict commands exit 0 (equivalent), 1 (not equivalent) or
//! 2 (unknown / inconclusive); 64 for usage errors, 65 for malformed input,
//! 66 for unreadable files and 70 for internal failures.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde_json::json;
use thiserror::Error;

use strongeq::deciders::{decide, min_equivalent_subgraph, np_reduce_kcolor, PropertySelector, Verdict};
use strongeq::graph::{parse_graph, Graph};
use strongeq::oracle::{crosscheck, refute_bounded, InstanceFamily, OracleBudget, OracleOutcome};
use strongeq::properties::PropertyError;
use strongeq::setcore::{
    bounded_strengthen, classify_threshold_form, equiv_from_property, FiniteUniverse, SubsetProperty, ThresholdForm,
};
use strongeq::witnesses::witness_for;
use strongeq::Error;

pub const EXIT_USAGE: u8 = 64;
pub const EXIT_DATA: u8 = 65;
pub const EXIT_NO_INPUT: u8 = 66;
pub const EXIT_SOFTWARE: u8 = 70;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {message}")]
    Malformed { path: PathBuf, message: String },
    #[error("{path}: {source}")]
    Unreadable { path: PathBuf, source: io::Error },
    #[error(transparent)]
    Core(#[from] Error),
    #[error("output failed: {0}")]
    Output(#[from] io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Malformed { .. } => EXIT_DATA,
            CliError::Unreadable { .. } => EXIT_NO_INPUT,
            CliError::Core(Error::InvalidK { .. } | Error::Property(PropertyError::InvalidK)) => EXIT_USAGE,
            CliError::Core(Error::Graph(_) | Error::EmptyInput | Error::TooManyVertices(_) | Error::Set(_)) => {
                EXIT_DATA
            }
            CliError::Core(Error::Property(_)) => EXIT_DATA,
            CliError::Core(Error::BudgetExceeded { .. }) => 2,
            CliError::Core(_) | CliError::Output(_) => EXIT_SOFTWARE,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "strongeq", version, about = "Strong equivalence of finite graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide whether two graphs are strongly equivalent
    Decide(PairArgs),
    /// Decide and print a separating extension
    Witness(PairArgs),
    /// Search for a separating extension by brute force
    Oracle {
        #[command(flatten)]
        pair: PairArgs,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Build the coloring reduction instance for a graph
    Reduce {
        #[command(subcommand)]
        kind: ReduceKind,
    },
    /// Compare a decider with the oracle over a family of graph pairs
    Crosscheck {
        #[arg(long)]
        property: String,
        /// graphs on this many labeled vertices (a, b, c, ...)
        #[arg(long, default_value_t = 4)]
        vertices: usize,
        /// sample this many random pairs instead of taking all of them
        #[arg(long)]
        sample: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        budget: BudgetArgs,
        #[arg(long)]
        json: bool,
    },
    /// Smallest subgraph strongly equivalent under k-connectivity
    MinSubgraph {
        #[arg(long)]
        k: usize,
        graph: PathBuf,
        /// edge subsets to try before giving up
        #[arg(long, default_value_t = 1 << 24)]
        budget: u64,
        #[arg(long)]
        json: bool,
    },
    /// Classify a property given as an explicit family of subsets
    Setcheck {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Subcommand)]
pub enum ReduceKind {
    /// k-colorability of G' to strong equivalence of a pair
    Kcolor {
        #[arg(long)]
        k: usize,
        graph: PathBuf,
    },
}

#[derive(Debug, Args)]
pub struct PairArgs {
    /// ham | planar | subgraph:<file> | kcolor:<k> | edge2color | kconn:<k> | kconn-psi:<k>
    #[arg(long)]
    pub property: String,
    pub g: PathBuf,
    pub h: PathBuf,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct BudgetArgs {
    /// fresh vertices added to the pool (default depends on the property)
    #[arg(long)]
    pub fresh: Option<usize>,
    /// largest extension tried, in edges
    #[arg(long)]
    pub max_edges: Option<usize>,
    /// candidate extensions evaluated before giving up
    #[arg(long)]
    pub budget: Option<u64>,
}

impl BudgetArgs {
    fn resolve(&self, prop: &PropertySelector) -> OracleBudget {
        let mut b = OracleBudget::for_property(prop);
        if let Some(f) = self.fresh {
            b.fresh_count = f;
        }
        if let Some(m) = self.max_edges {
            b.max_edges = m;
        }
        if let Some(c) = self.budget {
            b.max_candidates = c;
        }
        b
    }
}

fn read_file(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Unreadable {
        path: path.to_path_buf(),
        source,
    })
}

pub fn read_graph(path: &Path) -> Result<Graph, CliError> {
    parse_graph(&read_file(path)?).map_err(|e| CliError::Malformed {
        path: path.to_path_buf(),
        message: e.to_string(),
    })
}

fn parse_k(tag: &str, k: &str) -> Result<usize, CliError> {
    match k.parse::<usize>() {
        Ok(k) if k >= 1 => Ok(k),
        _ => Err(CliError::Usage(format!("{tag}: k must be a positive integer, got {k:?}"))),
    }
}

/// Parses a `--property` value.
pub fn parse_property(spec: &str) -> Result<PropertySelector, CliError> {
    let (tag, arg) = match spec.split_once(':') {
        Some((t, a)) => (t, Some(a)),
        None => (spec, None),
    };
    let prop = match (tag, arg) {
        ("ham", None) => PropertySelector::Hamiltonian,
        ("planar", None) => PropertySelector::Planarity,
        ("edge2color", None) => PropertySelector::Edge2Color,
        ("subgraph", Some(file)) => {
            let p = read_graph(Path::new(file))?;
            if p.is_empty() {
                return Err(CliError::Malformed {
                    path: file.into(),
                    message: "pattern has no edges".into(),
                });
            }
            PropertySelector::Subgraph(p)
        }
        ("kcolor", Some(k)) => PropertySelector::KColor(parse_k(tag, k)?),
        ("kconn", Some(k)) => PropertySelector::KConn(parse_k(tag, k)?),
        ("kconn-psi", Some(k)) => PropertySelector::KConnPsi(parse_k(tag, k)?),
        _ => return Err(CliError::Usage(format!("unknown property {spec:?}"))),
    };
    Ok(prop)
}

/// One line per edge as `u-v`, comma separated; `-` for the empty graph.
fn inline(g: &Graph) -> String {
    if g.is_empty() {
        return "-".into();
    }
    g.edges()
        .map(|e| {
            let (u, v) = e.endpoints();
            format!("{u}-{v}")
        })
        .collect::<Vec<_>>()
        .join(",")
}

fn print_graph(out: &mut dyn Write, g: &Graph) -> io::Result<()> {
    if !g.is_empty() {
        writeln!(out, "{g}")?;
    }
    Ok(())
}

/// Runs the command line `args` (program name first) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = if e.use_stderr() {
                write!(err, "{}", e.render())
            } else {
                write!(out, "{}", e.render())
            };
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn execute(command: Command, out: &mut dyn Write) -> Result<u8, CliError> {
    match command {
        Command::Decide(pair) => {
            let prop = parse_property(&pair.property)?;
            let (g, h) = (read_graph(&pair.g)?, read_graph(&pair.h)?);
            let outcome = decide(&prop, &g, &h, false)?;
            if pair.json {
                let rec = json!({
                    "property": prop.to_string(),
                    "verdict": outcome.verdict,
                    "reason": outcome.reason,
                });
                writeln!(out, "{rec}")?;
            } else {
                writeln!(out, "{}", outcome.verdict.label())?;
                if let Some(r) = &outcome.reason {
                    writeln!(out, "reason: {r}")?;
                }
            }
            Ok(outcome.verdict.exit_code() as u8)
        }
        Command::Witness(pair) => {
            let prop = parse_property(&pair.property)?;
            let (g, h) = (read_graph(&pair.g)?, read_graph(&pair.h)?);
            let outcome = decide(&prop, &g, &h, false)?;
            let witness = match outcome.verdict {
                Verdict::NotEquivalent => Some(witness_for(&prop, &g, &h)?),
                _ => None,
            };
            if pair.json {
                let rec = json!({
                    "property": prop.to_string(),
                    "verdict": outcome.verdict,
                    "reason": outcome.reason,
                    "witness": witness,
                });
                writeln!(out, "{rec}")?;
            } else {
                match &witness {
                    Some(w) => {
                        let side = match w.property_side {
                            strongeq::Side::First => "first",
                            strongeq::Side::Second => "second",
                        };
                        writeln!(
                            out,
                            "{} side={side} construction={:?} edges={}",
                            outcome.verdict.label(),
                            w.construction,
                            w.extension.len()
                        )?;
                        print_graph(out, &w.extension)?;
                    }
                    None => writeln!(out, "{}", outcome.verdict.label())?,
                }
            }
            Ok(outcome.verdict.exit_code() as u8)
        }
        Command::Oracle { pair, budget } => {
            let prop = parse_property(&pair.property)?;
            let (g, h) = (read_graph(&pair.g)?, read_graph(&pair.h)?);
            let budget = budget.resolve(&prop);
            let outcome = refute_bounded(&prop, &g, &h, budget)?;
            if pair.json {
                let rec = json!({
                    "property": prop.to_string(),
                    "budget": budget,
                    "outcome": outcome,
                });
                writeln!(out, "{rec}")?;
            } else {
                match &outcome {
                    OracleOutcome::Separated { extension, examined, .. } => {
                        writeln!(out, "found after {examined} candidates")?;
                        print_graph(out, extension)?;
                    }
                    OracleOutcome::Exhausted { examined } => writeln!(out, "exhausted after {examined} candidates")?,
                    OracleOutcome::BudgetExceeded { examined } => {
                        writeln!(out, "budget reached after {examined} candidates")?
                    }
                }
            }
            Ok(match outcome {
                OracleOutcome::Separated { .. } => 1,
                OracleOutcome::Exhausted { .. } => 0,
                OracleOutcome::BudgetExceeded { .. } => 2,
            })
        }
        Command::Reduce {
            kind: ReduceKind::Kcolor { k, graph },
        } => {
            let g = read_graph(&graph)?;
            let (a, b) = np_reduce_kcolor(&g, k)?;
            writeln!(out, "{a}")?;
            writeln!(out)?;
            writeln!(out, "{b}")?;
            Ok(0)
        }
        Command::Crosscheck {
            property,
            vertices,
            sample,
            seed,
            budget,
            json,
        } => {
            let prop = parse_property(&property)?;
            if vertices > 6 && sample.is_none() {
                return Err(CliError::Usage(format!(
                    "all graphs on {vertices} vertices is too many; use --sample"
                )));
            }
            let family = match sample {
                Some(pairs) => InstanceFamily::Sampled { vertices, pairs, seed },
                None => InstanceFamily::AllGraphs { vertices },
            };
            let report = crosscheck(&prop, &family, budget.resolve(&prop))?;
            if json {
                for r in &report.records {
                    let rec = json!({
                        "g": inline(&r.g),
                        "h": inline(&r.h),
                        "verdict": r.verdict,
                        "oracle": r.oracle,
                        "witness_ok": r.witness_ok,
                        "agreement": r.agreement,
                    });
                    writeln!(out, "{rec}")?;
                }
            } else {
                for r in report.violations() {
                    writeln!(
                        out,
                        "violation g={} h={} verdict={} oracle={:?} witness_ok={:?}",
                        inline(&r.g),
                        inline(&r.h),
                        r.verdict.label(),
                        r.oracle,
                        r.witness_ok
                    )?;
                }
                writeln!(
                    out,
                    "{}: {} pairs, {} equivalent, {} not equivalent, {} unknown, {} violations",
                    report.property,
                    report.records.len(),
                    report.count(Verdict::Equivalent),
                    report.count(Verdict::NotEquivalent),
                    report.count(Verdict::Unknown),
                    report.violations().count()
                )?;
            }
            Ok(if report.is_clean() { 0 } else { 1 })
        }
        Command::MinSubgraph { k, graph, budget, json } => {
            let g = read_graph(&graph)?;
            let m = min_equivalent_subgraph(&g, k, budget)?;
            if json {
                writeln!(out, "{}", json!({ "k": k, "edges": m.len(), "graph": m }))?;
            } else {
                print_graph(out, &m)?;
            }
            Ok(0)
        }
        Command::Setcheck { file, json } => {
            let prop = read_subset_family(&file)?;
            let rel = equiv_from_property(&prop);
            let strong = bounded_strengthen(&rel);
            let form = classify_threshold_form(&prop);
            let fixed = strong == rel;
            if json {
                let rec = json!({
                    "form": form,
                    "fixed_point": fixed,
                    "classes": strong.classes().len(),
                });
                writeln!(out, "{rec}")?;
            } else {
                let form = match &form {
                    ThresholdForm::Intersecting(x) => format!("intersecting {}", join(x)),
                    ThresholdForm::Subset(x) => format!("subset {}", join(x)),
                    ThresholdForm::Neither => "neither".into(),
                };
                writeln!(out, "form: {form}")?;
                writeln!(out, "fixed point: {}", if fixed { "yes" } else { "no" })?;
                writeln!(out, "strengthened classes: {}", strong.classes().len())?;
            }
            Ok(0)
        }
    }
}

fn join<'a>(xs: impl IntoIterator<Item = &'a String>) -> String {
    let v: Vec<&str> = xs.into_iter().map(String::as_str).collect();
    format!("{{{}}}", v.join(" "))
}

/// First line: the universe. Each further line: one member subset as
/// space-separated elements, `-` for the empty set. `#` starts a comment.
pub fn read_subset_family(path: &Path) -> Result<SubsetProperty, CliError> {
    let text = read_file(path)?;
    let bad = |message: String| CliError::Malformed {
        path: path.to_path_buf(),
        message,
    };
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines.next().ok_or_else(|| bad("missing universe line".into()))?;
    let universe = FiniteUniverse::new(header.split_whitespace()).map_err(|e| bad(e.to_string()))?;
    let mut members = Vec::new();
    for line in lines {
        let mask = if line == "-" {
            0
        } else {
            universe.mask_of(line.split_whitespace()).map_err(|e| bad(e.to_string()))?
        };
        members.push(mask);
    }
    SubsetProperty::new(universe, members).map_err(|e| bad(e.to_string()))
}
