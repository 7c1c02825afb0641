//! The `brauer` command line.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use brauer_core::combinatorics::{connected_class_count, factorial, max_atom_length};
use brauer_core::decomposition::decompose;
use brauer_core::diagram::{enumerate_all_with_limit, DEFAULT_ENUMERATION_LIMIT};
use brauer_core::geodesics::DEFAULT_BFS_LIMIT;
use brauer_core::presentation::{normal_form_split, normalize};
use brauer_core::sequences::{
    count_paths_with_limit, gamma_graph, seq_canonical, seq_equivalent, ConnectedSequence,
};
use brauer_core::{BrauerDiagram, GreenRelation, Quark, Word, MAX_RANK};
use clap::{CommandFactory, Parser, Subcommand};
use serde_json::{json, Value};

use crate::json::{diagram_value, pair, word_value};
use crate::verify::{self, Suite};
use crate::{cache, parallel, Error, Result};

#[derive(Debug, Parser)]
#[command(
    name = "brauer",
    version,
    about = "Computations in the Brauer monoid and its singular part"
)]
pub struct Cli {
    /// Print a single JSON object instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Worker threads for parallel computations.
    #[arg(long, global = true, value_name = "N")]
    pub threads: Option<usize>,
    /// Directory for cached length tables.
    #[arg(long, global = true, value_name = "PATH", env = cache::CACHE_DIR_ENV)]
    pub cache_dir: Option<PathBuf>,
    /// Run above the default rank limits.
    #[arg(long, global = true)]
    pub force: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Product of two diagrams.
    Mult { a: String, b: String },
    /// Corank of a diagram.
    Corank { diagram: String },
    /// Green's relations between two diagrams.
    Green {
        a: String,
        b: String,
        /// Only this relation (R, L, H, D or J).
        #[arg(long)]
        relation: Option<String>,
    },
    /// Factor a non-invertible diagram into atoms.
    Decompose { diagram: String },
    /// Rewrite a word into normal form.
    Normalize { word: String },
    /// Evaluate a word to a diagram.
    Phi { word: String },
    /// Decide equality of two words in the presented semigroup.
    Equal { a: String, b: String },
    /// Minimal number of atoms whose product is the diagram.
    Length { diagram: String },
    /// Maximal length over the singular part, with a witness.
    Longest { n: usize },
    /// Number of classes of connected sequences.
    Classes { n: usize },
    /// Number of path classes between two pairs, given as `i,j` and `k,l`.
    Paths { n: usize, from: String, to: String },
    /// Equivalence of two connected sequences such as `(1,2)(2,3)`.
    SeqEqual { n: usize, a: String, b: String },
    /// Run verification suites (default: all).
    Verify {
        n: usize,
        #[arg(value_parser = ["relations", "generation", "irreducible", "lengths", "counts", "hclasses"])]
        suites: Vec<String>,
    },
    /// List all diagrams of rank n.
    Enumerate {
        n: usize,
        /// Only diagrams of this corank.
        #[arg(long)]
        corank: Option<usize>,
        /// Print the count only.
        #[arg(long)]
        count: bool,
    },
    /// The graph on 2-subsets joining intersecting pairs.
    Graph {
        n: usize,
        /// Graphviz output.
        #[arg(long)]
        dot: bool,
    },
}

/// Text and JSON renderings of a command's result.
struct Output {
    text: String,
    json: Value,
    /// Exit code on success; `verify` reports violations with 1.
    code: i32,
}

impl Output {
    fn new(command: &str, text: impl Into<String>, mut json: Value) -> Self {
        json.as_object_mut()
            .expect("object")
            .insert("command".into(), command.into());
        Output {
            text: text.into(),
            json,
            code: 0,
        }
    }
}

/// Parses `argv` and runs the command, writing results to `out` and
/// diagnostics to `err`. Returns the process exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return 0;
            }
            let _ = write!(err, "{}", e.render());
            if !matches!(
                e.kind(),
                ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand
            ) {
                let _ = write!(err, "\n{}", Cli::command().render_help());
            }
            return 2;
        }
    };
    let json = cli.json;
    let result = parallel::with_threads(cli.threads, || execute(&cli)).and_then(|r| r);
    match result {
        Ok(output) => {
            let _ = if json {
                writeln!(out, "{}", output.json)
            } else {
                writeln!(out, "{}", output.text)
            };
            output.code
        }
        Err(e) => {
            if json {
                let kind = if e.exit_code() == 2 {
                    "domain"
                } else {
                    "internal"
                };
                let _ = writeln!(
                    out,
                    "{}",
                    json!({ "error": { "kind": kind, "message": e.to_string() } })
                );
            }
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn diagram(s: &str) -> Result<BrauerDiagram> {
    Ok(s.parse()?)
}

fn word(s: &str) -> Result<Word> {
    Ok(s.parse()?)
}

fn parse_pair(s: &str) -> Result<Quark> {
    let bad = || Error::Input(format!("expected a pair `i,j`, found {s:?}"));
    let (i, j) = s.split_once(',').ok_or_else(bad)?;
    let i = i.trim().parse().map_err(|_| bad())?;
    let j = j.trim().parse().map_err(|_| bad())?;
    Ok(Quark::new(i, j)?)
}

fn same_rank(a: &BrauerDiagram, b: &BrauerDiagram) -> Result<()> {
    if a.rank() != b.rank() {
        return Err(brauer_core::Error::RankMismatch {
            left: a.rank(),
            right: b.rank(),
        }
        .into());
    }
    Ok(())
}

fn execute(cli: &Cli) -> Result<Output> {
    let limit = |default: usize| if cli.force { MAX_RANK } else { default };
    let out = match &cli.command {
        Command::Mult { a, b } => {
            let (a, b) = (diagram(a)?, diagram(b)?);
            let (p, loops) = a.multiply_with_loops(&b)?;
            Output::new(
                "mult",
                p.to_string(),
                json!({ "product": diagram_value(&p), "loops": loops }),
            )
        }
        Command::Corank { diagram: d } => {
            let d = diagram(d)?;
            Output::new(
                "corank",
                d.corank().to_string(),
                json!({ "diagram": diagram_value(&d), "corank": d.corank() }),
            )
        }
        Command::Green { a, b, relation } => {
            let (a, b) = (diagram(a)?, diagram(b)?);
            same_rank(&a, &b)?;
            let relations: Vec<GreenRelation> = match relation {
                Some(r) => vec![r.parse()?],
                None => vec![
                    GreenRelation::R,
                    GreenRelation::L,
                    GreenRelation::H,
                    GreenRelation::D,
                ],
            };
            let mut text = Vec::new();
            let mut obj = serde_json::Map::new();
            for r in relations {
                let related = a.green_related(&b, r)?;
                text.push(format!("{r}: {related}"));
                obj.insert(r.to_string(), related.into());
            }
            Output::new("green", text.join("\n"), Value::Object(obj))
        }
        Command::Decompose { diagram: d } => {
            let d = diagram(d)?;
            let w = decompose(&d)?;
            let verified = w.phi() == d;
            Output::new(
                "decompose",
                format!("{w}\nverified: {verified}"),
                json!({ "diagram": diagram_value(&d), "word": word_value(&w), "length": w.len(), "verified": verified }),
            )
        }
        Command::Normalize { word: w } => {
            let w = word(w)?;
            let nf = normalize(&w);
            let head = normal_form_split(&nf).expect("normal form has a split");
            Output::new(
                "normalize",
                nf.to_string(),
                json!({ "input": word_value(&w), "normal_form": word_value(&nf), "head": head }),
            )
        }
        Command::Phi { word: w } => {
            let w = word(w)?;
            let d = w.phi();
            Output::new(
                "phi",
                d.to_string(),
                json!({ "word": word_value(&w), "diagram": diagram_value(&d) }),
            )
        }
        Command::Equal { a, b } => {
            let equal = word(a)?.equal_in_t(&word(b)?)?;
            Output::new("equal", equal.to_string(), json!({ "equal": equal }))
        }
        Command::Length { diagram: d } => {
            let d = diagram(d)?;
            let table = cache::load_or_compute(
                cli.cache_dir.as_deref(),
                d.rank(),
                limit(DEFAULT_BFS_LIMIT),
            )?;
            let len = table.get(&d);
            let text = len.map_or_else(|| "undefined (invertible)".to_string(), |l| l.to_string());
            Output::new(
                "length",
                text,
                json!({ "diagram": diagram_value(&d), "length": len }),
            )
        }
        Command::Longest { n } => {
            let table =
                cache::load_or_compute(cli.cache_dir.as_deref(), *n, limit(DEFAULT_BFS_LIMIT))?;
            let (len, witness) = table.longest();
            Output::new(
                "longest",
                format!("{len}\n{witness}"),
                json!({ "n": n, "length": len, "formula": max_atom_length(*n), "witness": diagram_value(&witness) }),
            )
        }
        Command::Classes { n } => {
            let count = parallel::corank_census(*n, limit(DEFAULT_ENUMERATION_LIMIT))?
                .get(1)
                .copied()
                .unwrap_or(0);
            if *n < 2 {
                return Err(brauer_core::Error::InvalidRank(*n).into());
            }
            Output::new(
                "classes",
                count.to_string(),
                json!({ "n": n, "count": count, "formula": connected_class_count(*n) }),
            )
        }
        Command::Paths { n, from, to } => {
            let (from, to) = (parse_pair(from)?, parse_pair(to)?);
            let count = count_paths_with_limit(*n, from, to, limit(DEFAULT_ENUMERATION_LIMIT))?;
            Output::new(
                "paths",
                count.to_string(),
                json!({ "n": n, "from": pair(from), "to": pair(to), "count": count, "formula": factorial(n - 2) }),
            )
        }
        Command::SeqEqual { n, a, b } => {
            let (a, b) = (
                ConnectedSequence::parse(*n, a)?,
                ConnectedSequence::parse(*n, b)?,
            );
            let equivalent = seq_equivalent(&a, &b)?;
            Output::new(
                "seq-equal",
                equivalent.to_string(),
                json!({
                    "equivalent": equivalent,
                    "canonical": [diagram_value(&seq_canonical(&a)), diagram_value(&seq_canonical(&b))],
                }),
            )
        }
        Command::Verify { n, suites } => {
            let suites: Vec<Suite> = if suites.is_empty() {
                Suite::ALL.to_vec()
            } else {
                suites.iter().map(|s| s.parse()).collect::<Result<_>>()?
            };
            let report = verify::run(*n, &suites, cli.force)?;
            let mut json = serde_json::to_value(&report)?;
            json["passed"] = report.passed().into();
            let mut output = Output::new("verify", report.to_string(), json);
            output.code = if report.passed() { 0 } else { 1 };
            output
        }
        Command::Enumerate { n, corank, count } => {
            let all = enumerate_all_with_limit(*n, limit(DEFAULT_ENUMERATION_LIMIT))?;
            let keep = |d: &BrauerDiagram| corank.is_none_or(|k| d.corank() == k);
            if *count {
                let c = all.filter(keep).count();
                Output::new("enumerate", c.to_string(), json!({ "n": n, "count": c }))
            } else {
                let list: Vec<String> = all.filter(keep).map(|d| d.to_string()).collect();
                Output::new(
                    "enumerate",
                    list.join("\n"),
                    json!({ "n": n, "count": list.len(), "diagrams": list }),
                )
            }
        }
        Command::Graph { n, dot } => {
            let g = gamma_graph(*n)?;
            let vertices: Vec<[usize; 2]> = g.vertices().map(pair).collect();
            let edges: Vec<[usize; 2]> = (0..g.vertex_count())
                .flat_map(|a| {
                    g.neighbors(a)
                        .iter()
                        .filter(move |&&b| b > a)
                        .map(move |&b| [a, b])
                })
                .collect();
            let text = if *dot {
                g.to_dot().trim_end().to_string()
            } else {
                format!("{} vertices, {} edges", g.vertex_count(), g.edge_count())
            };
            Output::new(
                "graph",
                text,
                json!({ "n": n, "vertices": vertices, "edges": edges }),
            )
        }
    };
    Ok(out)
}
