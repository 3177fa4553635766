//! Command-line front end for the mixed-graph library.
//!
//! Exit codes: 0 for success (and positive verdicts), 1 for negative
//! verdicts (inequivalent graphs, connected query, failed validation),
//! 2 for errors (unreadable files, malformed graphs, bad flags).

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use mageq::{bench, equiv, format, heads, msep, projection, GraphType, MixedGraph, VertexSet};

#[derive(Parser)]
#[command(name = "mageq", version, about = "Mixed graphs: m-separation, parametrizing sets, Markov equivalence")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print ancestral / maximal / summary verdicts for a graph
    Validate { file: PathBuf },
    /// Decide whether two vertices are m-separated by a conditioning set
    Msep {
        file: PathBuf,
        a: String,
        b: String,
        /// Comma-separated conditioning labels (omit for the empty set)
        conditioning: Option<String>,
    },
    /// Print a parametrizing set of the graph
    Paramset {
        file: PathBuf,
        #[command(flatten)]
        which: ParamChoice,
    },
    /// Print every head with its tail
    Heads { file: PathBuf },
    /// Project an ADMG or summary graph onto a Markov equivalent MAG
    Project {
        file: PathBuf,
        /// Also write the added edges with justifications to this file
        #[arg(long)]
        provenance: Option<PathBuf>,
    },
    /// Decide Markov equivalence of two graphs
    Equiv {
        file1: PathBuf,
        file2: PathBuf,
        #[arg(long, value_enum, default_value_t = Method::S3tilde)]
        method: Method,
    },
    /// Generate a graph and print it in the text format
    #[command(subcommand)]
    Gen(GenCommand),
    /// Empirical experiments
    #[command(subcommand)]
    Bench(BenchCommand),
}

#[derive(Args)]
#[group(multiple = false)]
struct ParamChoice {
    /// The full parametrizing set (the default)
    #[arg(long)]
    full: bool,
    /// Members of size 2 and 3
    #[arg(long)]
    s3: bool,
    /// Members of size 2 and 3 with 1 or 2 adjacencies (fast route)
    #[arg(long)]
    s3tilde: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    S3tilde,
    Thm31,
    Signature,
}

#[derive(Subcommand)]
enum GenCommand {
    /// Random ADMG with a fixed number of edges on a fixed vertex order
    Admg {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        e: usize,
        #[arg(long, default_value_t = 0.5)]
        p_bidirected: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Random DAG with each edge present with probability r/n
    SparseDag {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// The worst-case family for the fast parametrizing-set extraction
    WorstCase {
        /// Number of sink vertices bidirected to the hub
        #[arg(long)]
        v: usize,
        /// Number of x -> z columns
        #[arg(long)]
        x: usize,
        /// Length of the bidirected chain
        #[arg(long)]
        y: usize,
    },
}

#[derive(Subcommand)]
enum BenchCommand {
    /// Operation-count sweep over random sparse ADMGs, as CSV
    Sweep {
        /// Comma-separated vertex counts
        #[arg(long, value_delimiter = ',', default_value = "20,40,60,80,100")]
        ns: Vec<usize>,
        #[arg(long, default_value_t = 250)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 0.5)]
        p_bidirected: f64,
        /// Edges per vertex (e = this * n)
        #[arg(long, default_value_t = 3)]
        edge_factor: usize,
        /// Output file (stdout when omitted)
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Monte Carlo ancestor-count means against the closed form, as CSV
    Ancestors {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: f64,
        #[arg(long, default_value_t = 2000)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn load(path: &Path) -> Result<MixedGraph> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("cannot read {}", path.display()))?;
    format::parse(&text).with_context(|| format!("cannot parse {}", path.display()))
}

/// Verdict-style outcome: `Ok(true)` exits 0, `Ok(false)` exits 1.
fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Validate { file } => {
            let g = load(&file)?;
            let ancestral = g.validate_ancestral();
            let maximal = g.validate_maximal();
            let summary = g.validate_summary();
            println!("ancestral: {ancestral}");
            println!("maximal: {maximal}");
            println!("summary: {summary}");
            Ok(match g.gtype() {
                GraphType::Mag => ancestral && maximal,
                GraphType::Summary => summary,
                _ => true,
            })
        }
        Command::Msep {
            file,
            a,
            b,
            conditioning,
        } => {
            let g = load(&file)?;
            let a = g.require_vertex(&a)?;
            let b = g.require_vertex(&b)?;
            let mut c = VertexSet::new();
            if let Some(list) = conditioning {
                for label in list.split(',').filter(|s| !s.is_empty()) {
                    c.insert(g.require_vertex(label.trim())?);
                }
            }
            let q = msep::SepQuery::new(&g, a, b, c)?;
            if msep::m_separated(&g, &q) {
                println!("separated");
                Ok(true)
            } else {
                println!("connected");
                Ok(false)
            }
        }
        Command::Paramset { file, which } => {
            let g = load(&file)?;
            let set = if which.s3 {
                heads::s3_brute(&g)?
            } else if which.s3tilde {
                heads::s3_tilde_fast(&g)?
            } else {
                heads::param_set_full(&g)?
            };
            print!("{}", set.serialize(&g));
            Ok(true)
        }
        Command::Heads { file } => {
            let g = load(&file)?;
            let mut rows: Vec<(Vec<String>, Vec<String>)> = heads::enumerate_heads(&g)?
                .iter()
                .map(|ht| (g.labels_of(&ht.head), g.labels_of(&ht.tail)))
                .collect();
            rows.sort_by(|a, b| {
                (a.0.len(), &a.0, &a.1).cmp(&(b.0.len(), &b.0, &b.1))
            });
            for (head, tail) in rows {
                println!("{{{}}} : {{{}}}", head.join(","), tail.join(","));
            }
            Ok(true)
        }
        Command::Project { file, provenance } => {
            let g = load(&file)?;
            let result = projection::project_to_mag(&g)?;
            print!("{}", format::serialize(&result.mag));
            if let Some(path) = provenance {
                let mut text = String::new();
                for e in &result.added_edges {
                    let why = result
                        .provenance
                        .iter()
                        .find(|(pe, _)| pe == e)
                        .map(|(_, w)| w.name())
                        .unwrap_or("unknown");
                    text.push_str(&format!(
                        "{} {} {}\t{}\n",
                        result.mag.label(e.u),
                        e.kind.symbol(),
                        result.mag.label(e.v),
                        why
                    ));
                }
                std::fs::write(&path, text)
                    .with_context(|| format!("cannot write {}", path.display()))?;
            }
            Ok(true)
        }
        Command::Equiv {
            file1,
            file2,
            method,
        } => {
            let g1 = load(&file1)?;
            let g2 = load(&file2)?;
            let report = match method {
                Method::S3tilde => equiv::equiv_admgs(&g1, &g2)?,
                Method::Thm31 => equiv::equiv_path_criterion(&g1, &g2)?,
                Method::Signature => equiv::equiv_signature(&g1, &g2)?,
            };
            if report.equivalent {
                println!("equivalent");
                Ok(true)
            } else {
                println!("inequivalent");
                if let Some(w) = report.witness {
                    println!("witness: {w}");
                }
                Ok(false)
            }
        }
        Command::Gen(gen) => {
            let g = match gen {
                GenCommand::Admg {
                    n,
                    e,
                    p_bidirected,
                    seed,
                } => bench::random_admg(&bench::GenConfig {
                    n,
                    model: bench::EdgeModel::FixedEdges { e },
                    p_bidirected,
                    seed,
                })?,
                GenCommand::SparseDag { n, r, seed } => bench::random_sparse_dag(n, r, seed)?,
                GenCommand::WorstCase { v, x, y } => bench::worst_case_family(v, x, y)?,
            };
            print!("{}", format::serialize(&g));
            Ok(true)
        }
        Command::Bench(cmd) => {
            let (csv, out) = match cmd {
                BenchCommand::Sweep {
                    ns,
                    trials,
                    seed,
                    p_bidirected,
                    edge_factor,
                    out,
                } => {
                    let records =
                        bench::complexity_sweep(&ns, trials, seed, p_bidirected, edge_factor)?;
                    (bench::records_to_csv(&records), out)
                }
                BenchCommand::Ancestors {
                    n,
                    r,
                    trials,
                    seed,
                    out,
                } => {
                    let rows = bench::ancestor_expectation_experiment(n, r, trials, seed)?;
                    let mut csv = String::from("i,mean,std_error,theory\n");
                    for row in rows {
                        csv.push_str(&format!(
                            "{},{:.6},{:.6},{:.6}\n",
                            row.i, row.mean, row.std_error, row.theory
                        ));
                    }
                    (csv, out)
                }
            };
            match out {
                Some(path) => std::fs::write(&path, csv)
                    .with_context(|| format!("cannot write {}", path.display()))?,
                None => print!("{csv}"),
            }
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}
