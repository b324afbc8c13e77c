//! Command-line front end: disjoint paths, property checks, treewidth,
//! leanification, generators, experiments and DOT export.
//!
//! Vertex and bag ids on the command line and in files are 1-based.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use leantd::dot::export_dot;
use leantd::experiments::{run_experiment, ExperimentConfig};
use leantd::format::{
    parse_atlas, parse_gr, parse_labels, parse_td, write_atlas, write_gr, write_labels, write_td,
};
use leantd::leanify::{
    leanify_loop, treewidth_exact, treewidth_oracle, LeanifyOptions, EXACT_LIMIT,
};
use leantd::verify::{verify_properties, LeanOptions, Property};
use leantd::zoo::{
    gen_clique_rows, gen_planar_witness, gen_seq_tree, gen_standard, CliqueRowsConfig, Family,
    LandmarkAtlas, PlanarWitnessConfig, SeqTreeConfig,
};
use leantd::{Graph, TreeDecomposition, VertexSet};

#[derive(Parser)]
#[command(
    name = "leantd",
    version,
    about = "Lean tree-decompositions of finite graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Maximum family of disjoint A-B paths and a minimum separator
    Menger {
        graph: PathBuf,
        /// Comma-separated vertex ids of A
        #[arg(long = "from", value_delimiter = ',', required = true)]
        from: Vec<usize>,
        /// Comma-separated vertex ids of B
        #[arg(long = "to", value_delimiter = ',', required = true)]
        to: Vec<usize>,
    },
    /// Check decomposition properties
    Verify {
        graph: PathBuf,
        td: PathBuf,
        #[arg(long, value_delimiter = ',', default_value = "valid,lean")]
        props: Vec<Property>,
        /// Root bag
        #[arg(long)]
        root: Option<usize>,
        #[arg(long, default_value_t = 12)]
        bag_cap: usize,
        /// Only compare nodes on a common root path
        #[arg(long)]
        comparable_only: bool,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Treewidth of a small graph
    Tw {
        graph: PathBuf,
        #[arg(long, value_enum, default_value_t = TwMethod::Exact)]
        method: TwMethod,
        /// Write the optimal decomposition
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Turn a decomposition into a lean one of no larger width
    Leanify {
        graph: PathBuf,
        /// Starting decomposition; computed exactly when omitted
        td: Option<PathBuf>,
        #[arg(short, long)]
        output: PathBuf,
        #[arg(long, default_value_t = 10_000)]
        max_iters: usize,
        #[arg(long, default_value_t = 12)]
        bag_cap: usize,
        #[arg(long)]
        trace: Option<PathBuf>,
    },
    /// Generate a graph
    Gen(GenArgs),
    /// Run a named experiment
    Exp(ExpArgs),
    /// Graphviz export, with atlas landmarks coloured
    Dot {
        graph: PathBuf,
        #[arg(long)]
        labels: Option<PathBuf>,
        #[arg(long)]
        atlas: Option<PathBuf>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum TwMethod {
    Exact,
    Oracle,
}

#[derive(Clone, Copy, ValueEnum)]
enum GenFamily {
    PlanarWitness,
    CliqueRows,
    SeqTree,
    Path,
    Cycle,
    Clique,
    Grid,
    Random,
}

#[derive(Args)]
struct GenArgs {
    #[arg(value_enum)]
    family: GenFamily,
    #[command(flatten)]
    shape: ShapeArgs,
    /// Vertex count for path, cycle, clique and random
    #[arg(long, default_value_t = 5)]
    n: usize,
    /// Grid rows
    #[arg(long, default_value_t = 3)]
    rows: usize,
    /// Edge probability for random
    #[arg(long, default_value_t = 0.5)]
    p: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(short, long)]
    output: PathBuf,
    #[arg(long)]
    labels: Option<PathBuf>,
    #[arg(long)]
    atlas: Option<PathBuf>,
}

#[derive(Args)]
struct ShapeArgs {
    /// Levels of the planar witness
    #[arg(long, default_value_t = 5)]
    levels: usize,
    /// Number of grids of the planar witness
    #[arg(long, default_value_t = 2)]
    grids: usize,
    /// Columns per grid of the planar witness; grid columns for `grid`
    #[arg(long, default_value_t = 12)]
    cols: usize,
    /// Keep the edge (2,0)(2,1) and build no grid below level 1
    #[arg(long)]
    no_base_grid: bool,
    /// Last column of the clique rows
    #[arg(long, default_value_t = 8)]
    width: usize,
    /// Support length of the sequence tree
    #[arg(long, default_value_t = 2)]
    depth: usize,
    /// Largest sequence entry
    #[arg(long, default_value_t = 2)]
    branch: usize,
    /// Last column of each strip
    #[arg(long, default_value_t = 6)]
    len: usize,
}

impl ShapeArgs {
    fn planar(&self) -> PlanarWitnessConfig {
        PlanarWitnessConfig {
            levels: self.levels,
            grids: self.grids,
            cols: self.cols,
            base_grid: !self.no_base_grid,
        }
    }

    fn clique_rows(&self) -> CliqueRowsConfig {
        CliqueRowsConfig { width: self.width }
    }

    fn seq_tree(&self) -> SeqTreeConfig {
        SeqTreeConfig {
            depth: self.depth,
            branch: self.branch,
            len: self.len,
        }
    }
}

#[derive(Args)]
struct ExpArgs {
    /// c31-cuts, c31-slink, ex3-bag or ex5-deg2
    name: String,
    #[command(flatten)]
    shape: ShapeArgs,
    /// Grid index for the planar experiments
    #[arg(long, default_value_t = 1)]
    n: usize,
    /// Clique index for ex3-bag
    #[arg(long, default_value_t = 3)]
    m: usize,
    #[arg(long)]
    report: Option<PathBuf>,
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn write(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

fn load_graph(path: &Path) -> Result<Graph> {
    parse_gr(&read(path)?).with_context(|| format!("parsing {}", path.display()))
}

fn load_td(path: &Path, root: Option<usize>) -> Result<TreeDecomposition> {
    let td = parse_td(&read(path)?).with_context(|| format!("parsing {}", path.display()))?;
    match root {
        None => Ok(td),
        Some(0) => bail!("bag ids are 1-based"),
        Some(r) => Ok(td.with_root(r - 1)?),
    }
}

fn vertex_set(g: &Graph, ids: &[usize]) -> Result<VertexSet> {
    ids.iter()
        .map(|&v| {
            if v == 0 || v > g.n() {
                bail!("vertex {v} outside 1..={}", g.n());
            }
            Ok(v - 1)
        })
        .collect()
}

fn one_based(set: impl IntoIterator<Item = usize>) -> String {
    set.into_iter()
        .map(|v| (v + 1).to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn emit(text: &str, out: Option<&Path>) -> Result<()> {
    match out {
        Some(p) => write(p, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Menger { graph, from, to } => {
            let g = load_graph(&graph)?;
            let (a, b) = (vertex_set(&g, &from)?, vertex_set(&g, &to)?);
            let res = leantd::max_disjoint_paths(&g, &a, &b)?;
            println!("k {}", res.k());
            for p in &res.paths.paths {
                println!("path {}", one_based(p.iter().copied()));
            }
            println!("separator {}", one_based(res.separator.separator.iter()));
            Ok(true)
        }
        Command::Verify {
            graph,
            td,
            props,
            root,
            bag_cap,
            comparable_only,
            report,
        } => {
            let g = load_graph(&graph)?;
            let td = load_td(&td, root)?;
            let opts = LeanOptions {
                bag_cap,
                comparable_only,
                pairs: None,
            };
            let rep = verify_properties(&g, &td, &props, &opts)?;
            emit(&rep.to_string(), report.as_deref())?;
            Ok(rep.all_pass())
        }
        Command::Tw {
            graph,
            method,
            output,
        } => {
            let g = load_graph(&graph)?;
            match method {
                TwMethod::Exact => {
                    let (tw, td) = treewidth_exact(&g)?;
                    println!("{tw}");
                    if let Some(out) = output {
                        write(&out, &write_td(&td))?;
                    }
                }
                TwMethod::Oracle => {
                    if output.is_some() {
                        bail!("--output needs --method exact");
                    }
                    println!("{}", treewidth_oracle(&g)?);
                }
            }
            Ok(true)
        }
        Command::Leanify {
            graph,
            td,
            output,
            max_iters,
            bag_cap,
            trace,
        } => {
            let g = load_graph(&graph)?;
            let start = match td {
                Some(p) => load_td(&p, None)?,
                None if g.n() <= EXACT_LIMIT => treewidth_exact(&g)?.1,
                None => bail!(
                    "graph has {} vertices; pass a starting decomposition above {EXACT_LIMIT}",
                    g.n()
                ),
            };
            let (lean, tr) = leanify_loop(&g, &start, LeanifyOptions { max_iters, bag_cap })?;
            write(&output, &write_td(&lean))?;
            if let Some(t) = trace {
                write(&t, &tr.to_string())?;
            }
            eprintln!(
                "{} improvement steps, width {}",
                tr.len(),
                leantd::width(&lean)
            );
            Ok(true)
        }
        Command::Gen(args) => {
            let (g, atlas): (Graph, Option<LandmarkAtlas>) = match args.family {
                GenFamily::PlanarWitness => {
                    let (g, a) = gen_planar_witness(&args.shape.planar())?;
                    (g, Some(a))
                }
                GenFamily::CliqueRows => {
                    let (g, a) = gen_clique_rows(&args.shape.clique_rows())?;
                    (g, Some(a))
                }
                GenFamily::SeqTree => {
                    let (g, a) = gen_seq_tree(&args.shape.seq_tree())?;
                    (g, Some(a))
                }
                GenFamily::Path => (gen_standard(Family::Path(args.n))?, None),
                GenFamily::Cycle => (gen_standard(Family::Cycle(args.n))?, None),
                GenFamily::Clique => (gen_standard(Family::Clique(args.n))?, None),
                GenFamily::Grid => (
                    gen_standard(Family::Grid(args.rows, args.shape.cols))?,
                    None,
                ),
                GenFamily::Random => (
                    gen_standard(Family::Random {
                        n: args.n,
                        p: args.p,
                        seed: args.seed,
                    })?,
                    None,
                ),
            };
            write(&args.output, &write_gr(&g))?;
            if let Some(p) = args.labels {
                let labels: Vec<String> = match g.labels() {
                    Some(l) => l.to_vec(),
                    None => (1..=g.n()).map(|v| v.to_string()).collect(),
                };
                write(&p, &write_labels(&labels))?;
            }
            if let Some(p) = args.atlas {
                write(&p, &write_atlas(&atlas.unwrap_or_default()))?;
            }
            Ok(true)
        }
        Command::Exp(args) => {
            let cfg = ExperimentConfig {
                planar: args.shape.planar(),
                n: args.n,
                clique_rows: args.shape.clique_rows(),
                m: args.m,
                seq_tree: args.shape.seq_tree(),
            };
            let rep = run_experiment(&args.name, &cfg)?;
            emit(&rep.to_string(), args.report.as_deref())?;
            Ok(rep.all_pass())
        }
        Command::Dot {
            graph,
            labels,
            atlas,
            output,
        } => {
            let mut g = load_graph(&graph)?;
            if let Some(p) = labels {
                let l = parse_labels(&read(&p)?, g.n())
                    .with_context(|| format!("parsing {}", p.display()))?;
                g = g.with_labels(l)?;
            }
            let atlas = match atlas {
                Some(p) => Some(
                    parse_atlas(&read(&p)?, g.n())
                        .with_context(|| format!("parsing {}", p.display()))?,
                ),
                None => None,
            };
            emit(&export_dot(&g, atlas.as_ref()), output.as_deref())?;
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
