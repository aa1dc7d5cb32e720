use std::fs::File;
use std::io::{BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use ftsc_core::bench::{dataset_stats, generate, run_workload, write_csv, Method, RunOptions, StatsFlags, WorkloadSpec};
use ftsc_core::graph::{parse_graph, write_snap, GraphFormat};
use ftsc_core::oracles::SsrMode;
use ftsc_core::scc_tree::{build_partial_scc_tree, build_scc_tree, find_min_delta};
use ftsc_core::structure::{SplitSelector, SplitterKind};
use ftsc_core::Digraph;

#[derive(Parser)]
#[command(name = "ftsc", version, about = "Dual-fault strong connectivity: trees, oracles and benchmarks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Input {
    /// Edge list (SNAP) or `.gr` file (DIMACS).
    graph: PathBuf,
    /// Overrides the format guessed from the extension.
    #[arg(long)]
    format: Option<GraphFormat>,
    /// SCC to work on, by size rank (1 = largest).
    #[arg(long, default_value_t = 1)]
    rank: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Size, strong articulation points and diameter of the largest SCC.
    Stats {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        exact_diameter: bool,
        /// Also count vertices in proper separation pairs.
        #[arg(long)]
        nsp: bool,
    },
    /// Writes the SCC of the given rank as a SNAP edge list.
    ExtractScc {
        #[command(flatten)]
        input: Input,
        out: PathBuf,
    },
    /// Builds an SCC-tree and prints its height.
    BuildTree {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        splitter: SplitterKind,
        #[arg(long, default_value_t = 1)]
        rng_seed: u64,
        /// JSON node records.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Builds a partial SCC-tree for a given Δ and prints its height.
    PartialTree {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        delta: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Smallest Δ for which the graph is Δ-good or the partial tree is at
    /// most Δ high.
    FindDelta {
        #[command(flatten)]
        input: Input,
    },
    /// Runs a query workload through one or more engines.
    Query {
        #[command(flatten)]
        input: Input,
        /// simple-bfs, bi-bfs, sbfs:K, chbfs:K, tree:SPLITTER, partial-tree:D,
        /// chtree:K or ground-truth. Repeat for several engines.
        #[arg(long, required = true)]
        method: Vec<Method>,
        /// random:N or bad:N.
        #[arg(long)]
        workload: WorkloadSpec,
        #[arg(long, default_value_t = 1)]
        rng_seed: u64,
        /// Seeds placed by a bad workload.
        #[arg(long, default_value_t = 10)]
        seed_count: usize,
        #[arg(long)]
        cross_check: bool,
        /// Answer chtree internal nodes by uncounted bidirectional search.
        #[arg(long)]
        simulate: bool,
        /// JSON reports, one document per engine.
        #[arg(long)]
        report: Option<PathBuf>,
        /// Comma-separated summary, one row per engine.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
}

fn load(input: &Input) -> Result<Digraph> {
    let path = &input.graph;
    let file = File::open(path).with_context(|| format!("opening {}", path.display()))?;
    let format = input.format.unwrap_or_else(|| GraphFormat::from_path(path));
    let g = parse_graph(BufReader::new(file), format).with_context(|| format!("reading {}", path.display()))?;
    Ok(g.extract_scc_by_rank(input.rank)?)
}

fn name_of(path: &Path) -> String {
    path.file_stem().map_or_else(|| "graph".into(), |s| s.to_string_lossy().into_owned())
}

fn create(path: &Path) -> Result<BufWriter<File>> {
    Ok(BufWriter::new(
        File::create(path).with_context(|| format!("creating {}", path.display()))?,
    ))
}

fn write_json<T: serde::Serialize>(path: &Path, value: &T) -> Result<()> {
    let mut w = create(path)?;
    serde_json::to_writer_pretty(&mut w, value)?;
    writeln!(w)?;
    Ok(())
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Stats {
            input,
            exact_diameter,
            nsp,
        } => {
            let g = load(&input)?;
            let s = dataset_stats(&g, StatsFlags { exact_diameter, nsp })?;
            println!("{}", serde_json::to_string_pretty(&s)?);
        }
        Command::ExtractScc { input, out } => {
            let g = load(&input)?;
            let mut w = create(&out)?;
            write_snap(&g, &mut w)?;
            w.flush()?;
            println!("n={} m={}", g.vertex_count(), g.edge_count());
        }
        Command::BuildTree {
            input,
            splitter,
            rng_seed,
            out,
        } => {
            let g = load(&input)?;
            let tree = build_scc_tree(&g, &SplitSelector::new(splitter).with_seed(rng_seed))?;
            println!("height={}", tree.height());
            if let Some(out) = out {
                write_json(&out, &tree.records(&g))?;
            }
        }
        Command::PartialTree { input, delta, out } => {
            let g = load(&input)?;
            let tree = build_partial_scc_tree(&g, delta)?;
            println!(
                "height={} nodes={} leaves={}",
                tree.height(),
                tree.node_count(),
                tree.leaf_nodes().count()
            );
            if let Some(out) = out {
                write_json(&out, &tree.records(&g))?;
            }
        }
        Command::FindDelta { input } => {
            let g = load(&input)?;
            println!("delta={}", find_min_delta(&g)?);
        }
        Command::Query {
            input,
            method,
            workload,
            rng_seed,
            seed_count,
            cross_check,
            simulate,
            report,
            csv,
        } => {
            let g = load(&input)?;
            let spec = WorkloadSpec {
                rng_seed,
                seed_count,
                ..workload
            };
            let w = generate(&g, &spec)?;
            if w.queries.is_empty() {
                bail!("workload is empty");
            }
            let opts = RunOptions {
                graph_name: name_of(&input.graph),
                rng_seed,
                cross_check,
                ssr_mode: if simulate { SsrMode::Simulated } else { SsrMode::Exact },
            };
            let mut reports = Vec::new();
            for m in method {
                let r = run_workload(&g, m, &w, &opts)?;
                println!(
                    "{:<16} true={} false={} seed%={:.2} edges/q={:.2} depth0%={:.2}",
                    r.method,
                    r.answered_true,
                    r.answered_false,
                    r.pct_answered_by_seed(),
                    r.mean_edges_per_query(),
                    100.0 * r.depth_zero_rate()
                );
                reports.push(r);
            }
            if let Some(path) = report {
                let mut w = create(&path)?;
                for r in &reports {
                    writeln!(w, "{}", r.to_json()?)?;
                }
                w.flush()?;
            }
            if let Some(path) = csv {
                write_csv(&reports, create(&path)?)?;
            }
        }
    }
    Ok(())
}

fn main() {
    if let Err(e) = run(Cli::parse()) {
        eprintln!("error: {e:#}");
        std::process::exit(1);
    }
}
