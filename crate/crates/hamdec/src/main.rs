//! `hamdec`: generate regular bipartite digraphs, decompose them into
//! edge-disjoint Hamilton cycles, and verify cycle families.

use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use hamdec::format;
use hamdec::report;
use hamdec::WallClock;
use hamdec_core::generators;
use hamdec_core::pipeline::{decompose_with_clock, DecompositionConfig, Mode};
use hamdec_core::verify;
use hamdec_core::BipartiteDigraph;

#[derive(Parser)]
#[command(name = "hamdec", version, about = "Edge-disjoint Hamilton cycles in regular bipartite digraphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Kind {
    /// Complete balanced bipartite digraph (all cross edges).
    Complete,
    /// Diregular bipartite tournament (orientation of K_{n,n}).
    Tournament,
    /// d-regular bipartite digraph from random Latin rectangles.
    Regular,
}

#[derive(Subcommand)]
enum Command {
    /// Generate an input graph and write it in edge-list format.
    Generate {
        #[arg(long, value_enum)]
        kind: Kind,
        /// Class size: the graph has 2n vertices.
        #[arg(long)]
        n: usize,
        /// Regular degree (required for --kind regular).
        #[arg(long)]
        d: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Decompose a graph into edge-disjoint Hamilton cycles.
    Decompose {
        #[arg(long = "in")]
        input: PathBuf,
        /// strict | practical | greedy
        #[arg(long, value_parser = parse_mode)]
        mode: Mode,
        #[arg(long)]
        epsilon: Option<f64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Partition block parameter K (structured modes).
        #[arg(long)]
        k: Option<usize>,
        /// Path-cover block count b (structured modes).
        #[arg(long)]
        b: Option<usize>,
        /// Output directory: one cycle per file plus report.json.
        #[arg(long)]
        out: PathBuf,
    },
    /// Check a directory of cycle files against a graph.
    Verify {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        cycles: PathBuf,
    },
    /// Exhaustive small-instance oracles.
    Oracle {
        #[arg(long)]
        graph: PathBuf,
        /// Compute the maximum number of pairwise edge-disjoint Hamilton
        /// cycles (exhaustive; caps at 12 vertices).
        #[arg(long)]
        max_disjoint: bool,
        /// Stop as soon as a family of this size is found.
        #[arg(long)]
        limit: Option<usize>,
    },
}

fn parse_mode(s: &str) -> Result<Mode, String> {
    s.parse().map_err(|e| format!("{e}"))
}

fn load_graph(path: &Path) -> Result<BipartiteDigraph> {
    let text = fs::read_to_string(path)
        .with_context(|| format!("reading graph file {}", path.display()))?;
    format::parse_graph(&text).with_context(|| format!("parsing {}", path.display()))
}

fn main() -> Result<()> {
    match Cli::parse().command {
        Command::Generate {
            kind,
            n,
            d,
            seed,
            out,
        } => generate(kind, n, d, seed, &out),
        Command::Decompose {
            input,
            mode,
            epsilon,
            seed,
            k,
            b,
            out,
        } => run_decompose(&input, mode, epsilon, seed, k, b, &out),
        Command::Verify { graph, cycles } => run_verify(&graph, &cycles),
        Command::Oracle {
            graph,
            max_disjoint,
            limit,
        } => run_oracle(&graph, max_disjoint, limit),
    }
}

fn generate(kind: Kind, n: usize, d: Option<usize>, seed: u64, out: &Path) -> Result<()> {
    let graph = match kind {
        Kind::Complete => generators::complete_bipartite(n),
        Kind::Tournament => generators::diregular_tournament(n, seed)?,
        Kind::Regular => {
            let d = d.context("--kind regular requires --d")?;
            generators::random_regular_bipartite_digraph(n, d, seed)?
        }
    };
    fs::write(out, format::write_graph(&graph))
        .with_context(|| format!("writing {}", out.display()))?;
    println!(
        "wrote {} ({} + {} vertices, {} edges)",
        out.display(),
        graph.n_a(),
        graph.n_b(),
        graph.edge_count()
    );
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn run_decompose(
    input: &Path,
    mode: Mode,
    epsilon: Option<f64>,
    seed: u64,
    k: Option<usize>,
    b: Option<usize>,
    out: &Path,
) -> Result<()> {
    let graph = load_graph(input)?;
    let mut cfg = DecompositionConfig::new(mode, seed);
    if let Some(e) = epsilon {
        cfg.epsilon = e;
    }
    cfg.k = k;
    cfg.b = b;

    let clock = WallClock::new();
    let result = decompose_with_clock(&graph, &cfg, &clock)?;

    fs::create_dir_all(out).with_context(|| format!("creating {}", out.display()))?;
    for (i, cycle) in result.cycles.iter().enumerate() {
        let path = out.join(format!("cycle_{i:04}.txt"));
        fs::write(&path, format::write_cycle(cycle))
            .with_context(|| format!("writing {}", path.display()))?;
    }
    let report_path = out.join("report.json");
    fs::write(&report_path, report::stage_stats_json(&result)?)
        .with_context(|| format!("writing {}", report_path.display()))?;

    println!(
        "{} cycles (d = {}, achieved fraction {:.3}), {} leftover edges",
        result.cycles.len(),
        result.stats.d,
        result.stats.achieved_fraction,
        result.leftover_edges()
    );
    if let Some(failure) = &result.stats.failure {
        println!("note: {failure}");
    }
    println!("cycles and report.json written to {}", out.display());
    Ok(())
}

fn run_verify(graph_path: &Path, cycles_dir: &Path) -> Result<()> {
    let graph = load_graph(graph_path)?;
    let mut entries: Vec<PathBuf> = fs::read_dir(cycles_dir)
        .with_context(|| format!("reading {}", cycles_dir.display()))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| {
            p.file_name()
                .and_then(|s| s.to_str())
                .is_some_and(|s| s.starts_with("cycle_") && s.ends_with(".txt"))
        })
        .collect();
    entries.sort();
    if entries.is_empty() {
        bail!("no cycle_*.txt files in {}", cycles_dir.display());
    }

    let mut cycles = Vec::with_capacity(entries.len());
    let mut all_pass = true;
    for path in &entries {
        let text = fs::read_to_string(path)?;
        let cycle = format::parse_cycle(&text)
            .with_context(|| format!("parsing {}", path.display()))?;
        let report = verify::is_ham_cycle(&graph, &cycle);
        let name = path.file_name().unwrap().to_string_lossy();
        if report.pass() {
            println!("{name}: pass");
        } else {
            all_pass = false;
            println!("{name}: FAIL");
            print!("{report}");
        }
        cycles.push(cycle);
    }
    let disjoint = verify::pairwise_edge_disjoint(&cycles);
    if disjoint.pass() {
        println!("pairwise edge-disjoint: pass ({} cycles)", cycles.len());
    } else {
        all_pass = false;
        println!("pairwise edge-disjoint: FAIL");
        print!("{disjoint}");
    }
    if !all_pass {
        bail!("verification failed");
    }
    Ok(())
}

fn run_oracle(graph_path: &Path, max_disjoint: bool, limit: Option<usize>) -> Result<()> {
    if !max_disjoint {
        bail!("nothing to do: pass --max-disjoint");
    }
    let graph = load_graph(graph_path)?;
    let (count, family) = verify::brute_force_max_disjoint_ham_cycles(&graph, limit)?;
    println!("max edge-disjoint Hamilton cycles: {count}");
    for (i, cycle) in family.iter().enumerate() {
        let tokens: Vec<String> = cycle.vertices().iter().map(|v| v.to_string()).collect();
        println!("witness {i}: {}", tokens.join(" "));
    }
    Ok(())
}
