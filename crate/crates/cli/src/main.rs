use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use contraction::bench::{bench_scaling, BenchConfig, Target};
use contraction::enumerate::{
    enum_ab_connected, enum_avoiding_connected, enum_boundary_partitioned, enum_q_connected,
};
use contraction::families::{connected_labelled, connected_nonisomorphic};
use contraction::gen::{gen_random, rng, Family};
use contraction::io::{emit_witness, parse_edge_list, parse_ov, parse_witness, render_edge_list};
use contraction::pcce::ConstrainedInstance;
use contraction::reductions::{ov_brute, ov_to_chordal, path_via_cycle, SolverBackend};
use contraction::sweep::{self, CheckOutcome};
use contraction::{cyclicity_exact, solve_cycle, solve_path, solve_pcce, verify_witness, Graph, VertexSet, WitnessStructure};

/// Writes to stdout; a closed pipe (`contraction ... | head`) ends the
/// process quietly instead of panicking.
fn emit(args: std::fmt::Arguments) {
    let mut out = std::io::stdout().lock();
    if let Err(e) = out.write_fmt(args) {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        panic!("writing to stdout: {e}");
    }
}

macro_rules! print {
    ($($t:tt)*) => { emit(format_args!($($t)*)) };
}

macro_rules! println {
    ($($t:tt)*) => { emit(format_args!("{}\n", format_args!($($t)*))) };
}

#[derive(Parser)]
#[command(name = "contraction", version, about = "Path and cycle contraction solvers")]
struct Cli {
    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    /// Worker threads for sweeps.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    /// Log verbosity (-v info, -vv debug).
    #[arg(short, long, global = true, action = clap::ArgAction::Count)]
    verbose: u8,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Can at most K contractions turn the graph into a path?
    SolvePath {
        /// Edge-list file, or `-` for stdin.
        graph: PathBuf,
        #[arg(short, long)]
        k: usize,
    },
    /// Can at most K contractions turn the graph into a cycle?
    SolveCycle {
        graph: PathBuf,
        #[arg(short, long)]
        k: usize,
    },
    /// Path contraction with X in the first and Y in the last part.
    SolvePcce {
        graph: PathBuf,
        #[arg(short, long)]
        k: usize,
        /// Comma-separated vertices, e.g. `0,5`.
        #[arg(long, default_value = "")]
        x: String,
        #[arg(long, default_value = "")]
        y: String,
    },
    /// Largest cycle the graph contracts to.
    Cyclicity { graph: PathBuf },
    /// Stream connected sets with prescribed size and boundary size.
    Enumerate {
        graph: PathBuf,
        #[arg(long, value_enum)]
        kind: EnumKind,
        #[arg(long)]
        alpha: usize,
        #[arg(long)]
        beta: usize,
        /// Required set for `q`.
        #[arg(long, default_value = "")]
        q: String,
        /// Avoided sets for `avoiding`.
        #[arg(long, default_value = "")]
        x: String,
        #[arg(long, default_value = "")]
        y: String,
        /// Print only the number of sets.
        #[arg(long)]
        count: bool,
    },
    /// Build the split graph of an Orthogonal Vectors instance.
    ReduceOv {
        ov: PathBuf,
        /// Also decide path contraction of the graph (exit 0 yes, 1 no).
        #[arg(long)]
        solve: bool,
    },
    /// Path contraction by trying end pairs and solving cycle contraction.
    SolvePlanarPath {
        graph: PathBuf,
        #[arg(short, long)]
        k: usize,
    },
    /// Check a witness structure file against a graph.
    Verify {
        graph: PathBuf,
        witness: PathBuf,
        /// Also require cost at most K.
        #[arg(short, long)]
        k: Option<usize>,
    },
    /// Compare a solver with the oracle on every connected graph up to N vertices.
    Sweep {
        #[arg(long, value_enum)]
        kind: SweepKind,
        #[arg(long, default_value_t = 6)]
        n_max: usize,
        /// Larger graphs are taken up to isomorphism.
        #[arg(long, default_value_t = 6)]
        labelled_up_to: usize,
        /// End-set pairs per graph for `pcce`.
        #[arg(long, default_value_t = 5)]
        pairs: usize,
        /// Largest budget for `planar`.
        #[arg(long, default_value_t = 3)]
        k_max: usize,
    },
    /// Print a random graph as an edge list.
    Gen {
        #[arg(long, value_enum)]
        kind: GenKind,
        #[arg(long, default_value_t = 10)]
        n: usize,
        #[arg(long, default_value_t = 0.3)]
        p: f64,
        #[arg(long, default_value_t = 2)]
        chords: usize,
        #[arg(long, default_value_t = 3)]
        rows: usize,
        #[arg(long, default_value_t = 3)]
        cols: usize,
        #[arg(long, default_value_t = 4)]
        clique: usize,
        #[arg(long, default_value_t = 6)]
        independent: usize,
    },
    /// Per-k timing and state counts on chorded cycles, as TSV.
    Bench {
        #[arg(long, value_enum, default_value = "path")]
        target: BenchTarget,
        #[arg(long, default_value_t = 4)]
        k_min: usize,
        #[arg(long, default_value_t = 12)]
        k_max: usize,
        #[arg(long, default_value_t = 3)]
        reps: usize,
        #[arg(long, default_value_t = 2)]
        chords: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum EnumKind {
    Ab,
    Q,
    Avoiding,
    Triples,
}

#[derive(Clone, Copy, ValueEnum)]
enum SweepKind {
    Path,
    Pcce,
    Cycle,
    Cyclicity,
    Planar,
}

#[derive(Clone, Copy, ValueEnum)]
enum GenKind {
    Gnp,
    CyclePlusChords,
    Grid,
    Split,
}

#[derive(Clone, Copy, ValueEnum)]
enum BenchTarget {
    Path,
    Cycle,
}

/// Outcome of a decision command.
enum Answer {
    Yes,
    No,
}

fn read_input(path: &Path) -> Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).context("reading stdin")?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
    }
}

fn read_graph(path: &Path) -> Result<Graph> {
    parse_edge_list(&read_input(path)?).with_context(|| format!("parsing {}", path.display()))
}

fn vertex_list(s: &str) -> Result<VertexSet> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<usize>().with_context(|| format!("bad vertex {t:?}")))
        .collect()
}

fn report(w: Option<WitnessStructure>) -> Answer {
    match w {
        Some(w) => {
            print!("yes\n{}", emit_witness(&w));
            Answer::Yes
        }
        None => {
            println!("no");
            Answer::No
        }
    }
}

fn family(n: usize, labelled_up_to: usize) -> Vec<Graph> {
    if n <= labelled_up_to {
        connected_labelled(n).collect()
    } else {
        connected_nonisomorphic(n)
    }
}

fn run_sweep(cli: &Cli, kind: SweepKind, n_max: usize, labelled_up_to: usize, pairs: usize, k_max: usize) -> Result<Answer> {
    if n_max > 8 {
        bail!("sweeps are limited to 8 vertices");
    }
    let graphs: Vec<Graph> = (1..=n_max).flat_map(|n| family(n, labelled_up_to)).collect();
    let seed = cli.seed;
    let check = |(i, g): (usize, &Graph)| -> contraction::Result<CheckOutcome> {
        match kind {
            SweepKind::Path => sweep::check_path(g),
            SweepKind::Pcce => sweep::check_pcce(g, pairs, &mut rng(seed ^ i as u64)),
            SweepKind::Cycle => sweep::check_cycle(g),
            SweepKind::Cyclicity => sweep::check_cyclicity(g),
            SweepKind::Planar => sweep::check_path_via_cycle(g, k_max),
        }
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cli.jobs.max(1))
        .build()
        .context("building thread pool")?;
    let outcomes: Vec<contraction::Result<CheckOutcome>> =
        pool.install(|| graphs.par_iter().enumerate().map(check).collect());
    let mut total = CheckOutcome::default();
    for o in outcomes {
        total.merge(o?);
    }
    println!(
        "graphs {}\tcomparisons {}\tdisagreements {}",
        graphs.len(),
        total.checks,
        total.issues.len()
    );
    for issue in &total.issues {
        println!("{issue}");
    }
    Ok(if total.issues.is_empty() { Answer::Yes } else { Answer::No })
}

fn run(cli: &Cli) -> Result<Answer> {
    match &cli.command {
        Command::SolvePath { graph, k } => Ok(report(solve_path(&read_graph(graph)?, *k)?)),
        Command::SolveCycle { graph, k } => Ok(report(solve_cycle(&read_graph(graph)?, *k)?)),
        Command::SolvePcce { graph, k, x, y } => {
            let inst = ConstrainedInstance::new(read_graph(graph)?, vertex_list(x)?, vertex_list(y)?, *k)?;
            Ok(report(solve_pcce(&inst)?))
        }
        Command::Cyclicity { graph } => match cyclicity_exact(&read_graph(graph)?)? {
            Some((l, w)) => {
                print!("cyclicity {l}\n{}", emit_witness(&w));
                Ok(Answer::Yes)
            }
            None => {
                println!("none");
                Ok(Answer::No)
            }
        },
        Command::Enumerate { graph, kind, alpha, beta, q, x, y, count } => {
            let g = read_graph(graph)?;
            let (a, b) = (*alpha, *beta);
            let lines: Box<dyn Iterator<Item = String>> = match kind {
                EnumKind::Ab => Box::new(enum_ab_connected(&g, a, b).map(|s| s.to_string())),
                EnumKind::Q => {
                    let q = vertex_list(q)?;
                    Box::new(enum_q_connected(&g, &q, a, b).map(|s| s.to_string()))
                }
                EnumKind::Avoiding => {
                    let (x, y) = (vertex_list(x)?, vertex_list(y)?);
                    Box::new(enum_avoiding_connected(&g, &x, &y, a, b).map(|s| s.to_string()))
                }
                EnumKind::Triples => Box::new(
                    enum_boundary_partitioned(&g, a, b).map(|t| format!("{} {} {}", t.x, t.z, t.y)),
                ),
            };
            if *count {
                println!("{}", lines.count());
            } else {
                lines.for_each(|l| println!("{l}"));
            }
            Ok(Answer::Yes)
        }
        Command::ReduceOv { ov, solve } => {
            let inst = parse_ov(&read_input(ov)?).with_context(|| format!("parsing {}", ov.display()))?;
            let out = ov_to_chordal(&inst);
            println!("# budget {}", out.budget);
            println!("# z_x {} z_y {} z_coords {:?}", out.z_x, out.z_y, out.z_coords);
            println!("# treewidth claim {}", out.treewidth_claim);
            match ov_brute(&inst) {
                Some((i, j)) => println!("# orthogonal pair x{i} y{j}"),
                None => println!("# no orthogonal pair"),
            }
            if inst.has_zero_vector() {
                println!("# zero vector present: the graph equivalence does not apply");
            }
            print!("{}", render_edge_list(&out.g));
            if *solve {
                let answer = solve_path(&out.g, out.budget)?;
                println!("# path contraction: {}", if answer.is_some() { "yes" } else { "no" });
                return Ok(if answer.is_some() { Answer::Yes } else { Answer::No });
            }
            Ok(Answer::Yes)
        }
        Command::SolvePlanarPath { graph, k } => {
            Ok(report(path_via_cycle(&read_graph(graph)?, *k, &SolverBackend)?))
        }
        Command::Verify { graph, witness, k } => {
            let g = read_graph(graph)?;
            // Accept solver output directly: a leading `yes` line is skipped.
            let text = read_input(witness)?;
            let text = match text.trim_start().strip_prefix("yes\n") {
                Some(rest) => format!("#\n{rest}"),
                None => text,
            };
            let w = parse_witness(&text).with_context(|| format!("parsing {}", witness.display()))?;
            if let Err(v) = verify_witness(&g, &w) {
                println!("invalid: {v}");
                return Ok(Answer::No);
            }
            if let Some(k) = k.filter(|&k| w.cost() > k) {
                println!("invalid: cost {} exceeds {k}", w.cost());
                return Ok(Answer::No);
            }
            println!("valid {} of length {}, cost {}", w.shape, w.len(), w.cost());
            Ok(Answer::Yes)
        }
        Command::Sweep { kind, n_max, labelled_up_to, pairs, k_max } => {
            run_sweep(cli, *kind, *n_max, *labelled_up_to, *pairs, *k_max)
        }
        Command::Gen { kind, n, p, chords, rows, cols, clique, independent } => {
            let family = match kind {
                GenKind::Gnp => Family::Gnp { n: *n, p: *p },
                GenKind::CyclePlusChords => Family::CyclePlusChords { n: *n, chords: *chords },
                GenKind::Grid => Family::Grid { rows: *rows, cols: *cols },
                GenKind::Split => Family::Split { clique: *clique, independent: *independent, p: *p },
            };
            print!("{}", render_edge_list(&gen_random(&family, cli.seed)?));
            Ok(Answer::Yes)
        }
        Command::Bench { target, k_min, k_max, reps, chords } => {
            let config = BenchConfig {
                target: match target {
                    BenchTarget::Path => Target::Path,
                    BenchTarget::Cycle => Target::Cycle,
                },
                k_min: *k_min,
                k_max: *k_max,
                repetitions: *reps,
                chords: *chords,
                seed: cli.seed,
            };
            let report = bench_scaling(&config)?;
            print!("{}", report.to_tsv());
            let over = report.bound_violations();
            if !over.is_empty() {
                println!("# table size bound exceeded at k = {over:?}");
            }
            Ok(Answer::Yes)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let level = match cli.verbose {
        0 => log::LevelFilter::Warn,
        1 => log::LevelFilter::Info,
        _ => log::LevelFilter::Debug,
    };
    env_logger::Builder::new().filter_level(level).init();
    match run(&cli) {
        Ok(Answer::Yes) => ExitCode::SUCCESS,
        Ok(Answer::No) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
