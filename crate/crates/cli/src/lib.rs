//! Command implementations behind the `pctree` binary.
//!
//! Every command returns a [`Reply`] holding the exit code and the exact
//! stdout text, so tests can drive commands without spawning processes.

use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use pctree_core::oracle::{max_colored_tree_bounded, oracle_bound};
use pctree_core::{
    build_pc_tree, build_rainbow_tree_from, check_tree, generate, parse_graph, parse_tree, random_connected_graph,
    recognize, reduce, write_graph, write_tree, CnfFormula, EdgeColoredGraph, FamilyTag, NoWitness, SolveError,
    SolveOutcome, TreeMode, DEFAULT_DELTA0,
};

pub const EXIT_TREE: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "pctree",
    version,
    about = "Properly colored and rainbow trees in edge-colored graphs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Find a properly colored tree of order min(n, 2δᶜ+1) or report NO.
    Solve {
        graph: PathBuf,
        #[arg(long, default_value_t = DEFAULT_DELTA0)]
        delta0: usize,
        /// Write a JSON run report here.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Rainbow tree in a star-colored graph.
    Rainbow {
        graph: PathBuf,
        /// Root vertex (1-indexed).
        #[arg(long, default_value_t = 1)]
        root: usize,
    },
    /// Largest colored tree by exhaustive search (small graphs only).
    Oracle {
        graph: PathBuf,
        #[arg(long, value_enum, default_value_t = Mode::Proper)]
        mode: Mode,
    },
    /// Generate an extremal family member (`G1`..`G6`) or a random graph (`random`).
    Gen(GenArgs),
    /// Reduce a DIMACS CNF formula to a star-colored graph.
    Reduce {
        cnf: PathBuf,
        /// Graph output file; stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Reduction map sidecar; defaults to `<out>.json`.
        #[arg(long)]
        map: Option<PathBuf>,
    },
    /// Check a tree file against a graph.
    Verify {
        graph: PathBuf,
        tree: PathBuf,
        #[arg(long, value_enum, default_value_t = Mode::Proper)]
        mode: Mode,
    },
    /// Match a graph against extremal families, first tag wins.
    Recognize {
        graph: PathBuf,
        #[arg(long, value_delimiter = ',', default_values_t = FamilyTag::ALL.to_vec())]
        tags: Vec<FamilyTag>,
    },
}

#[derive(Debug, Args)]
pub struct GenArgs {
    /// A family tag or `random`.
    pub kind: String,
    #[arg(long, default_value_t = 0)]
    pub m: usize,
    #[arg(long, default_value_t = 1)]
    pub k: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long, default_value_t = 0.5)]
    pub p: f64,
    #[arg(long, default_value_t = 3)]
    pub colors: u32,
    /// Graph output file; stdout when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Sidecar file; defaults to `<out>.json`.
    #[arg(long)]
    pub sidecar: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Rainbow,
    Proper,
}

impl From<Mode> for TreeMode {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Rainbow => TreeMode::Rainbow,
            Mode::Proper => TreeMode::ProperlyColored,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reply {
    pub code: i32,
    pub stdout: String,
}

impl Reply {
    fn tree(stdout: String) -> Self {
        Reply {
            code: EXIT_TREE,
            stdout,
        }
    }

    fn no(stdout: String) -> Self {
        Reply { code: EXIT_NO, stdout }
    }
}

/// Runs a parsed command. Failures carry their exit code: 3 for broken
/// internal guarantees, 2 for everything else.
pub fn run(cli: &Cli) -> Result<Reply, (i32, anyhow::Error)> {
    let result = match &cli.command {
        Command::Solve { graph, delta0, report } => cmd_solve(graph, *delta0, report.as_deref()),
        Command::Rainbow { graph, root } => cmd_rainbow(graph, *root),
        Command::Oracle { graph, mode } => cmd_oracle(graph, *mode),
        Command::Gen(args) => cmd_gen(args),
        Command::Reduce { cnf, out, map } => cmd_reduce(cnf, out.as_deref(), map.as_deref()),
        Command::Verify { graph, tree, mode } => cmd_verify(graph, tree, *mode),
        Command::Recognize { graph, tags } => cmd_recognize(graph, tags),
    };
    result.map_err(|e| (exit_code_for(&e), e))
}

pub fn exit_code_for(err: &anyhow::Error) -> i32 {
    match err.downcast_ref::<SolveError>() {
        Some(SolveError::InternalGuaranteeViolation(_) | SolveError::NoValidRepair) => EXIT_INTERNAL,
        _ => EXIT_INPUT,
    }
}

pub fn read_graph(path: &Path) -> anyhow::Result<EdgeColoredGraph> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_graph(&text).with_context(|| format!("parsing {}", path.display()))
}

fn write_or_capture(path: Option<&Path>, text: String) -> anyhow::Result<String> {
    match path {
        Some(p) => {
            fs::write(p, text).with_context(|| format!("writing {}", p.display()))?;
            Ok(String::new())
        }
        None => Ok(text),
    }
}

fn sidecar_path(explicit: Option<&Path>, out: Option<&Path>) -> Option<PathBuf> {
    explicit.map(Path::to_path_buf).or_else(|| {
        out.map(|o| {
            let mut s = o.as_os_str().to_owned();
            s.push(".json");
            PathBuf::from(s)
        })
    })
}

fn write_json<T: Serialize>(path: &Path, value: &T) -> anyhow::Result<()> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

pub fn cmd_solve(path: &Path, delta0: usize, report: Option<&Path>) -> anyhow::Result<Reply> {
    let graph = read_graph(path)?;
    let solution = build_pc_tree(&graph, delta0)?;
    if let Some(report_path) = report {
        let mut value = serde_json::to_value(&solution.report)?;
        if let SolveOutcome::No(NoWitness::ExtremalFamily(inst)) = &solution.outcome {
            value["family"] = serde_json::to_value(inst)?;
        }
        write_json(report_path, &value)?;
    }
    Ok(match &solution.outcome {
        SolveOutcome::Tree(tree) => Reply::tree(write_tree(&graph, tree)),
        SolveOutcome::No(witness) => Reply::no(format!("NO {}\n", witness.kind())),
    })
}

pub fn cmd_rainbow(path: &Path, root: usize) -> anyhow::Result<Reply> {
    let graph = read_graph(path)?;
    if root == 0 {
        bail!("root is 1-indexed");
    }
    let run = build_rainbow_tree_from(&graph, root - 1)?;
    Ok(Reply::tree(write_tree(&graph, &run.tree)))
}

pub fn cmd_oracle(path: &Path, mode: Mode) -> anyhow::Result<Reply> {
    let graph = read_graph(path)?;
    let (_, tree) = max_colored_tree_bounded(&graph, mode.into(), oracle_bound())?;
    Ok(Reply::tree(write_tree(&graph, &tree)))
}

#[derive(Serialize)]
struct RandomSidecar {
    kind: &'static str,
    n: usize,
    p: f64,
    colors: u32,
    seed: u64,
}

pub fn cmd_gen(args: &GenArgs) -> anyhow::Result<Reply> {
    let sidecar = sidecar_path(args.sidecar.as_deref(), args.out.as_deref());
    let graph = if args.kind.eq_ignore_ascii_case("random") {
        let Some(n) = args.n else {
            bail!("`gen random` needs --n")
        };
        if n == 0 {
            bail!("--n must be positive");
        }
        if !(0.0..=1.0).contains(&args.p) {
            bail!("--p must lie in [0, 1]");
        }
        let graph = random_connected_graph(n, args.p, args.colors, args.seed);
        if let Some(path) = &sidecar {
            let meta = RandomSidecar {
                kind: "random",
                n,
                p: args.p,
                colors: args.colors,
                seed: args.seed,
            };
            write_json(path, &meta)?;
        }
        graph
    } else {
        let tag: FamilyTag = args.kind.parse().map_err(anyhow::Error::msg)?;
        let (graph, inst) = generate(tag, args.m, args.k, args.seed)?;
        if let Some(path) = &sidecar {
            write_json(path, &inst)?;
        }
        graph
    };
    Ok(Reply::tree(write_or_capture(args.out.as_deref(), write_graph(&graph))?))
}

pub fn cmd_reduce(cnf: &Path, out: Option<&Path>, map: Option<&Path>) -> anyhow::Result<Reply> {
    let text = fs::read_to_string(cnf).with_context(|| format!("reading {}", cnf.display()))?;
    let formula = CnfFormula::parse_dimacs(&text).with_context(|| format!("parsing {}", cnf.display()))?;
    let (graph, reduction) = reduce(&formula)?;
    if let Some(path) = sidecar_path(map, out) {
        write_json(&path, &reduction)?;
    }
    Ok(Reply::tree(write_or_capture(out, write_graph(&graph))?))
}

pub fn cmd_verify(graph_path: &Path, tree_path: &Path, mode: Mode) -> anyhow::Result<Reply> {
    let graph = read_graph(graph_path)?;
    let text = fs::read_to_string(tree_path).with_context(|| format!("reading {}", tree_path.display()))?;
    let tree = parse_tree(&graph, &text, mode.into()).with_context(|| format!("parsing {}", tree_path.display()))?;
    Ok(match check_tree(&graph, &tree) {
        Ok(()) => Reply::tree(format!("ok {}\n", tree.order())),
        Err(defect) => Reply::no(format!("invalid {defect}\n")),
    })
}

pub fn cmd_recognize(path: &Path, tags: &[FamilyTag]) -> anyhow::Result<Reply> {
    let graph = read_graph(path)?;
    Ok(match recognize(&graph, tags) {
        Some(inst) => Reply::tree(serde_json::to_string(&inst)? + "\n"),
        None => Reply::no("none\n".to_string()),
    })
}
