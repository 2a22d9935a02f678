//! `impartial`: remoteness and Sprague-Grundy queries from the command line.
//!
//! Exit codes: 0 success, 1 oracle mismatch or inconsistent check, 2 bad
//! input, 3 capacity or overflow. `REMOTENESS_MAX_NODES` bounds every
//! engine evaluation.

mod compound;
mod failure;
mod query;
mod table;
mod verify;

use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use impartial::formats::GamePosition;
use impartial::hypergraph::{Hypergraph, HypergraphSpec};
use impartial::moore::has_maximal_move;
use impartial::vertex_cover::{min_vertex_cover_bruteforce, reduce_vertex_cover, VcInstance};
use impartial::wythoff::WythoffParams;
use num_bigint::BigUint;
use serde::Serialize;
use serde_json::json;

use compound::CompoundSpec;
use failure::{CliResult, Failure};
use query::Limits;

#[derive(Parser)]
#[command(name = "impartial", version, about = "Smith remoteness and Sprague-Grundy values of impartial games")]
struct Cli {
    /// Print JSON on one line.
    #[arg(long, global = true)]
    compact: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Remoteness, outcome class and an optimal move.
    Remoteness {
        #[command(subcommand)]
        game: GameArg,
    },
    /// Like `remoteness`, with the Sprague-Grundy value always included.
    Sg {
        #[command(subcommand)]
        game: GameArg,
    },
    /// CSV tables.
    Table {
        #[command(subcommand)]
        table: TableArg,
    },
    /// Compare the fast solvers with the engine on every small position.
    Verify {
        #[command(subcommand)]
        target: VerifyArg,
    },
    /// Moore's NIM instance encoding a vertex cover question.
    ReduceVc {
        /// `{"vertices":[..],"edges":[[u,v],..],"c":int}`; `-` reads stdin.
        #[arg(long)]
        file: PathBuf,
        /// Overrides `c` from the file.
        #[arg(long)]
        cover_size: Option<usize>,
        /// Also decide both questions and check that they agree.
        #[arg(long)]
        check: bool,
    },
    /// Conjunctive or disjunctive sums of positions.
    Compound {
        /// `{"mode":"conjunctive"|"disjunctive","components":[..]}`; `-` reads stdin.
        #[arg(long)]
        file: PathBuf,
        /// Cross-check on the explicit product game.
        #[arg(long)]
        oracle: bool,
    },
}

#[derive(Subcommand)]
enum GameArg {
    /// Euclid's game on (x, y).
    Euclid { x: BigUint, y: BigUint },
    /// Moore's NIM_k.
    Moore {
        #[arg(long)]
        k: usize,
        #[arg(long, value_delimiter = ',', num_args = 1..)]
        piles: Vec<BigUint>,
    },
    /// Two-pile Wythoff variant with parameters a and b.
    Wythoff {
        #[arg(long)]
        a: u64,
        #[arg(long)]
        b: u64,
        x: u64,
        y: u64,
    },
    /// Hypergraph NIM.
    Hypergraph {
        /// `{"n":int,"edges":[[1-based vertex,..],..]}`; `-` reads stdin.
        #[arg(long)]
        file: PathBuf,
        #[arg(long, value_delimiter = ',', num_args = 1..)]
        piles: Vec<u64>,
    },
    /// Explicit game graph.
    Graph {
        /// `{"nodes":[..],"edges":[[from,to],..],"start":id}`; `-` reads stdin.
        #[arg(long)]
        file: PathBuf,
    },
    /// One-pile NIM.
    Nim { pile: u64 },
    /// Any position in JSON form, inline or from a file.
    Json {
        text: Option<String>,
        #[arg(long, conflicts_with = "text")]
        file: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum TableArg {
    /// Rows `m,x_m,y_m`.
    Wythoff {
        #[arg(long)]
        a: u64,
        #[arg(long)]
        b: u64,
        #[arg(long)]
        max_m: usize,
    },
    /// Rows `x,y,remoteness,class` for 1 ≤ x, y ≤ max.
    Euclid {
        #[arg(long)]
        max: u64,
    },
}

#[derive(Subcommand)]
enum VerifyArg {
    /// All 1 ≤ x, y ≤ max.
    Euclid {
        #[arg(long)]
        max: u64,
    },
    /// All 0 ≤ x, y ≤ max.
    Wythoff {
        #[arg(long)]
        a: u64,
        #[arg(long)]
        b: u64,
        #[arg(long)]
        max: u64,
    },
    /// All n-pile positions with piles ≤ max-pile.
    Moore {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        max_pile: u32,
    },
    /// All positions with piles ≤ max-pile on an MTF hypergraph.
    Hypergraph {
        #[arg(long)]
        file: PathBuf,
        #[arg(long)]
        max_pile: u64,
    },
}

fn read_input(path: &Path) -> CliResult<String> {
    if path == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
    }
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> CliResult<T> {
    Ok(serde_json::from_str(&read_input(path)?)?)
}

fn position(game: GameArg) -> CliResult<GamePosition> {
    Ok(match game {
        GameArg::Euclid { x, y } => GamePosition::Euclid { x, y },
        GameArg::Moore { k, piles } => GamePosition::Moore { k, piles },
        GameArg::Wythoff { a, b, x, y } => GamePosition::Wythoff { a, b, x, y },
        GameArg::Hypergraph { file, piles } => GamePosition::Hypergraph {
            piles,
            hypergraph: Some(read_json(&file)?),
        },
        GameArg::Graph { file } => GamePosition::Graph(read_json(&file)?),
        GameArg::Nim { pile } => GamePosition::Nim { pile },
        GameArg::Json { text, file } => match (text, file) {
            (Some(t), None) => serde_json::from_str(&t)?,
            (None, Some(f)) => read_json(&f)?,
            _ => return Err(Failure::usage("give a JSON position inline or with --file")),
        },
    })
}

fn print_json<T: Serialize>(value: &T, compact: bool) -> CliResult<()> {
    let text = if compact {
        serde_json::to_string(value)?
    } else {
        serde_json::to_string_pretty(value)?
    };
    let mut out = io::stdout().lock();
    writeln!(out, "{text}")?;
    Ok(())
}

fn reduce_vc(file: &Path, cover_size: Option<usize>, check: bool, compact: bool) -> CliResult<()> {
    let mut inst: VcInstance = read_json(file)?;
    if let Some(c) = cover_size {
        inst.c = c;
    }
    let reduction = reduce_vertex_cover(&inst)?;
    if !check {
        return print_json(&reduction, compact);
    }
    let maximal_move = has_maximal_move(&reduction.position())?;
    let min_cover = min_vertex_cover_bruteforce(inst.vertices.len(), &inst.edge_indices()?)?;
    let consistent = maximal_move == (min_cover <= inst.c);
    let mut out = serde_json::to_value(&reduction)?;
    out["check"] = json!({
        "maximal_move": maximal_move,
        "min_vertex_cover": min_cover,
        "consistent": consistent,
    });
    print_json(&out, compact)?;
    if !consistent {
        return Err(Failure::mismatch(format!(
            "maximal move {maximal_move} but minimum vertex cover {min_cover} with c = {}",
            inst.c
        )));
    }
    Ok(())
}

fn run(cli: Cli) -> CliResult<()> {
    let limits = Limits::from_env()?;
    let compact = cli.compact;
    let stdout = || io::BufWriter::new(io::stdout().lock());
    match cli.command {
        Command::Remoteness { game } => print_json(&query::remoteness(&position(game)?, limits)?, compact),
        Command::Sg { game } => print_json(&query::sg(&position(game)?, limits)?, compact),
        Command::Table { table } => match table {
            TableArg::Wythoff { a, b, max_m } => table::wythoff(stdout(), WythoffParams::new(a, b)?, max_m),
            TableArg::Euclid { max } => table::euclid(stdout(), max),
        },
        Command::Verify { target } => match target {
            VerifyArg::Euclid { max } => verify::euclid(stdout(), max, limits),
            VerifyArg::Wythoff { a, b, max } => verify::wythoff(stdout(), WythoffParams::new(a, b)?, max, limits),
            VerifyArg::Moore { n, k, max_pile } => verify::moore(stdout(), n, k, max_pile, limits),
            VerifyArg::Hypergraph { file, max_pile } => {
                let spec: HypergraphSpec = read_json(&file)?;
                verify::hypergraph(stdout(), Hypergraph::from_spec(&spec)?, max_pile, limits)
            }
        },
        Command::ReduceVc { file, cover_size, check } => reduce_vc(&file, cover_size, check, compact),
        Command::Compound { file, oracle } => {
            let spec: CompoundSpec = read_json(&file)?;
            print_json(&compound::evaluate(&spec, oracle, limits)?, compact)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("impartial: {f}");
            ExitCode::from(f.code)
        }
    }
}
