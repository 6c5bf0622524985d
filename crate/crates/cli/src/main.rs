//! `wiener-trees`: compute, generate, check and time Wiener indices of the
//! binomial, Fibonacci and binary Fibonacci tree families.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 usage or input error,
//! 3 internal invariant violation.

mod bench;
mod verify;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use wiener_trees::closed_forms::{evaluate, Method};
use wiener_trees::oracle::{wiener_bfs, wiener_linear};
use wiener_trees::tree::DEFAULT_NODE_BUDGET;
use wiener_trees::{Error, RootedTree, TreeFamily};

/// Node budget for the tree-based tiers of `verify` and `bench`.
const DEFAULT_CHECK_BUDGET: usize = 1_000_000;

#[derive(Parser)]
#[command(
    name = "wiener-trees",
    version,
    about = "Exact Wiener indices of recursive tree families"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Binomial,
    Fibonacci,
    BinaryFibonacci,
}

impl From<Family> for TreeFamily {
    fn from(f: Family) -> Self {
        match f {
            Family::Binomial => TreeFamily::Binomial,
            Family::Fibonacci => TreeFamily::Fibonacci,
            Family::BinaryFibonacci => TreeFamily::BinaryFibonacci,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Closed,
    Recurrence,
    Replay,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Closed => Method::ClosedForm,
            MethodArg::Recurrence => Method::Recurrence,
            MethodArg::Replay => Method::Replay,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Algo {
    Bfs,
    Linear,
}

#[derive(Subcommand)]
enum Command {
    /// Print the Wiener index of the order-K tree without building it.
    ClosedForm {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long, allow_negative_numbers = true)]
        order: i64,
        #[arg(long, value_enum, default_value = "closed")]
        method: MethodArg,
        #[arg(long)]
        json: bool,
    },
    /// Write the order-K tree as an edge-list file.
    Generate {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long, allow_negative_numbers = true)]
        order: i64,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
        node_budget: usize,
    },
    /// Compute the Wiener index of a tree read from an edge-list file.
    Compute {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_enum, default_value = "linear")]
        algo: Algo,
        #[arg(long)]
        json: bool,
    },
    /// Cross-check every method and both oracles for each order up to K.
    Verify {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long, allow_negative_numbers = true)]
        max_order: i64,
        #[arg(long, default_value_t = DEFAULT_CHECK_BUDGET)]
        node_budget: usize,
        #[arg(long)]
        json: bool,
    },
    /// Time the closed-form, linear and quadratic algorithms per order.
    Bench {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long, allow_negative_numbers = true)]
        max_order: i64,
        /// Largest tree the linear tier will build.
        #[arg(long, default_value_t = DEFAULT_CHECK_BUDGET)]
        node_budget: usize,
        /// Largest tree the quadratic tier will run on.
        #[arg(long, default_value_t = bench::DEFAULT_BFS_LIMIT)]
        bfs_limit: usize,
        #[arg(long)]
        json: bool,
    },
}

/// A failure with its exit code.
#[derive(Debug)]
pub(crate) struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::NotDivisible { .. } | Error::DivisionByZero => 3,
            _ => 2,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

#[derive(Serialize)]
struct ValueJson<'a> {
    family: &'a str,
    order: i64,
    method: &'a str,
    value: String,
}

#[derive(Serialize)]
struct ComputeJson<'a> {
    algorithm: &'a str,
    nodes: usize,
    value: String,
}

fn print_json<T: Serialize>(value: &T) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("serializable")
    );
}

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    match cli.command {
        Command::ClosedForm {
            family,
            order,
            method,
            json,
        } => {
            let result = evaluate(family.into(), order, method.into())?;
            if json {
                print_json(&ValueJson {
                    family: result.family.name(),
                    order: result.order,
                    method: result.method.name(),
                    value: result.value.to_string(),
                });
            } else {
                println!("{}", result.value);
            }
        }
        Command::Generate {
            family,
            order,
            out,
            node_budget,
        } => {
            let tree = TreeFamily::from(family).generate(order, node_budget)?;
            fs::write(&out, tree.serialize())
                .map_err(|e| Failure::usage(format!("cannot write {}: {e}", out.display())))?;
        }
        Command::Compute { input, algo, json } => {
            let text = fs::read_to_string(&input)
                .map_err(|e| Failure::usage(format!("cannot read {}: {e}", input.display())))?;
            let tree = RootedTree::parse(&text)
                .map_err(|e| Failure::usage(format!("{}: {e}", input.display())))?;
            let (name, value) = match algo {
                Algo::Bfs => ("bfs", wiener_bfs(&tree)?),
                Algo::Linear => ("linear", wiener_linear(&tree)?),
            };
            if json {
                print_json(&ComputeJson {
                    algorithm: name,
                    nodes: tree.len(),
                    value: value.to_string(),
                });
            } else {
                println!("{value}");
            }
        }
        Command::Verify {
            family,
            max_order,
            node_budget,
            json,
        } => {
            let report = verify::verify(family.into(), max_order, node_budget)?;
            if json {
                print_json(&report);
            } else {
                print!("{}", report.render());
            }
            if !report.all_match() {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Bench {
            family,
            max_order,
            node_budget,
            bfs_limit,
            json,
        } => {
            let rows = bench::bench(family.into(), max_order, node_budget, bfs_limit)?;
            if json {
                print_json(&rows);
            } else {
                print!("{}", bench::render(&rows));
            }
            if rows.iter().any(|r| !r.consistent) {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}
