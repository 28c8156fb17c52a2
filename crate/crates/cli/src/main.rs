//! `lightsout` command-line tool.
//!
//! JSON goes to stdout, diagnostics to stderr. Exit codes: 0 success,
//! 1 valid negative answer (unsolvable, rejected certificate, table
//! violation), 2 usage or input error, 3 internal invariant violation.

use std::fs;
use std::io::{self, Read};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use lightsout::classify::{self, VertexProfile};
use lightsout::graph::{random_graph, random_tree};
use lightsout::structure::{self, Certificate, Verdict};
use lightsout::{oracle, solver, BitVec, Error, Graph};

#[derive(Parser, Debug)]
#[command(name = "lightsout", version)]
#[command(about = "Solve and analyze the Lights Out game on simple graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Nullity, rank, null patterns and per-vertex activation profile
    Analyze {
        /// Edge-list file ("-" for stdin)
        graph: PathBuf,
    },
    /// Solve a configuration given as a bitstring (first character = vertex 0)
    Solve { graph: PathBuf, config: String },
    /// Vertex-removal chain certificate
    Chain { graph: PathBuf },
    /// Minimal partition of a tree into always-solvable subtrees
    Partition { graph: PathBuf },
    /// Decomposition certificate of an always-solvable tree
    Decompose { graph: PathBuf },
    /// Check any certificate against a graph
    Verify {
        graph: PathBuf,
        certificate: PathBuf,
        /// Also check that a partition certificate has the minimum block count
        #[arg(long)]
        minimal: bool,
    },
    /// Random joins checked against the connection-type table
    TableCheck {
        #[arg(long, default_value_t = 2000, value_parser = clap::value_parser!(u64).range(1..))]
        trials: u64,
        #[arg(long = "max-size", default_value_t = 12, value_parser = clap::value_parser!(u64).range(1..))]
        max_size: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Brute-force ground truth for small graphs
    Oracle {
        #[command(subcommand)]
        command: OracleCommand,
    },
    /// Generate a random graph as an edge list
    Gen {
        #[command(subcommand)]
        command: GenCommand,
    },
}

#[derive(Subcommand, Debug)]
enum OracleCommand {
    /// Every solving pattern of a configuration (n ≤ 20)
    Enumerate { graph: PathBuf, config: String },
    /// Per-vertex activation counts over all all-ones solutions (n ≤ 20)
    Stats { graph: PathBuf },
    /// Exact minimum partition into connected always-solvable subgraphs (n ≤ 10)
    Pi { graph: PathBuf },
}

#[derive(Subcommand, Debug)]
enum GenCommand {
    /// Uniform random labeled tree
    Tree {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// G(n, p) random graph
    Graph {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

enum Failure {
    Input(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvariantViolation(_) => Failure::Internal(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

/// What a successful command prints, and whether the answer was negative.
struct Output {
    stdout: String,
    negative: bool,
}

impl Output {
    fn json<T: Serialize>(value: &T, negative: bool) -> Self {
        let mut stdout = serde_json::to_string_pretty(value).expect("reports serialize");
        stdout.push('\n');
        Output { stdout, negative }
    }
}

#[derive(Serialize)]
struct AnalysisReport {
    n: usize,
    edge_count: usize,
    nullity: usize,
    rank: usize,
    always_solvable: bool,
    activation: Vec<i8>,
    profiles: Vec<VertexProfile>,
    null_patterns: Vec<BitVec>,
}

fn read_input(path: &Path) -> Result<String, Failure> {
    if path == Path::new("-") {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::Input(format!("reading stdin: {e}")))?;
        Ok(s)
    } else {
        fs::read_to_string(path)
            .map_err(|e| Failure::Input(format!("reading {}: {e}", path.display())))
    }
}

fn load_graph(path: &Path) -> Result<Graph, Failure> {
    Graph::parse_edge_list(&read_input(path)?)
        .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn parse_config(g: &Graph, s: &str) -> Result<BitVec, Failure> {
    let c: BitVec = s.parse()?;
    if c.len() != g.n() {
        return Err(Failure::Input(format!(
            "configuration has length {} but the graph has {} vertices",
            c.len(),
            g.n()
        )));
    }
    Ok(c)
}

fn verdict_json(kind: &str, verdict: &Verdict) -> Output {
    let body = match verdict {
        Verdict::Valid => json!({ "certificate": kind, "valid": true }),
        Verdict::Invalid(reason) => {
            json!({ "certificate": kind, "valid": false, "reason": reason })
        }
    };
    Output::json(&body, !verdict.is_valid())
}

fn run(cli: Cli) -> Result<Output, Failure> {
    match cli.command {
        Command::Analyze { graph } => {
            let g = load_graph(&graph)?;
            let profiles = classify::profile(&g)?;
            let nullity = solver::nullity(&g);
            let report = AnalysisReport {
                n: g.n(),
                edge_count: g.edge_count(),
                nullity,
                rank: g.n() - nullity,
                always_solvable: nullity == 0,
                activation: profiles.iter().map(|p| p.activation.value()).collect(),
                profiles,
                null_patterns: solver::null_patterns(&g),
            };
            Ok(Output::json(&report, false))
        }
        Command::Solve { graph, config } => {
            let g = load_graph(&graph)?;
            let c = parse_config(&g, &config)?;
            Ok(match solver::solve_config(&g, &c)? {
                Some(set) => Output::json(
                    &json!({
                        "solvable": true,
                        "particular": set.particular,
                        "kernel_basis": set.kernel_basis,
                    }),
                    false,
                ),
                None => Output::json(&json!({ "solvable": false }), true),
            })
        }
        Command::Chain { graph } => {
            let g = load_graph(&graph)?;
            Ok(Output::json(&structure::build_chain(&g)?, false))
        }
        Command::Partition { graph } => {
            let g = load_graph(&graph)?;
            Ok(Output::json(&structure::min_pass_tree(&g)?, false))
        }
        Command::Decompose { graph } => {
            let g = load_graph(&graph)?;
            Ok(Output::json(&structure::decompose_tree(&g)?, false))
        }
        Command::Verify {
            graph,
            certificate,
            minimal,
        } => {
            let g = load_graph(&graph)?;
            let text = read_input(&certificate)?;
            let cert: Certificate = serde_json::from_str(&text).map_err(|e| {
                Failure::Input(format!(
                    "{}: not a recognized certificate: {e}",
                    certificate.display()
                ))
            })?;
            Ok(match &cert {
                Certificate::Chain(c) => verdict_json("chain", &structure::verify_chain(&g, c)),
                Certificate::Pass(c) => {
                    verdict_json("partition", &structure::verify_pass(&g, c, minimal)?)
                }
                Certificate::Decomposition(c) => {
                    verdict_json("decomposition", &structure::verify_decomposition(&g, c))
                }
            })
        }
        Command::TableCheck {
            trials,
            max_size,
            seed,
        } => {
            let summary = structure::run_table_check(trials as usize, max_size as usize, seed)?;
            let body = json!({
                "ok": summary.ok(),
                "all_rows_hit": summary.min_row_hits() > 0,
                "summary": summary,
            });
            Ok(Output::json(&body, !summary.ok()))
        }
        Command::Oracle { command } => match command {
            OracleCommand::Enumerate { graph, config } => {
                let g = load_graph(&graph)?;
                let c = parse_config(&g, &config)?;
                let solutions = oracle::enumerate_solutions(&g, &c)?;
                let body = json!({ "count": solutions.len(), "solutions": solutions });
                Ok(Output::json(&body, solutions.is_empty()))
            }
            OracleCommand::Stats { graph } => {
                let g = load_graph(&graph)?;
                let stats = oracle::activation_stats(&g)?;
                let classes = stats
                    .classes()
                    .map(|cs| cs.into_iter().map(|c| c.value()).collect::<Vec<_>>());
                let body = json!({ "stats": stats, "activation": classes });
                Ok(Output::json(&body, false))
            }
            OracleCommand::Pi { graph } => {
                let g = load_graph(&graph)?;
                let (pi, witness) = oracle::pi_partition_oracle(&g)?;
                Ok(Output::json(
                    &json!({ "pi": pi, "witness": witness }),
                    false,
                ))
            }
        },
        Command::Gen { command } => {
            let g = match command {
                GenCommand::Tree { n, seed } => random_tree(n as usize, seed)?,
                GenCommand::Graph { n, p, seed } => random_graph(n as usize, p, seed)?,
            };
            Ok(Output {
                stdout: g.to_edge_list(),
                negative: false,
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            print!("{}", out.stdout);
            ExitCode::from(if out.negative { 1 } else { 0 })
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(3)
        }
    }
}
