//! `sombor` — polymer graph construction and exact Sombor-index
//! arithmetic on the command line.
//!
//! Exit codes: 0 on success (and on verification runs with no failing
//! check), 1 when a verification campaign records at least one failure,
//! 2 on usage or input errors.

use std::fs;
use std::io::{self, Read as _, Write as _};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use sombor_core::edgelist::{format_edge_list, parse_edge_list};
use sombor_core::families::FamilySpec;
use sombor_core::graph::Graph;
use sombor_core::index::sombor_index;
use sombor_core::verify::{
    parse_operators, verify_bounds, verify_families, BoundsConfig, GridConfig, Report,
};

#[derive(Parser)]
#[command(
    name = "sombor",
    version,
    about = "Polymer graphs and their exact Sombor indices"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a family member and write its edge list.
    Generate {
        /// Family spec, e.g. `spiro:q=6,h=2,k=8` or `q:m=5,n=4`.
        #[arg(long)]
        family: String,
        /// Output file; `-` for stdout.
        #[arg(long, default_value = "-")]
        out: String,
    },
    /// Compute the exact Sombor index of an edge-list graph.
    Compute {
        /// Input file; `-` for stdin.
        #[arg(long = "in", default_value = "-")]
        input: String,
        /// Emit a JSON object instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Print the degree-pair edge census of an edge-list graph.
    Census {
        /// Input file; `-` for stdin.
        #[arg(long = "in", default_value = "-")]
        input: String,
        /// Emit a JSON array instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Run a verification campaign and emit one JSON record per check.
    #[command(subcommand)]
    Verify(VerifyCommand),
}

#[derive(Subcommand)]
enum VerifyCommand {
    /// Check closed forms and censuses across a parameter grid.
    Families {
        /// `default` or a path to a JSON grid config.
        #[arg(long, default_value = "default")]
        grid: String,
        /// Write the JSONL records to this file instead of stdout.
        #[arg(long)]
        report: Option<String>,
    },
    /// Check the inequality bounds on randomized polymer instances.
    Bounds {
        /// PRNG seed for the instance stream.
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Instances drawn per operator.
        #[arg(long, default_value_t = 1000)]
        count: usize,
        /// `all` or a comma-separated subset of
        /// link,chain,circuit,bouquet.
        #[arg(long, default_value = "all")]
        op: String,
        /// Write the JSONL records to this file instead of stdout.
        #[arg(long)]
        report: Option<String>,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Generate { family, out } => {
            let spec: FamilySpec = family.parse().map_err(err_string)?;
            let assembly = spec.generate().map_err(err_string)?;
            let mut text = format!("c {spec}\n");
            text.push_str(&format_edge_list(&assembly.graph));
            write_output(&out, &text)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Compute { input, json } => {
            let graph = read_graph(&input)?;
            let so = sombor_index(&graph);
            if json {
                let obj = serde_json::json!({
                    "terms": so,
                    "value": so.eval_f64(),
                });
                println!("{obj}");
            } else {
                println!("SO = {so} ≈ {:.10}", so.eval_f64());
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Census { input, json } => {
            let graph = read_graph(&input)?;
            let census = graph.edge_census();
            if json {
                println!("{}", serde_json::to_string(&census).map_err(err_string)?);
            } else {
                if !census.is_empty() {
                    println!("{census}");
                }
                println!("total: {}", census.total());
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify(VerifyCommand::Families { grid, report }) => {
            let config = if grid == "default" {
                GridConfig::default_grid()
            } else {
                let text = fs::read_to_string(&grid).map_err(|e| format!("{grid}: {e}"))?;
                GridConfig::from_json(&text).map_err(err_string)?
            };
            emit_report(&verify_families(&config.expand()), report.as_deref())
        }
        Command::Verify(VerifyCommand::Bounds {
            seed,
            count,
            op,
            report,
        }) => {
            let operators = parse_operators(&op).map_err(err_string)?;
            let config = BoundsConfig {
                seed,
                count,
                operators,
            };
            emit_report(&verify_bounds(&config), report.as_deref())
        }
    }
}

fn err_string(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn read_graph(path: &str) -> Result<Graph, String> {
    let text = read_input(path)?;
    parse_edge_list(&text).map_err(err_string)
}

fn read_input(path: &str) -> Result<String, String> {
    if path == "-" {
        let mut text = String::new();
        io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| format!("stdin: {e}"))?;
        Ok(text)
    } else {
        fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))
    }
}

fn write_output(path: &str, content: &str) -> Result<(), String> {
    if path == "-" {
        io::stdout()
            .write_all(content.as_bytes())
            .map_err(|e| format!("stdout: {e}"))
    } else {
        fs::write(path, content).map_err(|e| format!("{path}: {e}"))
    }
}

/// Records go to stdout (summary to stderr) so the stream can be piped;
/// with `--report FILE` the records go to the file and the summary to
/// stdout.
fn emit_report(report: &Report, file: Option<&str>) -> Result<ExitCode, String> {
    let jsonl = report.to_jsonl();
    match file {
        None => {
            print!("{jsonl}");
            eprintln!("{}", report.summary());
        }
        Some(path) => {
            fs::write(path, &jsonl).map_err(|e| format!("{path}: {e}"))?;
            println!("{}", report.summary());
        }
    }
    Ok(if report.is_clean() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
