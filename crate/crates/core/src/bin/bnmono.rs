use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use bnmono::asyncdyn::{self, AsyncGraph, Schedule};
use bnmono::constructions::gray_code_network;
use bnmono::embed::{embed_with, EmbedOptions};
use bnmono::format::{
    async_graph_dot, interaction_graph_dot, network_to_json, read_network, write_atomic,
};
use bnmono::theorems::{
    reports_to_json, run_corpus, summarize, Instance, SuiteSelection, VerificationReport,
};
use bnmono::{interaction_graph, BooleanNetwork, Configuration, Error};

/// Asynchronous dynamics of Boolean networks and their monotone embedding.
///
/// Configurations are written as 0/1 strings with component 1 leftmost.
#[derive(Parser)]
#[command(name = "bnmono", version)]
struct Cli {
    #[command(flatten)]
    global: Global,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Bypass size caps and the no-negative-loop hypothesis.
    #[arg(long, global = true)]
    force: bool,

    /// Base seed for corpus verification.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Number of generated instances for corpus verification.
    #[arg(long, global = true, default_value_t = 1)]
    count: usize,

    /// Component count for corpus verification.
    #[arg(long, global = true)]
    n: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Print f(x), or the trajectory under a comma-separated update schedule.
    Eval {
        network: PathBuf,
        x: String,
        #[arg(long)]
        schedule: Option<String>,
    },
    /// Write the Gray-code path network on `components` components.
    Graycode { components: usize, output: PathBuf },
    /// Write the 2n-component monotone embedding of a network.
    Embed { input: PathBuf, output: PathBuf },
    /// Write the signed interaction graph as DOT.
    Igraph { input: PathBuf, dot: PathBuf },
    /// Write the asynchronous graph as DOT.
    Asyncgraph { input: PathBuf, dot: PathBuf },
    /// Print the asynchronous distance between two configurations.
    Distance {
        input: PathBuf,
        from: String,
        to: String,
    },
    /// Print the diameter of the asynchronous graph.
    Diameter { input: PathBuf },
    /// Print every fixed point, one per line.
    Fixedpoints { input: PathBuf },
    /// Run a verification suite on a network file, or on a generated corpus
    /// (--count, --n, --seed) when no file is given.
    Verify {
        /// robert, monotone-reach, embedding, fixed-point-counts or all
        suite: String,
        input: Option<PathBuf>,
        #[arg(long)]
        report: PathBuf,
        /// Write zero for every wall-time field.
        #[arg(long)]
        no_timings: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn literal(f: &BooleanNetwork, s: &str) -> Result<Configuration, Error> {
    let x = Configuration::parse_literal(s)?;
    if x.n() != f.n() {
        return Err(Error::DimensionMismatch {
            expected: f.n(),
            found: x.n(),
        });
    }
    Ok(x)
}

fn parse_schedule(s: &str, n: usize) -> Result<Schedule, Error> {
    let steps = s
        .split(',')
        .map(|part| {
            let part = part.trim();
            match part.parse::<usize>() {
                Ok(i) if (1..=n).contains(&i) => Ok(i - 1),
                Ok(i) => Err(Error::IndexOutOfRange { index: i, n }),
                Err(_) => Err(Error::InvalidLiteral {
                    literal: part.to_string(),
                    reason: "schedule entries are 1-based component indices".into(),
                }),
            }
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Schedule::new(steps))
}

fn write_network(path: &Path, f: &BooleanNetwork) -> Result<(), Error> {
    write_atomic(path, network_to_json(f).as_bytes())
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    let global = cli.global;
    match cli.command {
        Command::Eval {
            network,
            x,
            schedule,
        } => {
            let f = read_network(&network)?;
            let x = literal(&f, &x)?;
            match schedule {
                None => println!("{}", f.evaluate(&x)?),
                Some(s) => {
                    let schedule = parse_schedule(&s, f.n())?;
                    for y in asyncdyn::simulate(&f, &x, &schedule)? {
                        println!("{y}");
                    }
                }
            }
        }
        Command::Graycode { components, output } => {
            let w = gray_code_network(components)?;
            write_network(&output, &w.network)?;
        }
        Command::Embed { input, output } => {
            let f = read_network(&input)?;
            let host = embed_with(
                &f,
                EmbedOptions {
                    force: global.force,
                },
            )?;
            write_network(&output, &host)?;
        }
        Command::Igraph { input, dot } => {
            let f = read_network(&input)?;
            write_atomic(
                &dot,
                interaction_graph_dot(&interaction_graph(&f)).as_bytes(),
            )?;
        }
        Command::Asyncgraph { input, dot } => {
            let f = read_network(&input)?;
            write_atomic(&dot, async_graph_dot(&AsyncGraph::build(&f)?).as_bytes())?;
        }
        Command::Distance { input, from, to } => {
            let f = read_network(&input)?;
            let (x, y) = (literal(&f, &from)?, literal(&f, &to)?);
            println!("{}", asyncdyn::distance(&f, &x, &y)?);
        }
        Command::Diameter { input } => {
            let f = read_network(&input)?;
            let d = if global.force {
                asyncdyn::diameter_unchecked(&f)
            } else {
                asyncdyn::diameter(&f)?
            };
            println!("{d}");
        }
        Command::Fixedpoints { input } => {
            let f = read_network(&input)?;
            for x in asyncdyn::fixed_points(&f) {
                println!("{x}");
            }
        }
        Command::Verify {
            suite,
            input,
            report,
            no_timings,
        } => {
            let selection: SuiteSelection = suite.parse()?;
            let mut reports: Vec<VerificationReport> = match input {
                Some(path) => {
                    let f = read_network(&path)?;
                    let instance = Instance::named(path.display().to_string(), f.n());
                    selection
                        .suites()
                        .into_iter()
                        .map(|s| Ok(s.run(&f)?.with_instance(instance.clone())))
                        .collect::<Result<_, Error>>()?
                }
                None => {
                    let n = global.n.ok_or_else(|| {
                        Error::InvalidNetwork("corpus verification needs --n".into())
                    })?;
                    run_corpus(selection, global.count, n, global.seed)?
                }
            };
            if no_timings {
                reports = reports.into_iter().map(|r| r.without_timings()).collect();
            }
            write_atomic(&report, reports_to_json(&reports)?.as_bytes())?;
            let s = summarize(&reports);
            println!(
                "{} reports: {} passed, {} skipped, {} failed",
                s.total, s.passed, s.skipped, s.failed
            );
            if s.failed > 0 {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}
