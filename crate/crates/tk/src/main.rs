use std::fs;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use pct_core::{Composition, Permutation};
use tk::commands::{self, Kind, Transform};
use tk::guard::DEFAULT_MAX_OBJECTS;
use tk::report::{Format, Report};

#[derive(Parser)]
#[command(
    name = "tk",
    version,
    about = "Enumerate and verify permuted composition tableaux and their bijections"
)]
struct Cli {
    #[arg(long, value_enum, default_value = "json", global = true)]
    format: Format,
    /// Seed for sampled checks.
    #[arg(long, default_value_t = 0, global = true)]
    seed: u64,
    /// Refuse commands expected to touch more objects than this.
    #[arg(long, env = "TK_MAX_OBJECTS", default_value_t = DEFAULT_MAX_OBJECTS, global = true)]
    max_objects: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count (and optionally list) standard objects.
    Enumerate {
        #[arg(value_enum)]
        kind: Kind,
        #[arg(long)]
        shape: Option<Composition>,
        #[arg(long)]
        n: Option<usize>,
        /// Restrict spct to one type.
        #[arg(long)]
        sigma: Option<Permutation>,
        /// Write every object as one JSON line.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Run an invariant suite.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[arg(long)]
        shape: Option<Composition>,
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        /// Random objects per size above the exhaustive range (bijections).
        #[arg(long, default_value_t = 0)]
        samples: usize,
        /// Class report JSON (classes).
        #[arg(long)]
        output: Option<PathBuf>,
        /// Orbit graph of a single shape as DOT (classes).
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Joint distribution tables.
    Stats {
        #[arg(value_enum)]
        kind: StatsKind,
        #[arg(long)]
        n: usize,
    },
    /// Apply one bijection or construction to an input file ("-" for stdin).
    Map {
        #[arg(value_enum)]
        transform: Transform,
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        sigma: Option<Permutation>,
        /// Write the bare output object here.
        #[arg(long)]
        output: Option<PathBuf>,
        /// Write a DOT rendering (trees and graphs) here.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Hecke,
    Counts,
    Bijections,
    Classes,
    Pairs,
}

#[derive(Clone, Copy, ValueEnum)]
enum StatsKind {
    Quadruple,
}

fn read_input(path: &PathBuf) -> Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        return Ok(s);
    }
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn write_file(path: &PathBuf, text: &str) -> Result<()> {
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

fn run(cli: Cli) -> Result<Report> {
    let cap = cli.max_objects;
    let report = match cli.command {
        Command::Enumerate {
            kind,
            shape,
            n,
            sigma,
            output,
        } => {
            let mut lines = Vec::new();
            let listing = output.as_ref().map(|_| &mut lines);
            let r = commands::enumerate(kind, shape.as_ref(), n, sigma.as_ref(), cap, listing)?;
            if let Some(path) = output {
                let mut text = lines.join("\n");
                text.push('\n');
                write_file(&path, &text)?;
            }
            r
        }
        Command::Verify {
            suite,
            shape,
            max_n,
            n,
            samples,
            output,
            dot,
        } => match suite {
            Suite::Hecke => {
                commands::verify_hecke(&commands::shape_list(shape.as_ref(), max_n)?, cap)?
            }
            Suite::Counts => {
                let max_n = max_n.or(n).context("--max-n is required")?;
                commands::verify_counts(max_n, cap)?
            }
            Suite::Bijections => {
                let n = n.or(max_n).context("--n is required")?;
                commands::verify_bijections(n, samples, cli.seed, cap)?
            }
            Suite::Classes => {
                let shapes = commands::shape_list(shape.as_ref(), max_n)?;
                let mut entries = Vec::new();
                let want = output.as_ref().map(|_| &mut entries);
                let r = commands::verify_classes(&shapes, cap, want)?;
                if let Some(path) = output {
                    write_file(&path, &(serde_json::to_string_pretty(&entries)? + "\n"))?;
                }
                if let Some(path) = dot {
                    let [shape] = shapes.as_slice() else {
                        bail!("--dot needs a single --shape");
                    };
                    write_file(&path, &commands::orbit_graph_dot(shape, cap)?)?;
                }
                r
            }
            Suite::Pairs => {
                let max_n = max_n.or(n).context("--max-n is required")?;
                commands::verify_pairs(max_n, cap)?
            }
        },
        Command::Stats {
            kind: StatsKind::Quadruple,
            n,
        } => commands::stats_quadruple(n, cap)?,
        Command::Map {
            transform,
            input,
            sigma,
            output,
            dot,
        } => {
            let text = read_input(&input)?;
            let mapped = commands::map(transform, &text, sigma.as_ref())?;
            if let Some(path) = output {
                write_file(&path, &(serde_json::to_string(&mapped.object)? + "\n"))?;
            }
            if let Some(path) = dot {
                match &mapped.dot {
                    Some(d) => write_file(&path, d)?,
                    None => bail!("this transform has no DOT rendering"),
                }
            }
            mapped.report
        }
    };
    Ok(report)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let format = cli.format;
    let start = Instant::now();
    match run(cli) {
        Ok(mut report) => {
            report.elapsed_ms = start.elapsed().as_millis() as u64;
            match report.render(format) {
                Ok(text) => print!("{text}"),
                Err(e) => {
                    eprintln!("error: {e:#}");
                    return ExitCode::from(2);
                }
            }
            if report.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
