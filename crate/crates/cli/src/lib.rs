//! Command-line front end: decide, reduce and take determinants of graph
//! files, generate and enumerate block graphs, and run the verification
//! suites.
//!
//! Exit codes: 0 success, 1 usage error, 2 unreadable or malformed input,
//! 3 input violating a precondition (for example not a block graph),
//! 4 a verification suite failed.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use blockgraph::determinant::{DetOracle, OracleError};
use blockgraph::families::{
    default_weight_pool, enumerate_block_graphs, make_coalesced_cliques, make_nmk,
    random_block_graph, CoalescedCliqueSpec, FamilyError, NmkSpec,
};
use blockgraph::reduction::ReductionError;
use blockgraph::verify::{Suite, VerifyConfig};
use blockgraph::{decide, parse_graph, write_graph, ParseError, WeightedGraph};
use clap::{Parser, Subcommand};
use thiserror::Error;

#[derive(Debug, Parser)]
#[command(
    name = "blockgraph",
    version,
    about = "Singularity of vertex-weighted block graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print `singular` or `nonsingular`.
    Check { file: PathBuf },
    /// Print the verdict line, preceded by every reduction step with --trace.
    Reduce {
        file: PathBuf,
        #[arg(long)]
        trace: bool,
    },
    /// Print the exact determinant of A(G) + diag(x).
    Det { file: PathBuf },
    /// Generate a graph file.
    #[command(subcommand)]
    Gen(Generator),
    /// Print every connected block graph up to the given order, records
    /// separated by `---`.
    Enumerate {
        #[arg(long)]
        max_vertices: usize,
    },
    /// Run verification suites and print PASS/FAIL per suite.
    Verify {
        #[arg(long, default_value = "all")]
        suite: Suite,
        #[arg(long)]
        seed: Option<u64>,
        /// Randomized sample budget; 10000 reproduces the full acceptance sizes.
        #[arg(long)]
        samples: Option<usize>,
    },
}

#[derive(Debug, Subcommand)]
enum Generator {
    /// K_n with k pendant K_m at every vertex.
    Nmk {
        n: usize,
        m: usize,
        k: usize,
        #[arg(short)]
        o: Option<PathBuf>,
    },
    /// Random connected block graph with weights from {0, 1, 1/2, -1, 2}.
    Random {
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        max_vertices: usize,
        #[arg(short)]
        o: Option<PathBuf>,
    },
    /// Central clique with pendant cliques, read from a spec file with an
    /// `n <order>` line and `a <vertex> <orders...>` lines.
    Coalesced {
        spec: PathBuf,
        #[arg(short)]
        o: Option<PathBuf>,
    },
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Parse { path: String, source: ParseError },
    #[error("{path}: {message}")]
    Spec { path: String, message: String },
    #[error(transparent)]
    Reduction(#[from] ReductionError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error("verification failed")]
    VerifyFailed,
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Io { .. } | CliError::Parse { .. } | CliError::Spec { .. } => 2,
            CliError::Reduction(_) | CliError::Oracle(_) | CliError::Family(_) => 3,
            CliError::VerifyFailed => 4,
        }
    }
}

fn io_error(path: &Path, source: std::io::Error) -> CliError {
    CliError::Io {
        path: path.display().to_string(),
        source,
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| io_error(path, e))
}

fn read_graph(path: &Path) -> Result<WeightedGraph, CliError> {
    parse_graph(&read(path)?).map_err(|source| CliError::Parse {
        path: path.display().to_string(),
        source,
    })
}

/// Parses a coalesced-clique spec file. Repeated `a` lines for the same
/// vertex append to its list.
pub fn parse_coalesced_spec(text: &str) -> Result<CoalescedCliqueSpec, String> {
    let mut n: Option<usize> = None;
    let mut attachments: Vec<Vec<usize>> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = trimmed.split_whitespace().collect();
        let number = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| format!("line {line}: expected a non-negative integer, got {s:?}"))
        };
        match fields[0] {
            "n" if n.is_none() => {
                if fields.len() != 2 {
                    return Err(format!("line {line}: expected `n <order>`"));
                }
                let order = number(fields[1])?;
                n = Some(order);
                attachments = vec![Vec::new(); order];
            }
            "n" => return Err(format!("line {line}: duplicate `n` line")),
            "a" => {
                if n.is_none() {
                    return Err(format!("line {line}: `a` before `n`"));
                }
                if fields.len() < 2 {
                    return Err(format!("line {line}: expected `a <vertex> <orders...>`"));
                }
                let v = number(fields[1])?;
                let list = attachments
                    .get_mut(v)
                    .ok_or_else(|| format!("line {line}: vertex {v} outside the central clique"))?;
                for f in &fields[2..] {
                    list.push(number(f)?);
                }
            }
            other => return Err(format!("line {line}: unknown tag {other:?}")),
        }
    }
    let n = n.ok_or("missing `n <order>` line")?;
    CoalescedCliqueSpec::new(n, attachments).map_err(|e| e.to_string())
}

fn emit(out: &mut dyn Write, target: Option<&Path>, text: &str) -> Result<(), CliError> {
    match target {
        Some(path) => fs::write(path, text).map_err(|e| io_error(path, e)),
        None => out
            .write_all(text.as_bytes())
            .map_err(|e| io_error(Path::new("<stdout>"), e)),
    }
}

fn line(out: &mut dyn Write, text: impl std::fmt::Display) -> Result<(), CliError> {
    writeln!(out, "{text}").map_err(|e| io_error(Path::new("<stdout>"), e))
}

fn execute(command: Command, out: &mut dyn Write) -> Result<(), CliError> {
    match command {
        Command::Check { file } => {
            let verdict = decide(&read_graph(&file)?)?;
            line(
                out,
                if verdict.singular {
                    "singular"
                } else {
                    "nonsingular"
                },
            )
        }
        Command::Reduce { file, trace } => {
            let verdict = decide(&read_graph(&file)?)?;
            if trace {
                line(out, &verdict)
            } else {
                let word = if verdict.singular {
                    "singular"
                } else {
                    "nonsingular"
                };
                line(out, format!("VERDICT {word} witness={}", verdict.witness))
            }
        }
        Command::Det { file } => {
            let det = DetOracle::from_env().det(&read_graph(&file)?)?;
            line(out, det)
        }
        Command::Gen(generator) => {
            let (graph, target) = match generator {
                Generator::Nmk { n, m, k, o } => (make_nmk(&NmkSpec::new(n, m, k)?), o),
                Generator::Random {
                    seed,
                    max_vertices,
                    o,
                } => {
                    if max_vertices == 0 {
                        return Err(FamilyError::InvalidSpec(
                            "--max-vertices must be at least 1".into(),
                        )
                        .into());
                    }
                    (
                        random_block_graph(seed, max_vertices, &default_weight_pool()),
                        o,
                    )
                }
                Generator::Coalesced { spec, o } => {
                    let parsed =
                        parse_coalesced_spec(&read(&spec)?).map_err(|message| CliError::Spec {
                            path: spec.display().to_string(),
                            message,
                        })?;
                    (make_coalesced_cliques(&parsed), o)
                }
            };
            emit(out, target.as_deref(), &write_graph(&graph))
        }
        Command::Enumerate { max_vertices } => {
            for (i, g) in enumerate_block_graphs(max_vertices)?.enumerate() {
                if i > 0 {
                    line(out, "---")?;
                }
                emit(out, None, &write_graph(&g))?;
            }
            Ok(())
        }
        Command::Verify {
            suite,
            seed,
            samples,
        } => {
            let mut config = VerifyConfig::default();
            if let Some(seed) = seed {
                config = config.with_seed(seed);
            }
            if let Some(samples) = samples {
                config = config.with_samples(samples);
            }
            let suites = match suite {
                Suite::All => vec![Suite::Oracle, Suite::Identities, Suite::Families],
                one => vec![one],
            };
            let mut all_passed = true;
            for suite in suites {
                let reports = suite.run(&config);
                for report in &reports {
                    line(out, report)?;
                }
                let passed = reports.iter().all(|r| r.passed());
                all_passed &= passed;
                line(
                    out,
                    format!("{}: {}", suite.name(), if passed { "PASS" } else { "FAIL" }),
                )?;
            }
            if all_passed {
                Ok(())
            } else {
                Err(CliError::VerifyFailed)
            }
        }
    }
}

/// Runs the command line `args` (program name first) and returns the exit
/// code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                1
            } else {
                let _ = write!(out, "{text}");
                0
            };
        }
    };
    match execute(cli.command, out) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coalesced_spec_parsing() {
        let spec = parse_coalesced_spec("# demo\nn 3\na 0 4 4\na 2 3\na 0 5\n").unwrap();
        assert_eq!(spec.attachments(), &[vec![4, 4, 5], vec![], vec![3]]);
        assert!(parse_coalesced_spec("a 0 3\n").is_err());
        assert!(parse_coalesced_spec("n 2\na 2 3\n").is_err());
        assert!(parse_coalesced_spec("n 2\na 0 2\n").is_err());
        assert!(parse_coalesced_spec("n 2\nn 2\n").is_err());
        assert!(parse_coalesced_spec("n 2\nx 1\n").is_err());
        assert!(parse_coalesced_spec("").is_err());
    }

    #[test]
    fn usage_errors_exit_1_and_help_exits_0() {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        assert_eq!(run(["blockgraph", "frobnicate"], &mut out, &mut err), 1);
        assert!(!err.is_empty());
        let (mut out, mut err) = (Vec::new(), Vec::new());
        assert_eq!(run(["blockgraph", "--help"], &mut out, &mut err), 0);
        assert!(String::from_utf8(out).unwrap().contains("enumerate"));
    }
}
