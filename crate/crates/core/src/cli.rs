//! Command-line front end.
//!
//! Everything is flags and positionals; data goes to stdout, diagnostics to
//! stderr. Exit codes: 0 success, 1 verification failure, 2 invalid
//! parameters or input, 3 inconclusive search.

use std::io::Write;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};

use crate::construct::construct;
use crate::error::{Error, Result};
use crate::minrank::{is_critical, minrank, SearchLimits};
use crate::model::{capacity_general, capacity_one_sided, Case, CaseParams, ProblemSpec};
use crate::textio::{parse_matrix, render_matrix, render_report, render_symbols};
use crate::verify::{verify_all_matrix, VerifyOptions};

#[derive(Parser)]
#[command(
    name = "index-codes",
    version,
    about = "Optimal scalar linear index codes for one-sided neighboring side information",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Construct a code and print its generator matrix
    Generate {
        /// Case tag: I..X
        case: Case,
        k: usize,
        d: usize,
        /// Spacing parameter, cases V..X only
        lambda: Option<usize>,
        /// Also list the code symbols in construction order
        #[arg(long)]
        symbols: bool,
    },
    /// Check decodability of every receiver and the code length
    Verify {
        /// Case tag: I..X
        case: Case,
        k: usize,
        d: usize,
        /// Spacing parameter, cases V..X only
        lambda: Option<usize>,
        /// Verify this matrix file instead of the constructed code
        #[arg(long)]
        matrix: Option<PathBuf>,
        /// Cardinality cap for the fallback transmission-count search
        #[arg(long, default_value_t = VerifyOptions::default().max_cardinality)]
        max_card: usize,
    },
    /// Exact minrank of a side-information pattern
    Minrank {
        /// Pattern: caseI..caseX, full, complete or empty
        pattern: String,
        k: usize,
        d: Option<usize>,
        lambda: Option<usize>,
        /// Refuse patterns with more free entries than this
        #[arg(long, default_value_t = SearchLimits::default().max_edges)]
        max_edges: usize,
        /// Abort the search after this many nodes
        #[arg(long, default_value_t = SearchLimits::default().max_nodes)]
        max_nodes: u64,
    },
    /// Per-edge criticality of a side-information pattern
    Critical {
        /// Pattern: caseI..caseX, full, complete or empty
        pattern: String,
        k: usize,
        d: Option<usize>,
        lambda: Option<usize>,
        #[arg(long, default_value_t = SearchLimits::default().max_edges)]
        max_edges: usize,
        #[arg(long, default_value_t = SearchLimits::default().max_nodes)]
        max_nodes: u64,
    },
    /// Capacity per message of the general two-sided pattern
    Capacity { k: usize, u: usize, d: usize },
}

/// Parses and runs a full argument vector (argv[0] included) and returns the
/// process exit code. Used by `main` and callable in-process by tests.
pub fn run<I, S>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let cli = match Cli::try_parse_from(args.into_iter().map(Into::into)) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{e}");
                    0
                }
                _ => {
                    let _ = write!(stderr, "{e}");
                    2
                }
            };
        }
    };
    match dispatch(cli.command, stdout) {
        Ok(code) => code,
        Err(err) => {
            let _ = writeln!(stderr, "error: {err}");
            match err {
                Error::Inconclusive(_) => 3,
                _ => 2,
            }
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Generate {
            case,
            k,
            d,
            lambda,
            symbols,
        } => {
            let params = CaseParams::new(case, k, d, lambda)?;
            let code = construct(&params)?;
            emit(out, &render_matrix(code.matrix()));
            if symbols {
                emit(out, &render_symbols(&code));
            }
            Ok(0)
        }
        Command::Verify {
            case,
            k,
            d,
            lambda,
            matrix,
            max_card,
        } => {
            let params = CaseParams::new(case, k, d, lambda)?;
            let problem = ProblemSpec::from_case(&params)?;
            let matrix = match matrix {
                Some(path) => {
                    let text = std::fs::read_to_string(&path)
                        .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
                    parse_matrix(&text)?
                }
                None => construct(&params)?.matrix().clone(),
            };
            let options = VerifyOptions {
                max_cardinality: max_card,
            };
            let report = verify_all_matrix(&problem, &matrix, &options)?;
            let capacity = capacity_one_sided(k, d)?;
            let optimal = matrix.cols() as u64 == capacity.denominator();
            emit(
                out,
                &render_report(
                    params.case(),
                    k,
                    d,
                    matrix.cols(),
                    capacity,
                    optimal,
                    &report,
                ),
            );
            Ok(if report.all_decodable() && optimal {
                0
            } else {
                1
            })
        }
        Command::Minrank {
            pattern,
            k,
            d,
            lambda,
            max_edges,
            max_nodes,
        } => {
            let problem = pattern_problem(&pattern, k, d, lambda)?;
            let limits = SearchLimits {
                max_edges,
                max_nodes,
            };
            let result = minrank(&problem, &limits)?;
            emit(out, &format!("minrank={}\n", result.value));
            emit(out, &render_matrix(&result.witness));
            Ok(0)
        }
        Command::Critical {
            pattern,
            k,
            d,
            lambda,
            max_edges,
            max_nodes,
        } => {
            let problem = pattern_problem(&pattern, k, d, lambda)?;
            let limits = SearchLimits {
                max_edges,
                max_nodes,
            };
            let report = is_critical(&problem, &limits)?;
            emit(
                out,
                &format!(
                    "minrank={} edges={} overall={}\n",
                    report.base_value,
                    report.edges.len(),
                    report.overall
                ),
            );
            for edge in &report.edges {
                emit(
                    out,
                    &format!(
                        "edge=({},{}) minrank_without={} critical={}\n",
                        edge.from, edge.to, edge.value_without, edge.critical
                    ),
                );
            }
            Ok(0)
        }
        Command::Capacity { k, u, d } => {
            let c = capacity_general(k, u, d)?;
            emit(out, &format!("{c}\n"));
            Ok(0)
        }
    }
}

/// Builds the side-information pattern a `minrank`/`critical` argument names.
fn pattern_problem(
    pattern: &str,
    k: usize,
    d: Option<usize>,
    lambda: Option<usize>,
) -> Result<ProblemSpec> {
    let need_d =
        |d: Option<usize>| d.ok_or_else(|| Error::invalid(format!("pattern {pattern:?} needs D")));
    match pattern.to_ascii_lowercase().as_str() {
        "full" => {
            if lambda.is_some() {
                return Err(Error::invalid("pattern \"full\" takes no lambda"));
            }
            ProblemSpec::one_sided(k, need_d(d)?)
        }
        "complete" => {
            if d.is_some() || lambda.is_some() {
                return Err(Error::invalid("pattern \"complete\" takes only K"));
            }
            ProblemSpec::complete(k)
        }
        "empty" => {
            if d.is_some() || lambda.is_some() {
                return Err(Error::invalid("pattern \"empty\" takes only K"));
            }
            ProblemSpec::empty(k)
        }
        _ => {
            let case: Case = pattern.parse()?;
            let params = CaseParams::new(case, k, need_d(d)?, lambda)?;
            ProblemSpec::from_case(&params)
        }
    }
}

fn emit(out: &mut dyn Write, text: &str) {
    // A closed pipe is the caller's business, not a reportable failure.
    let _ = out.write_all(text.as_bytes());
}

impl clap::builder::ValueParserFactory for Case {
    type Parser = CaseValueParser;

    fn value_parser() -> Self::Parser {
        CaseValueParser
    }
}

#[derive(Clone)]
pub struct CaseValueParser;

impl clap::builder::TypedValueParser for CaseValueParser {
    type Value = Case;

    fn parse_ref(
        &self,
        cmd: &clap::Command,
        _arg: Option<&clap::Arg>,
        value: &std::ffi::OsStr,
    ) -> std::result::Result<Case, clap::Error> {
        let text = value.to_string_lossy();
        text.parse().map_err(|_| {
            clap::Error::raw(
                ErrorKind::InvalidValue,
                format!("{text:?} is not a case tag (expected I..X)\n"),
            )
            .with_cmd(cmd)
        })
    }
}
