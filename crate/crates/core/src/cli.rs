//! Command-line front end. The binary is a thin wrapper around [`run`].
//!
//! Exit codes: 0 success (or "dominates"), 1 "does not dominate", 2 usage
//! or I/O failure, 3 invalid problem file, 4 unknown alternative id,
//! 5 invalid weights.

use std::ffi::OsString;
use std::io::Write;
use std::net::{IpAddr, SocketAddr};
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Parser, Subcommand};

use crate::diagnostics::{agreement_metrics, consistency_report, rank_reversal_probe, weighted_sum_rank, WeightVector};
use crate::dominance::{DominanceEngine, DominanceGraph};
use crate::error::Error;
use crate::io::{export_dominance_dot, parse_document, parse_weights, DotMode, ParseError};
use crate::model::Problem;
use crate::order::SpoViolation;
use crate::service::{serve, Session};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NOT_DOMINANT: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INVALID: i32 = 3;
pub const EXIT_UNKNOWN_ID: i32 = 4;
pub const EXIT_BAD_WEIGHTS: i32 = 5;

#[derive(Debug, Parser)]
#[command(name = "qualdom", version, about = "Qualitative dominance over partially ordered preferences")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check a problem file and list findings
    Validate { file: PathBuf },
    /// Print the maximal (undominated) alternatives
    Rank {
        file: PathBuf,
        /// Print every layer, not only the maximal set
        #[arg(long)]
        layers: bool,
    },
    /// Test whether A dominates B
    Dominates { file: PathBuf, a: String, b: String },
    /// Attribute-by-attribute account of A against B
    Explain { file: PathBuf, a: String, b: String },
    /// Write the dominance graph as DOT
    Hasse {
        file: PathBuf,
        #[arg(long)]
        out: PathBuf,
        /// Keep transitive edges
        #[arg(long)]
        full: bool,
    },
    /// Compare a weighted-sum ranking against the dominance order
    Compare {
        file: PathBuf,
        #[arg(long)]
        weights: PathBuf,
    },
    /// Look for weighted-sum rank reversals under alternative removal
    Probe {
        file: PathBuf,
        #[arg(long)]
        weights: PathBuf,
    },
    /// Serve the HTTP API for one decision session
    Serve {
        file: PathBuf,
        #[arg(long, default_value_t = 8080)]
        port: u16,
        #[arg(long, default_value = "127.0.0.1")]
        host: IpAddr,
    },
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn new(code: i32, message: impl Into<String>) -> Self {
        Failure { code, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::InvalidProblem(_) | Error::Parse(_) | Error::IntervalAttribute(_) => EXIT_INVALID,
            Error::UnknownAlternative(_) => EXIT_UNKNOWN_ID,
            Error::InvalidWeights(_) => EXIT_BAD_WEIGHTS,
            _ => EXIT_USAGE,
        };
        Failure::new(code, e.to_string().replace('\n', " "))
    }
}

type CmdResult = Result<i32, Failure>;

/// Runs the CLI with `args` (including the program name) and returns the
/// process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::new(EXIT_USAGE, format!("cannot read {}: {e}", path.display())))
}

fn load(path: &Path) -> Result<Problem, Failure> {
    let text = read(path)?;
    crate::io::parse_problem(&text)
        .map_err(|e| Failure::new(EXIT_INVALID, format!("{}: {}", path.display(), one_line(&e))))
}

fn one_line(e: &ParseError) -> String {
    e.to_string().lines().map(str::trim).collect::<Vec<_>>().join("; ")
}

fn alternative(p: &Problem, id: &str) -> Result<usize, Failure> {
    p.alternative_index(id).ok_or_else(|| Failure::new(EXIT_UNKNOWN_ID, format!("unknown alternative {id:?}")))
}

fn load_weights(path: &Path, p: &Problem) -> Result<WeightVector, Failure> {
    Ok(parse_weights(&read(path)?, p)?)
}

fn names(g: &DominanceGraph, ids: &[usize]) -> String {
    ids.iter().map(|&i| g.alternatives[i].as_str()).collect::<Vec<_>>().join(", ")
}

fn describe_violation(g: &DominanceGraph, v: SpoViolation) -> String {
    let n = |i: usize| g.alternatives[i].as_str();
    match v {
        SpoViolation::Irreflexive { element } => format!("{} dominates itself", n(element)),
        SpoViolation::Asymmetric { a, b } => format!("{} and {} dominate each other", n(a), n(b)),
        SpoViolation::Transitive { a, b, c } => {
            format!("{} ≻ {} ≻ {} but not {} ≻ {}", n(a), n(b), n(c), n(a), n(c))
        }
    }
}

fn io_err(e: std::io::Error) -> Failure {
    Failure::new(EXIT_USAGE, e.to_string())
}

fn dispatch(command: Command, out: &mut dyn Write) -> CmdResult {
    match command {
        Command::Validate { file } => {
            let text = read(&file)?;
            let report = match parse_document(&text).and_then(|doc| doc.into_problem()) {
                Ok(p) => {
                    let report = p.validate();
                    writeln!(out, "valid: {} attributes, {} alternatives", p.attributes.len(), p.alternatives.len())
                        .map_err(io_err)?;
                    report
                }
                Err(ParseError::Invalid(report)) => report,
                Err(e) => {
                    writeln!(out, "{e}").map_err(io_err)?;
                    return Ok(EXIT_INVALID);
                }
            };
            write!(out, "{report}").map_err(io_err)?;
            Ok(if report.is_valid() { EXIT_OK } else { EXIT_INVALID })
        }
        Command::Rank { file, layers } => {
            let p = load(&file)?;
            let engine = DominanceEngine::new(&p)?;
            let g = engine.graph();
            let class = engine.importance_class();
            writeln!(out, "importance: {class}").map_err(io_err)?;
            if class.at_least_interval() {
                writeln!(out, "guarantee: strict partial order guaranteed (importance is an interval order)")
                    .map_err(io_err)?;
            } else {
                match g.spo {
                    Ok(()) => writeln!(out, "guarantee: none; this dominance graph is a strict partial order"),
                    Err(v) => writeln!(
                        out,
                        "guarantee: none; this dominance graph is not a strict partial order: {}",
                        describe_violation(&g, v)
                    ),
                }
                .map_err(io_err)?;
            }
            writeln!(out, "maximal: {}", names(&g, &g.maximal_set())).map_err(io_err)?;
            if layers {
                let ranked = g.layered_ranking()?;
                for (i, layer) in ranked.layers.iter().enumerate() {
                    writeln!(out, "layer {i}: {}", names(&g, layer)).map_err(io_err)?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Dominates { file, a, b } => {
            let p = load(&file)?;
            let (ia, ib) = (alternative(&p, &a)?, alternative(&p, &b)?);
            match DominanceEngine::new(&p)?.dominates(ia, ib)? {
                Some(w) => {
                    writeln!(out, "{a} dominates {b} (witness: {})", p.attributes[w.attribute].name).map_err(io_err)?;
                    Ok(EXIT_OK)
                }
                None => {
                    writeln!(out, "{a} does not dominate {b}").map_err(io_err)?;
                    Ok(EXIT_NOT_DOMINANT)
                }
            }
        }
        Command::Explain { file, a, b } => {
            let p = load(&file)?;
            let (ia, ib) = (alternative(&p, &a)?, alternative(&p, &b)?);
            let ex = DominanceEngine::new(&p)?.explain(ia, ib)?;
            write!(out, "{ex}").map_err(io_err)?;
            Ok(EXIT_OK)
        }
        Command::Hasse { file, out: path, full } => {
            let p = load(&file)?;
            let g = DominanceEngine::new(&p)?.graph();
            let mode = if full { DotMode::Full } else { DotMode::Hasse };
            let dot = export_dominance_dot(&g, mode)?;
            std::fs::write(&path, dot)
                .map_err(|e| Failure::new(EXIT_USAGE, format!("cannot write {}: {e}", path.display())))?;
            writeln!(out, "wrote {}", path.display()).map_err(io_err)?;
            Ok(EXIT_OK)
        }
        Command::Compare { file, weights } => {
            let p = load(&file)?;
            let w = load_weights(&weights, &p)?;
            let ranking = weighted_sum_rank(&p, &w)?;
            let g = DominanceEngine::new(&p)?.graph();
            writeln!(out, "weighted-sum ranking:").map_err(io_err)?;
            for (pos, &i) in ranking.order.iter().enumerate() {
                writeln!(out, "{:>4}. {}  {:.6}", pos + 1, p.alternatives[i].id, ranking.scores[i]).map_err(io_err)?;
            }
            let report = consistency_report(&ranking.order, &g)?;
            let metrics = agreement_metrics(&ranking.order, &g)?;
            writeln!(
                out,
                "dominance pairs: {}, inverted: {}, agreement: {:.6}",
                report.total_reference_pairs,
                report.violated_pairs.len(),
                report.agreement_ratio
            )
            .map_err(io_err)?;
            for &(x, y) in &report.violated_pairs {
                writeln!(out, "  inverted: {} ≻ {} but ranked below", g.alternatives[x], g.alternatives[y])
                    .map_err(io_err)?;
            }
            writeln!(out, "decided ratio: {:.6}", metrics.decided_ratio).map_err(io_err)?;
            Ok(EXIT_OK)
        }
        Command::Probe { file, weights } => {
            let p = load(&file)?;
            let w = load_weights(&weights, &p)?;
            let reports = rank_reversal_probe(&p, &w)?;
            let mut any = false;
            for r in &reports {
                if r.reversed_pairs.is_empty() {
                    writeln!(out, "without {}: no reversals", r.removed_alternative).map_err(io_err)?;
                } else {
                    any = true;
                    let pairs: Vec<String> = r.reversed_pairs.iter().map(|(x, y)| format!("{x}/{y}")).collect();
                    writeln!(out, "without {}: reversed {}", r.removed_alternative, pairs.join(", "))
                        .map_err(io_err)?;
                }
            }
            if any {
                writeln!(out, "dominance edges between the remaining alternatives do not depend on the removed one")
                    .map_err(io_err)?;
            }
            Ok(EXIT_OK)
        }
        Command::Serve { file, port, host } => {
            let p = load(&file)?;
            let session = Arc::new(Session::new(p)?);
            let addr = SocketAddr::new(host, port);
            let runtime = tokio::runtime::Runtime::new().map_err(io_err)?;
            writeln!(out, "serving on http://{addr}").map_err(io_err)?;
            out.flush().map_err(io_err)?;
            runtime.block_on(serve(session, addr)).map_err(io_err)?;
            Ok(EXIT_OK)
        }
    }
}
