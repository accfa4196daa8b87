//! Command-line front end for `ledlab`.
//!
//! Reports are `key=value` lines. Exit codes: 0 success, 2 the checked
//! property is false, 3 an enumeration cap or size limit was hit, 4 the
//! input or arguments are malformed.

pub mod commands;
pub mod document;

use std::ffi::OsString;
use std::fmt;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

use crate::commands::GenParams;
use crate::document::{parse_bipartite, PosetDocument};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSE: i32 = 2;
pub const EXIT_CAP: i32 = 3;
pub const EXIT_MALFORMED: i32 = 4;

/// Environment variable overriding the default enumeration cap.
pub const CAP_ENV: &str = "LEDLAB_CAP";

#[derive(Debug, Error)]
pub enum CliError {
    #[error("malformed input: {0}")]
    Malformed(String),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error(transparent)]
    Core(#[from] ledlab::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        use ledlab::Error as E;
        match self {
            CliError::Core(E::CapExceeded(_) | E::SizeExceeded { .. } | E::WidthExceeded { .. }) => EXIT_CAP,
            _ => EXIT_MALFORMED,
        }
    }

    fn hint(&self) -> Option<&'static str> {
        match self {
            CliError::Core(ledlab::Error::CapExceeded(_)) => {
                Some("raise --cap (or LEDLAB_CAP), or use --method dp3 for width at most 3")
            }
            CliError::Core(ledlab::Error::WidthExceeded { .. }) => Some("dp3 needs width at most 3; use --method brute"),
            _ => None,
        }
    }
}

/// Ordered `key=value` lines plus an optional verdict that drives the exit
/// code.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    pub lines: Vec<(String, String)>,
    pub verdict: Option<bool>,
}

impl Report {
    pub fn push(&mut self, key: &str, value: impl fmt::Display) {
        self.lines.push((key.to_string(), value.to_string()));
    }

    pub fn set_verdict(&mut self, v: bool) {
        self.verdict = Some(v);
        self.push("verdict", v);
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.lines.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    pub fn exit_code(&self) -> i32 {
        if self.verdict == Some(false) {
            EXIT_FALSE
        } else {
            EXIT_OK
        }
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, v) in &self.lines {
            writeln!(f, "{k}={v}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    #[value(name = "chain")]
    Chain,
    #[value(name = "antichain")]
    Antichain,
    #[value(name = "n")]
    N,
    #[value(name = "m")]
    M,
    #[value(name = "boolean")]
    Boolean,
    #[value(name = "b4star")]
    B4star,
    #[value(name = "pstar")]
    Pstar,
    #[value(name = "redcore")]
    Redcore,
    #[value(name = "interval")]
    Interval,
    #[value(name = "unitinterval")]
    Unitinterval,
    #[value(name = "threelayer")]
    Threelayer,
    #[value(name = "height2")]
    Height2,
    #[value(name = "twodim")]
    Twodim,
    #[value(name = "gadget")]
    Gadget,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Auto,
    Brute,
    Dp3,
    /// Branch and bound; `--cap` bounds the search nodes.
    Exact,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Property {
    DiamReversing,
    Conjecture1,
    CriticalPairs,
    Interval,
    Graded,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Target {
    B4star,
    Pstar,
}

#[derive(Debug, Parser)]
#[command(name = "ledlab", version, about = "Linear extension diameter toolkit")]
pub struct Cli {
    /// Worker threads for the brute-force engine (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,

    /// Enumeration cap; overrides LEDLAB_CAP.
    #[arg(long, global = true)]
    pub cap: Option<u64>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write a poset document for a named family.
    Gen {
        #[arg(value_enum)]
        family: Family,
        #[arg(long)]
        n: Option<usize>,
        /// Chain length for b4star and pstar.
        #[arg(long)]
        w: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 0.5)]
        prob: f64,
        /// Layer sizes for threelayer.
        #[arg(long, value_delimiter = ',', default_values_t = [2, 2, 2])]
        sizes: Vec<usize>,
        /// Independent-set size for gadget.
        #[arg(long, default_value_t = 1)]
        k: usize,
        /// Bipartite graph file for gadget.
        #[arg(long)]
        graph: Option<PathBuf>,
        /// Emit b4star/pstar with weights instead of expanded chains.
        #[arg(long)]
        weighted: bool,
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Linear extension diameter of a document.
    Led {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Method::Auto)]
        method: Method,
    },
    /// Check a structural property.
    Check {
        file: PathBuf,
        #[arg(long, value_enum)]
        property: Property,
    },
    /// Export the linear extension graph as DOT.
    Legraph {
        file: PathBuf,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Decomposed checks behind the two non-reversing constructions.
    VerifyCounterexample {
        #[arg(long, value_enum)]
        target: Target,
        #[arg(long)]
        w: Option<u64>,
    },
    /// Check the hardness threshold on a small bipartite graph.
    VerifyReduction {
        graph: PathBuf,
        #[arg(long, default_value_t = 1)]
        k: usize,
        /// Node budget of the exact search.
        #[arg(long, default_value_t = 50_000_000)]
        node_budget: u64,
    },
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn read_doc(path: &Path) -> Result<PosetDocument, CliError> {
    PosetDocument::parse(&read(path)?).map_err(|e| match e {
        CliError::Malformed(m) => CliError::Malformed(format!("{}: {m}", path.display())),
        e => e,
    })
}

/// `--cap`, then `LEDLAB_CAP`, then the library default.
pub fn resolve_cap(flag: Option<u64>) -> Result<u64, CliError> {
    if let Some(c) = flag {
        return Ok(c);
    }
    match std::env::var(CAP_ENV) {
        Ok(v) => v.trim().parse().map_err(|_| CliError::Malformed(format!("{CAP_ENV}={v:?} is not a count"))),
        Err(_) => Ok(ledlab::DEFAULT_CAP),
    }
}

/// Runs one command, writing to `out`; returns the exit code of a
/// successful run.
fn execute(cli: Cli, out: &mut dyn Write) -> Result<i32, CliError> {
    if let Some(t) = cli.threads {
        // A second initialisation in the same process keeps the first pool.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(t).build_global();
    }
    let cap = resolve_cap(cli.cap)?;
    let io = |e: std::io::Error| CliError::Io {
        path: PathBuf::from("<stdout>"),
        source: e,
    };
    let report = match cli.command {
        Command::Gen {
            family,
            n,
            w,
            seed,
            prob,
            sizes,
            k,
            graph,
            weighted,
            out: path,
        } => {
            let graph = graph.map(|g| read(&g).and_then(|t| parse_bipartite(&t))).transpose()?;
            let params = GenParams {
                n,
                w,
                seed,
                prob,
                sizes,
                k,
                graph,
                weighted,
            };
            let text = commands::gen(family, &params)?.emit();
            match path {
                Some(p) => write_file(&p, &text)?,
                None => out.write_all(text.as_bytes()).map_err(io)?,
            }
            return Ok(EXIT_OK);
        }
        Command::Led { file, method } => commands::led(&read_doc(&file)?, method, cap)?,
        Command::Check { file, property } => commands::check(&read_doc(&file)?, property, cap)?,
        Command::Legraph { file, dot } => {
            let (text, report) = commands::legraph(&read_doc(&file)?, cap)?;
            match dot {
                Some(p) => {
                    write_file(&p, &text)?;
                    report
                }
                None => {
                    out.write_all(text.as_bytes()).map_err(io)?;
                    return Ok(EXIT_OK);
                }
            }
        }
        Command::VerifyCounterexample { target, w } => commands::verify_counterexample(target, w, cap)?,
        Command::VerifyReduction { graph, k, node_budget } => {
            commands::verify_reduction(&parse_bipartite(&read(&graph)?)?, k, node_budget)?
        }
    };
    write!(out, "{report}").map_err(io)?;
    Ok(report.exit_code())
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = write!(err, "{}", e.render());
            return if e.use_stderr() { EXIT_MALFORMED } else { EXIT_OK };
        }
    };
    match execute(cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if let Some(h) = e.hint() {
                let _ = writeln!(err, "hint: {h}");
            }
            e.exit_code()
        }
    }
}
