//! The `symforge` command line.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use symforge_core::constructions::build_family_graph;
use symforge_core::fixing::build_fixing_graph;
use symforge_core::vecspace::build_nzc_graph;
use symforge_core::verify::Claim;
use symforge_core::{automorphism_group, Graph, Limits, Space};

use crate::formats::{self, GraphFormat};
use crate::report;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

/// Environment variable overriding the vertex-count cap.
pub const MAX_ORDER_ENV: &str = "SYMFORGE_MAX_ORDER";

#[derive(Debug, Parser)]
#[command(name = "symforge", version, about = "Automorphisms, fixing sets and fixed numbers of small graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write a generated graph.
    Generate {
        #[command(subcommand)]
        kind: GenerateKind,
    },
    /// Report |Aut|, orbits, S(G), fix and fxd for a graph file.
    Analyze {
        input: PathBuf,
        #[command(flatten)]
        input_format: InputFormat,
        /// Include fixing-graph statistics.
        #[arg(long)]
        fixing_graph: bool,
        /// Human-readable table instead of JSON.
        #[arg(long)]
        table: bool,
    },
    /// Run the claim checks and stream JSON-lines reports.
    Verify {
        #[arg(long, default_value_t = 4)]
        n_max: usize,
        /// Field orders, comma separated.
        #[arg(long, value_delimiter = ',', default_value = "2")]
        q: Vec<u32>,
        /// Only run these claim ids, comma separated.
        #[arg(long, value_delimiter = ',')]
        claims: Vec<String>,
    },
    /// Convert a graph, or export its automorphism group or fixing graph.
    Export {
        input: PathBuf,
        #[command(flatten)]
        input_format: InputFormat,
        #[arg(long, value_enum, default_value_t = ExportKind::Graph)]
        what: ExportKind,
        /// Output format; groups are always JSON.
        #[arg(long, value_enum, default_value_t = GraphFormat::Json)]
        format: GraphFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
pub enum GenerateKind {
    /// Non-zero component graph of GF(q)^n.
    Nzc {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        q: u32,
        #[command(flatten)]
        output: Output,
    },
    /// Star-union graph with fix = 2^k - (k+1) and fxd = 2^k + k - 4.
    Family {
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Debug, Args)]
pub struct Output {
    #[arg(long, value_enum, default_value_t = GraphFormat::Json)]
    pub format: GraphFormat,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct InputFormat {
    /// Input format; by default taken from the file extension.
    #[arg(long, value_enum)]
    pub input_format: Option<GraphFormat>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum ExportKind {
    Graph,
    Group,
    FixingGraph,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Parse { path: String, source: formats::FormatError },
    #[error(transparent)]
    Core(#[from] symforge_core::Error),
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(e) if e.is_resource_limit() => EXIT_RESOURCE,
            _ => EXIT_USAGE,
        }
    }
}

/// Limits from the defaults and the environment.
pub fn limits_from_env() -> Result<Limits, CliError> {
    let limits = Limits::default();
    match std::env::var(MAX_ORDER_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map(|m| limits.with_max_order(m))
            .map_err(|_| CliError::Usage(format!("{MAX_ORDER_ENV}={v} is not a number"))),
        Err(_) => Ok(limits),
    }
}

fn read_graph(path: &PathBuf, format: Option<GraphFormat>) -> Result<Graph, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
    let format = format.unwrap_or_else(|| GraphFormat::from_path(path));
    formats::parse_graph(&text, format).map_err(|source| CliError::Parse {
        path: path.display().to_string(),
        source,
    })
}

fn emit(out: &mut dyn Write, path: Option<&PathBuf>, text: &str) -> Result<(), CliError> {
    match path {
        Some(p) => std::fs::write(p, text)?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(())
}

/// Runs a parsed command, writing results to `out`, and returns the exit code.
pub fn execute(cli: Cli, out: &mut dyn Write) -> Result<i32, CliError> {
    let limits = limits_from_env()?;
    match cli.command {
        Command::Generate { kind } => {
            let (g, output) = match kind {
                GenerateKind::Nzc { n, q, output } => (build_nzc_graph(Space::new(n, q)?), output),
                GenerateKind::Family { k, output } => (build_family_graph(k)?, output),
            };
            emit(out, output.out.as_ref(), &formats::write_graph(&g, output.format))?;
            Ok(EXIT_OK)
        }
        Command::Analyze { input, input_format, fixing_graph, table } => {
            let g = read_graph(&input, input_format.input_format)?;
            let r = report::analyze(&g, &limits, fixing_graph)?;
            let text = if table { r.to_table() } else { r.to_json() };
            out.write_all(text.as_bytes())?;
            Ok(EXIT_OK)
        }
        Command::Verify { n_max, q, claims } => {
            let selected = claims
                .iter()
                .map(|id| Claim::from_id(id).ok_or_else(|| CliError::Usage(format!("unknown claim id `{id}`"))))
                .collect::<Result<Vec<_>, _>>()?;
            for &p in &q {
                if !symforge_core::math::is_prime(p) {
                    return Err(symforge_core::Error::NotPrime(p).into());
                }
            }
            let filter = (!selected.is_empty()).then_some(selected.as_slice());
            let mut all_pass = true;
            let mut any_resource = false;
            for r in report::run_verify(n_max, &q, filter, &limits) {
                all_pass &= r.passed() || r.status == "resource-limit";
                any_resource |= r.status == "resource-limit";
                out.write_all(r.to_json_line().as_bytes())?;
            }
            Ok(if !all_pass {
                EXIT_CHECK_FAILED
            } else if any_resource {
                EXIT_RESOURCE
            } else {
                EXIT_OK
            })
        }
        Command::Export { input, input_format, what, format, out: path } => {
            let g = read_graph(&input, input_format.input_format)?;
            let text = match what {
                ExportKind::Graph => formats::write_graph(&g, format),
                ExportKind::Group => formats::group_json(&automorphism_group(&g, &limits)?),
                ExportKind::FixingGraph => {
                    let fg = build_fixing_graph(&automorphism_group(&g, &limits)?);
                    match format {
                        GraphFormat::Dot => formats::fixing_graph_dot(&fg),
                        GraphFormat::Json => formats::fixing_graph_json(&fg),
                        GraphFormat::Edgelist => {
                            return Err(CliError::Usage("fixing graphs export as json or dot".into()))
                        }
                    }
                }
            };
            emit(out, path.as_ref(), &text)?;
            Ok(EXIT_OK)
        }
    }
}

/// Parses `args` and runs the command; errors go to stderr. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    match execute(cli, out) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
