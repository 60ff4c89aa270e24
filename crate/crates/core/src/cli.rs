//! The `twowalk` command line.
//!
//! Exit codes: 0 for success or an affirmative verdict, 1 for a negative
//! verdict, 2 when the arguments or the input cannot be used.

use std::io::{Read, Write};
use std::path::PathBuf;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};

use crate::digraph::Digraph;
use crate::error::Error;
use crate::family::{construct, default_spec, enumerate_specs, ex_formula, lower_bound, Family};
use crate::format::{parse_digraph, write_arc_list, write_dot, write_matrix, write_rows};
use crate::recognize::recognize;
use crate::search::{brute_force_max_with_progress, Budget, SearchConfig};
use crate::walk::{is_f_free, square};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "twowalk", version, about = "Digraphs without two 2-walks sharing both ends")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Emit a member of one of the families D1..D6.
    Construct {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        n: usize,
        /// Take the K-th spec of the family's parameter sweep instead of the default one.
        #[arg(long, value_name = "K")]
        shape_seed: Option<usize>,
        #[arg(long)]
        reverse: bool,
        #[arg(long, value_enum, default_value_t = OutputFormat::Matrix)]
        format: OutputFormat,
    },
    /// Decide whether a digraph file is F-free.
    Check { file: PathBuf },
    /// Maximum size ex(n), computed as selected by --mode.
    Exmax {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        mode: ExMode,
        /// Node budget for the search.
        #[arg(long, value_name = "NODES")]
        budget: Option<u64>,
        #[arg(long, value_name = "SECS")]
        time_limit: Option<f64>,
        /// Bound nodes by the pairs still admissible, capped by the common-successor count.
        #[arg(long)]
        lemma2_bound: bool,
        /// Only explore digraphs where vertex 0 has maximum out-degree.
        #[arg(long)]
        symmetry: bool,
        /// Write the search witness here as an arc list.
        #[arg(long, value_name = "PATH")]
        witness: Option<PathBuf>,
        /// Print search progress lines to standard error.
        #[arg(long)]
        progress: bool,
    },
    /// Classify a digraph of order at least 8 with ex(n) arcs; prints JSON.
    Recognize { file: PathBuf },
    /// Print the integer square of the adjacency matrix.
    Square { file: PathBuf },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Matrix,
    Arcs,
    Spec,
    Json,
    Dot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ExMode {
    Formula,
    Bound,
    Search,
}

/// Command failure: message for standard error plus exit code.
struct Failure(i32, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(EXIT_USAGE, e.to_string())
    }
}

type Outcome = std::result::Result<i32, Failure>;

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(code) => code,
        Err(Failure(code, msg)) => {
            let _ = writeln!(err, "error: {msg}");
            code
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    match command {
        Command::Construct { family, n, shape_seed, reverse, format } => {
            cmd_construct(family, n, shape_seed, reverse, format, out)
        }
        Command::Check { file } => cmd_check(&read_digraph(&file)?, out),
        Command::Exmax { n, mode, budget, time_limit, lemma2_bound, symmetry, witness, progress } => {
            let config = SearchConfig {
                budget: Budget {
                    max_nodes: budget,
                    max_time: time_limit.map(Duration::from_secs_f64),
                },
                lemma2_bound,
                symmetry,
                audit: false,
            };
            cmd_exmax(n, mode, &config, witness, progress, out, err)
        }
        Command::Recognize { file } => cmd_recognize(&read_digraph(&file)?, out),
        Command::Square { file } => {
            let d = read_digraph(&file)?;
            emit(out, &write_rows(&square(&d.to_matrix()).rows()))?;
            Ok(EXIT_OK)
        }
    }
}

fn io_failure(e: std::io::Error) -> Failure {
    Failure(EXIT_USAGE, e.to_string())
}

fn emit(out: &mut dyn Write, text: &str) -> std::result::Result<(), Failure> {
    out.write_all(text.as_bytes()).map_err(io_failure)
}

/// Reads a digraph from a path, or from standard input for `-`.
fn read_digraph(path: &PathBuf) -> std::result::Result<Digraph, Failure> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(io_failure)?;
        s
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| Failure(EXIT_USAGE, format!("{}: {e}", path.display())))?
    };
    Ok(parse_digraph(&text)?)
}

fn cmd_construct(
    family: Family,
    n: usize,
    shape_seed: Option<usize>,
    reverse: bool,
    format: OutputFormat,
    out: &mut dyn Write,
) -> Outcome {
    let spec = match shape_seed {
        None => default_spec(family, n)?,
        Some(k) => {
            family.check_order(n)?;
            enumerate_specs(family, n, usize::MAX).nth(k).ok_or_else(|| {
                Failure(EXIT_USAGE, format!("shape seed {k} exceeds the {family} sweep at n = {n}"))
            })?
        }
    };
    if reverse && matches!(format, OutputFormat::Spec | OutputFormat::Json) {
        return Err(Failure(
            EXIT_USAGE,
            "--reverse applies to digraph formats only; a spec describes the unreversed instance".into(),
        ));
    }
    let d = construct(&spec)?;
    let d = if reverse { d.reverse() } else { d };
    let text = match format {
        OutputFormat::Matrix => write_matrix(&d),
        OutputFormat::Arcs => write_arc_list(&d),
        OutputFormat::Dot => write_dot(&d),
        OutputFormat::Spec => spec.to_string(),
        OutputFormat::Json => to_json(&spec)?,
    };
    emit(out, &text)?;
    Ok(EXIT_OK)
}

fn to_json<T: serde::Serialize>(value: &T) -> std::result::Result<String, Failure> {
    serde_json::to_string_pretty(value)
        .map(|s| s + "\n")
        .map_err(|e| Failure(EXIT_USAGE, e.to_string()))
}

fn cmd_check(d: &Digraph, out: &mut dyn Write) -> Outcome {
    let n = d.order();
    let m = d.to_matrix();
    let mut text = format!(
        "order: {n}\ntrace: {}\nmax entry of A^2: {}\n",
        m.trace(),
        square(&m).max_entry()
    );
    let report = is_f_free(d);
    let size = d.size();
    let code = match report.witness {
        Some(w) => {
            text += &format!("F-free: no; witness {w}\n");
            EXIT_NEGATIVE
        }
        None => {
            let comparison = match ex_formula(n) {
                Ok(ex) if size == ex => format!(" = ex({n})"),
                Ok(ex) => format!(" < ex({n}) = {ex}"),
                Err(_) => String::new(),
            };
            text += &format!("F-free: yes; size {size}{comparison}\n");
            EXIT_OK
        }
    };
    emit(out, &text)?;
    Ok(code)
}

fn cmd_exmax(
    n: usize,
    mode: ExMode,
    config: &SearchConfig,
    witness: Option<PathBuf>,
    progress: bool,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Outcome {
    let line = match mode {
        ExMode::Formula => ex_formula(n)?.to_string(),
        ExMode::Bound => lower_bound(n)?.to_string(),
        ExMode::Search => {
            let mut report = |e: &crate::search::ProgressEvent| {
                if progress {
                    let _ = writeln!(err, "{e}");
                }
            };
            let result = brute_force_max_with_progress(n, config, &mut report)?;
            if let Some(path) = witness {
                std::fs::write(&path, write_arc_list(&result.witness))
                    .map_err(|e| Failure(EXIT_USAGE, format!("{}: {e}", path.display())))?;
            }
            let status = if result.complete { "complete" } else { "incomplete: budget exhausted" };
            format!("{} ({status})", result.max_size)
        }
    };
    emit(out, &(line + "\n"))?;
    Ok(EXIT_OK)
}

fn cmd_recognize(d: &Digraph, out: &mut dyn Write) -> Outcome {
    let report = recognize(d)?;
    emit(out, &to_json(&report)?)?;
    Ok(if report.is_extremal() { EXIT_OK } else { EXIT_NEGATIVE })
}
