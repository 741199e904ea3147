//! The `rectchar` command line.
//!
//! Exit codes: 0 on success, 1 when a verification or cross-engine check
//! fails, 2 on bad input.

mod engine;
mod report;
mod verify;

use std::io::{self, Write};

use clap::{Args, Parser, Subcommand};
use thiserror::Error;

pub use engine::{
    cmd_bench, cmd_eval, format_value, BenchFailure, Caps, EvalRequest, Method, ReportRow,
    RowInputs,
};
pub use report::Format;
pub use verify::{cmd_verify, Bounds, CaseResult, Suite};

use crate::closed::{corollary_poly, DiffParity, Family};
use crate::poly::{bipoly_text, jnpoly_text};
use crate::stanley::stanley_poly;
use crate::young::Partition;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("internal error: {0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Internal(_) => 1,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "rectchar",
    version,
    about = "Exact normalized characters of S_n on rectangular diagrams"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, default_value = "table")]
    format: Format,
    /// Worker threads for verification grids and the permutation sweep.
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct CapArgs {
    /// Largest |π| the Stanley engine will enumerate.
    #[arg(long, default_value_t = Caps::default().stanley_max_k)]
    stanley_cap: usize,
    /// Largest diagram size pq the oracle will accept.
    #[arg(long, default_value_t = Caps::default().oracle_max_n)]
    oracle_cap: u128,
}

impl CapArgs {
    fn caps(&self) -> Caps {
        Caps {
            stanley_max_k: self.stanley_cap,
            oracle_max_n: self.oracle_cap,
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate Ch_π(p × q) with one engine.
    Eval {
        #[arg(long)]
        method: Method,
        /// A cycle length `k` or a partition such as `3,2,1`.
        #[arg(long)]
        cycle: Partition,
        #[arg(long, allow_negative_numbers = true)]
        p: i64,
        #[arg(long, allow_negative_numbers = true)]
        q: i64,
        #[command(flatten)]
        caps: CapArgs,
    },
    /// Print a Stanley polynomial or an almost-square family polynomial.
    Poly {
        /// stanley, G, H, I or J.
        #[arg(long)]
        kind: PolyKind,
        #[arg(long)]
        cycle: Option<Partition>,
        /// Twice the offset q - p.
        #[arg(long, allow_negative_numbers = true)]
        two_d: Option<i64>,
        #[command(flatten)]
        caps: CapArgs,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long, default_value = "all")]
        suite: Suite,
        #[arg(long)]
        k_max: Option<usize>,
        #[arg(long)]
        pq_max: Option<usize>,
        #[arg(long)]
        j_max: Option<usize>,
    },
    /// Time every engine on single cycles and compare their values.
    Bench {
        /// Cycle lengths, comma separated.
        #[arg(long, value_delimiter = ',', required = true)]
        k: Vec<usize>,
        #[arg(long)]
        p: i64,
        #[arg(long)]
        q: i64,
        /// Restrict to these engines; exceeding a named engine's cap is an error.
        #[arg(long, value_delimiter = ',')]
        method: Vec<Method>,
        #[command(flatten)]
        caps: CapArgs,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolyKind {
    Stanley,
    Family(Family),
}

impl std::str::FromStr for PolyKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "stanley" => PolyKind::Stanley,
            "G" => PolyKind::Family(Family::G),
            "H" => PolyKind::Family(Family::H),
            "I" => PolyKind::Family(Family::I),
            "J" => PolyKind::Family(Family::J),
            other => {
                return Err(format!(
                    "unknown kind {other:?} (expected stanley, G, H, I or J)"
                ))
            }
        })
    }
}

/// Canonical text of the requested polynomial.
pub fn cmd_poly(
    kind: PolyKind,
    cycle: Option<&Partition>,
    two_d: Option<i64>,
    caps: &Caps,
) -> Result<String, CliError> {
    match kind {
        PolyKind::Stanley => {
            let pi = cycle.ok_or_else(|| CliError::Usage("--kind stanley needs --cycle".into()))?;
            if pi.is_empty() {
                return Err(CliError::Usage("cycle must be a nonempty partition".into()));
            }
            if pi.size() > caps.stanley_max_k {
                return Err(CliError::Usage(format!(
                    "stanley cap exceeded: |π| = {} > {}",
                    pi.size(),
                    caps.stanley_max_k
                )));
            }
            Ok(bipoly_text(&stanley_poly(pi)))
        }
        PolyKind::Family(family) => {
            let two_d =
                two_d.ok_or_else(|| CliError::Usage(format!("--kind {family} needs --two-d")))?;
            let case = family.case();
            if DiffParity::of(two_d) != case.diff {
                return Err(CliError::Usage(format!(
                    "family {family} needs {} two_d, got {two_d}",
                    if case.diff == DiffParity::Even {
                        "even"
                    } else {
                        "odd"
                    }
                )));
            }
            Ok(jnpoly_text(&corollary_poly(two_d, case.cycle)))
        }
    }
}

fn io_err(e: io::Error) -> CliError {
    CliError::Internal(format!("write failed: {e}"))
}

fn dispatch(cli: Cli, out: &mut dyn Write) -> Result<i32, CliError> {
    let format = cli.format;
    match cli.command {
        Command::Eval {
            method,
            cycle,
            p,
            q,
            caps,
        } => {
            let row = cmd_eval(
                &EvalRequest {
                    method,
                    cycle,
                    p,
                    q,
                },
                &caps.caps(),
            )?;
            report::write_rows(out, &[row], format).map_err(io_err)?;
            Ok(0)
        }
        Command::Poly {
            kind,
            cycle,
            two_d,
            caps,
        } => {
            let text = cmd_poly(kind, cycle.as_ref(), two_d, &caps.caps())?;
            let label = match kind {
                PolyKind::Stanley => "stanley".to_string(),
                PolyKind::Family(f) => f.to_string(),
            };
            report::write_text(out, &label, &text, format).map_err(io_err)?;
            Ok(0)
        }
        Command::Verify {
            suite,
            k_max,
            pq_max,
            j_max,
        } => {
            let cases = cmd_verify(
                suite,
                &Bounds {
                    k_max,
                    pq_max,
                    j_max,
                },
            );
            report::write_cases(out, &cases, format).map_err(io_err)?;
            Ok(if cases.iter().all(|c| c.passed) { 0 } else { 1 })
        }
        Command::Bench {
            k,
            p,
            q,
            method,
            caps,
        } => {
            let methods = (!method.is_empty()).then_some(method.as_slice());
            match cmd_bench(&k, p, q, methods, &caps.caps()) {
                Ok(rows) => {
                    report::write_rows(out, &rows, format).map_err(io_err)?;
                    Ok(0)
                }
                Err(BenchFailure::Usage(e)) => Err(e),
                Err(BenchFailure::Mismatch { rows, ks }) => {
                    report::write_rows(out, &rows, format).map_err(io_err)?;
                    eprintln!("engines disagree for k in {ks:?}");
                    Ok(1)
                }
            }
        }
    }
}

/// Parses `args` (including the program name), runs the command and returns
/// the process exit code. Normal output goes to `out`, diagnostics to stderr.
pub fn run<I, S>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                eprint!("{}", e.render());
            } else {
                let _ = write!(out, "{}", e.render());
            }
            return e.exit_code();
        }
    };
    if let Some(n) = cli.threads {
        // a pool may already exist when `run` is called twice in one process
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global();
    }
    match dispatch(cli, out) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
