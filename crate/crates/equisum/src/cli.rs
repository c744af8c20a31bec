//! `equisum <solve|verify|enumerate|oracle|bench> [flags]`
//!
//! Exit codes:
//!
//! | code | meaning                                             |
//! |------|-----------------------------------------------------|
//! | 0    | success                                             |
//! | 1    | negative verdict (invalid partitioning, none exists) |
//! | 2    | infeasible instance or violated precondition        |
//! | 3    | arithmetic overflow                                 |
//! | 4    | malformed input file                                |
//! | 5    | oracle search budget exceeded                       |
//! | 6    | internal invariant violation in the solver          |

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use equisum_core::{
    brute_force_solve, delta, enumerate_feasible, gauss_params, make_instance, meander_applicable,
    pisolve::solve_detailed, verify, Error, Instance, OracleLimits,
};

use crate::{bench, format, render};

pub const EXIT_OK: u8 = 0;
pub const EXIT_NEGATIVE: u8 = 1;
pub const EXIT_INFEASIBLE: u8 = 2;
pub const EXIT_OVERFLOW: u8 = 3;
pub const EXIT_MALFORMED: u8 = 4;
pub const EXIT_BUDGET: u8 = 5;
pub const EXIT_INTERNAL: u8 = 6;

#[derive(Debug, Parser)]
#[command(name = "equisum", version, about = "Partition {1..n} into k subsets with equal sums")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Construct a (k, t) partitioning of {1..n}
    Solve(SolveArgs),
    /// Check a partitioning file in the canonical JSON format
    Verify(VerifyArgs),
    /// List every feasible (k, t) for n
    Enumerate(EnumerateArgs),
    /// Run the brute-force reference solver (small n only)
    Oracle(OracleArgs),
    /// Time the solver and emit CSV records
    Bench(BenchArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    #[arg(long)]
    pub n: u64,
    #[arg(long)]
    pub k: u64,
    /// Target sum; derived as delta(n)/k when omitted, cross-checked otherwise
    #[arg(long)]
    pub t: Option<u64>,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,
    /// Disable the meander shortcut and recurse all the way down
    #[arg(long)]
    pub no_meander: bool,
    /// Print the meander grid if the solve stopped at one
    #[arg(long)]
    pub show_matrix: bool,
    /// Print one line per recursion step to stderr
    #[arg(long)]
    pub trace: bool,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,
}

#[derive(Debug, Args)]
pub struct EnumerateArgs {
    #[arg(long)]
    pub n: u64,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    #[arg(long)]
    pub n: u64,
    #[arg(long)]
    pub k: u64,
    #[arg(long)]
    pub t: Option<u64>,
    #[arg(long, default_value_t = 30)]
    pub max_n: u64,
    #[arg(long, default_value_t = 50_000_000)]
    pub max_nodes: u64,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    /// Comma-separated list of n
    #[arg(long, value_delimiter = ',', conflicts_with = "n_max")]
    pub n: Vec<u64>,
    /// Sweep n = stride, 2*stride, ..., up to n_max
    #[arg(long, requires = "stride")]
    pub n_max: Option<u64>,
    #[arg(long)]
    pub stride: Option<u64>,
    /// Fixed k for every n; defaults to the largest feasible k
    #[arg(long)]
    pub k: Option<u64>,
    #[arg(long, default_value_t = 5)]
    pub reps: u32,
    #[arg(long)]
    pub no_meander: bool,
}

pub fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Overflow => EXIT_OVERFLOW,
        Error::BudgetExceeded { .. } => EXIT_BUDGET,
        Error::Invariant(_) => EXIT_INTERNAL,
        Error::InvalidPartitioning => EXIT_NEGATIVE,
        Error::NonPositive { .. }
        | Error::InfeasibleSum { .. }
        | Error::InfeasibleTarget { .. }
        | Error::MeanderNotApplicable { .. }
        | Error::OracleLimit { .. }
        | Error::OracleCap { .. } => EXIT_INFEASIBLE,
    }
}

/// Runs a parsed command line, writing results to `out` and diagnostics to
/// `err`. Returns the process exit code.
pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> u8 {
    let result = match cli.command {
        Command::Solve(a) => cmd_solve(&a, out, err),
        Command::Verify(a) => cmd_verify(&a, out, err),
        Command::Enumerate(a) => cmd_enumerate(&a, out),
        Command::Oracle(a) => cmd_oracle(&a, out),
        Command::Bench(a) => cmd_bench(&a, out, err),
    };
    match result {
        Ok(code) => code,
        Err(Failure { code, message }) => {
            let _ = writeln!(err, "error: {message}");
            code
        }
    }
}

pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure { code: exit_code(&e), message: e.to_string() }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure { code: EXIT_INTERNAL, message: format!("write failed: {e}") }
    }
}

type CmdResult = Result<u8, Failure>;

fn solve_instance(n: u64, k: u64, t: Option<u64>) -> Result<Instance, Error> {
    match t {
        Some(t) => make_instance(n, k, t),
        None => Instance::from_n_k(n, k),
    }
}

pub fn cmd_solve(a: &SolveArgs, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    let inst = solve_instance(a.n, a.k, a.t)?;
    let sol = solve_detailed(inst, !a.no_meander)?;
    if a.trace {
        for s in &sol.steps {
            writeln!(err, "{s}")?;
        }
    }
    let p = &sol.partitioning;
    match a.format {
        OutputFormat::Text => write!(out, "{}", render::partitioning_text(p))?,
        OutputFormat::Json => writeln!(out, "{}", format::to_json(p))?,
        OutputFormat::Csv => write!(out, "{}", render::partitioning_csv(p))?,
    }
    if a.show_matrix {
        if let Some(stop) = &sol.meander {
            // keep machine formats on stdout parseable
            let grid = render::meander_stop_text(stop);
            if a.format == OutputFormat::Text {
                write!(out, "\n{grid}")?;
            } else {
                write!(err, "{grid}")?;
            }
        }
    }
    Ok(EXIT_OK)
}

pub fn cmd_verify(a: &VerifyArgs, out: &mut dyn Write, _err: &mut dyn Write) -> CmdResult {
    let malformed = |message: String| Failure { code: EXIT_MALFORMED, message };
    let text = std::fs::read_to_string(&a.input)
        .map_err(|e| malformed(format!("cannot read {}: {e}", a.input.display())))?;
    let p = format::from_json(&text).map_err(|e| malformed(e.to_string()))?;
    let report = verify(&p);
    match a.format {
        OutputFormat::Json => writeln!(out, "{}", render::report_json(&report))?,
        _ => write!(out, "{}", render::report_text(&report, p.t()))?,
    }
    Ok(if report.valid() { EXIT_OK } else { EXIT_NEGATIVE })
}

pub fn cmd_enumerate(a: &EnumerateArgs, out: &mut dyn Write) -> CmdResult {
    if a.n == 0 {
        return Err(Error::NonPositive { name: "n" }.into());
    }
    let gauss = gauss_params(a.n);
    let rows: Vec<_> = enumerate_feasible(a.n)?
        .into_iter()
        .map(|(k, t)| (k, t, meander_applicable(a.n, k), k == gauss.k && t == gauss.t))
        .collect();
    match a.format {
        OutputFormat::Text => {
            writeln!(out, "{:>10} {:>20}  meander  gauss", "k", "t")?;
            for (k, t, m, g) in rows {
                let yn = |b: bool| if b { "yes" } else { "no" };
                writeln!(out, "{k:>10} {t:>20}  {:<7}  {}", yn(m), yn(g))?;
            }
        }
        OutputFormat::Csv => {
            writeln!(out, "k,t,meander_applicable,is_gauss")?;
            for (k, t, m, g) in rows {
                writeln!(out, "{k},{t},{m},{g}")?;
            }
        }
        OutputFormat::Json => {
            let v: Vec<_> = rows
                .into_iter()
                .map(|(k, t, m, g)| serde_json::json!({"k": k, "t": t, "meander_applicable": m, "is_gauss": g}))
                .collect();
            writeln!(out, "{}", serde_json::Value::Array(v))?;
        }
    }
    Ok(EXIT_OK)
}

pub fn cmd_oracle(a: &OracleArgs, out: &mut dyn Write) -> CmdResult {
    let limits = OracleLimits::new(a.max_n, a.max_nodes)?;
    if a.n > limits.max_n() {
        return Err(Error::OracleLimit { n: a.n, max_n: limits.max_n() }.into());
    }
    if a.n == 0 || a.k == 0 {
        return Err(Error::NonPositive { name: if a.n == 0 { "n" } else { "k" } }.into());
    }
    let d = delta(a.n)?;
    let t = match a.t {
        Some(t) => t,
        None if d % a.k == 0 => d / a.k,
        None => {
            writeln!(out, "no partitioning exists: k = {} does not divide delta(n) = {d}", a.k)?;
            return Ok(EXIT_NEGATIVE);
        }
    };
    match brute_force_solve(a.n, a.k, t, limits)? {
        Some(p) => {
            match a.format {
                OutputFormat::Json => writeln!(out, "{}", format::to_json(&p))?,
                OutputFormat::Csv => write!(out, "{}", render::partitioning_csv(&p))?,
                OutputFormat::Text => write!(out, "{}", render::partitioning_text(&p))?,
            }
            Ok(EXIT_OK)
        }
        None => {
            writeln!(out, "no partitioning exists for n={} k={} t={t}", a.n, a.k)?;
            Ok(EXIT_NEGATIVE)
        }
    }
}

pub fn cmd_bench(a: &BenchArgs, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    let ns: Vec<u64> = match (a.n_max, a.stride) {
        (Some(max), Some(stride)) if stride > 0 => (1..).map(|i| i * stride).take_while(|&n| n <= max).collect(),
        (Some(_), _) => return Err(Failure { code: EXIT_INFEASIBLE, message: "--stride must be positive".into() }),
        _ => a.n.clone(),
    };
    if ns.is_empty() {
        return Err(Failure { code: EXIT_INFEASIBLE, message: "no n values given (use --n or --n-max/--stride)".into() });
    }
    let records = bench::run(&ns, a.k, a.reps, !a.no_meander);
    bench::write_csv(&mut *out, &records).map_err(|e| Failure { code: EXIT_INTERNAL, message: e.to_string() })?;
    for (n, k, m) in bench::medians(&records) {
        writeln!(err, "median n={n} k={k} wall_ns={}", m.as_nanos())?;
    }
    Ok(EXIT_OK)
}
