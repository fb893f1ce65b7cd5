use clap::{Args, Parser, Subcommand};
use harmonic_core::bounds::{self, BoundCheck, Partials};
use harmonic_core::specfun::{harmonic_exact, UnitFractionSum};
use harmonic_core::verify::{CheckKind, Plan, Summary, VerificationReport};
use harmonic_core::{Error, Precision};

use crate::output::{render_bounds, render_report, render_value, verdict_summary, Evaluated, Format};
use crate::parallel::{default_jobs, run_plan};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_UNDECIDED: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "harmonic", version, about = "Certified enclosures and bound checks for harmonic numbers")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print H(n).
    Eval {
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        /// Print the exact reduced fraction.
        #[arg(long)]
        exact: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Check catalog bounds at one n.
    Bounds {
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        /// Bound id, or `all`.
        #[arg(long, default_value = "all")]
        bound: String,
        #[command(flatten)]
        common: Common,
    },
    /// Run verification sweeps over [1, max-n].
    Verify {
        #[arg(long, default_value_t = 1000, value_parser = clap::value_parser!(u64).range(3..))]
        max_n: u64,
        /// Comma-separated check groups; all by default.
        #[arg(long, value_delimiter = ',', value_parser = parse_check)]
        checks: Vec<CheckKind>,
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        workers: Workers,
    },
    /// Compare the interval for H(n) implied by the main bound with older ones.
    Compare {
        #[arg(long, default_value_t = 1000, value_parser = clap::value_parser!(u64).range(2..))]
        max_n: u64,
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        workers: Workers,
    },
}

#[derive(Debug, Args)]
pub struct Common {
    /// Working precision in bits.
    #[arg(long, default_value = "128", value_parser = parse_precision)]
    pub precision: Precision,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct Workers {
    /// Worker threads; defaults to the number of cores.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub jobs: Option<u64>,
}

impl Workers {
    fn count(&self) -> usize {
        self.jobs.map_or_else(default_jobs, |j| j as usize)
    }
}

fn parse_precision(s: &str) -> Result<Precision, String> {
    let bits: u32 = s.parse().map_err(|e| format!("{e}"))?;
    Precision::new(bits).map_err(|e| e.to_string())
}

fn parse_check(s: &str) -> Result<CheckKind, String> {
    s.parse().map_err(|_| {
        let names: Vec<&str> = CheckKind::ALL.iter().map(|k| k.as_str()).collect();
        format!("expected one of {}", names.join(", "))
    })
}

/// Everything a command writes, plus its exit code.
#[derive(Debug, Default)]
pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Output {
    fn ok(stdout: String, code: i32) -> Output {
        Output { stdout, stderr: String::new(), code }
    }

    fn error(e: &Error) -> Output {
        let code = match e {
            Error::Parameter(_) | Error::UnknownBound(_) | Error::BelowDomain { .. } | Error::Precision(_) => {
                EXIT_USAGE
            }
            _ => EXIT_FAIL,
        };
        Output { stdout: String::new(), stderr: format!("error: {e}\n"), code }
    }
}

/// 1 if anything failed, else 3 if anything is undecided, else 0.
pub fn exit_code(s: &Summary) -> i32 {
    if s.fail > 0 {
        EXIT_FAIL
    } else if s.undecided > 0 {
        EXIT_UNDECIDED
    } else {
        EXIT_OK
    }
}

pub fn run(cli: Cli) -> Output {
    let result = match cli.command {
        Command::Eval { n, exact, common } => eval(n, exact, &common),
        Command::Bounds { n, bound, common } => bounds_at(n, &bound, &common),
        Command::Verify { max_n, checks, common, workers } => {
            let checks = if checks.is_empty() { CheckKind::ALL.to_vec() } else { checks };
            sweep(max_n, &checks, &common, &workers)
        }
        Command::Compare { max_n, common, workers } => sweep(max_n, &[CheckKind::Refinement], &common, &workers),
    };
    result.unwrap_or_else(|e| Output::error(&e))
}

fn eval(n: u64, exact: bool, c: &Common) -> harmonic_core::Result<Output> {
    let value = if exact {
        Evaluated::Exact(harmonic_exact(n)?.to_string())
    } else {
        Evaluated::Enclosure(UnitFractionSum::harmonic(n).to_ball(c.precision))
    };
    Ok(Output::ok(render_value(n, &value, c.format), EXIT_OK))
}

fn bounds_at(n: u64, id: &str, c: &Common) -> harmonic_core::Result<Output> {
    let specs: Vec<_> = if id == "all" {
        bounds::catalog().iter().filter(|s| s.domain_min <= n).collect()
    } else {
        vec![bounds::find(id)?]
    };
    let partials = Partials::at(n)?;
    let checks: Vec<BoundCheck> =
        specs.into_iter().map(|s| bounds::check_spec(s, &partials, c.precision)).collect::<Result<_, _>>()?;
    let code = exit_code(&verdict_summary(checks.iter().map(|c| c.verdict)));
    Ok(Output::ok(render_bounds(&checks, c.format), code))
}

fn sweep(max_n: u64, checks: &[CheckKind], c: &Common, w: &Workers) -> harmonic_core::Result<Output> {
    let plan = Plan::new(max_n, c.precision, checks)?;
    let report: VerificationReport = run_plan(&plan, w.count())?;
    let code = exit_code(&report.summary());
    Ok(Output::ok(render_report(&report, c.format), code))
}
