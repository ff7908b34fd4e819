//! walg: exact workbench for twisted W-algebra characters, screening
//! kernels, and rank-1 Virasoro structure.
//!
//! Batch-friendly front end: every job prints one report (json, csv, or
//! text) and exits 0 on success, 1 when a mathematical check fails, and 2 on
//! invalid input. The WALG_THREADS environment variable caps the worker
//! pool; reports are byte-identical for any worker count.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use walg_cli::report::{render, Format, InputEcho, Outcome, Report, Status, VERSION};
use walg_cli::run;
use walg_cli::verify;

#[derive(Parser)]
#[command(
    name = "walg",
    version,
    about = "Exact workbench for twisted W-algebra characters, screening kernels, \
             and rank-1 Virasoro structure",
    after_help = "Exit codes: 0 success, 1 failed mathematical check, 2 invalid input.\n\
                  WALG_THREADS caps the worker pool without changing any output byte."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// Shared flags for jobs on a weight/coweight pair.
#[derive(Args)]
struct WeightArgs {
    /// Algebra label: A1..A4, B2..B4, C2..C4, D4, G2.
    #[arg(long)]
    algebra: String,
    /// Dominant weight coordinates on the fundamental weights, comma separated.
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true, required = true)]
    lambda: Vec<i64>,
    /// Dominant coweight coordinates on the fundamental coweights, comma separated.
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true, required = true)]
    mu: Vec<i64>,
    /// Truncation order: coefficients are reported for q^0..q^order.
    #[arg(long)]
    order: usize,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

/// Shared flags for screening-relation jobs (no weight involved).
#[derive(Args)]
struct TwistArgs {
    /// Algebra label: A1..A4, B2..B4, C2..C4, D4, G2.
    #[arg(long)]
    algebra: String,
    /// Dominant coweight coordinates (the screening twists), comma separated.
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true, required = true)]
    mu: Vec<i64>,
    /// Largest graded component degree checked.
    #[arg(long)]
    order: usize,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

/// Shared flags for rank-1 Virasoro jobs.
#[derive(Args)]
struct VirasoroArgs {
    /// Level parameter: an exact rational ("-2", "5/3") or "symbolic".
    #[arg(long, allow_hyphen_values = true)]
    gamma: String,
    /// Kac label lambda (single nonnegative integer).
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true, required = true)]
    lambda: Vec<i64>,
    /// Kac label mu (single nonnegative integer).
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true, required = true)]
    mu: Vec<i64>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Normalized twisted character: coefficients of q^0..q^order.
    Char(WeightArgs),
    /// Check char_T(g, lambda, mu) = char_T(g^v, mu, lambda).
    CharDualCheck(WeightArgs),
    /// Graded dimensions of the joint kernel of the screening powers.
    KernelDims(WeightArgs),
    /// Check the Serre relations for the screening operators.
    SerreCheck(TwistArgs),
    /// Check iterated screening commutators against their closed form.
    CommrelCheck(TwistArgs),
    /// Lowest conformal weight and central charge at a level.
    VirasoroDelta(VirasoroArgs),
    /// Joint kernel of L_1 and L_2 degree by degree.
    VirasoroSingvec {
        #[command(flatten)]
        common: VirasoroArgs,
        /// Largest degree scanned.
        #[arg(long)]
        order: usize,
        /// Degree cap guarding accidental huge jobs.
        #[arg(long, default_value_t = run::SINGVEC_CAP)]
        cap: usize,
    },
    /// Shapovalov gram matrix and corank at one level.
    Shapovalov {
        #[command(flatten)]
        common: VirasoroArgs,
        /// Verma level of the gram matrix.
        #[arg(long)]
        order: usize,
        /// Level cap guarding accidental huge jobs.
        #[arg(long, default_value_t = run::SHAPOVALOV_CAP)]
        cap: usize,
    },
    /// Run the whole verification suite and aggregate pass/fail.
    VerifyAll {
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

fn init_workers() -> Result<(), String> {
    match std::env::var("WALG_THREADS") {
        Ok(v) => {
            let n: usize = v
                .trim()
                .parse()
                .map_err(|_| format!("WALG_THREADS must be a positive integer, got '{}'", v))?;
            if n == 0 {
                return Err("WALG_THREADS must be a positive integer".to_string());
            }
            rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build_global()
                .map_err(|e| e.to_string())
        }
        Err(std::env::VarError::NotPresent) => Ok(()),
        Err(e) => Err(e.to_string()),
    }
}

/// Executes the parsed command: report name, input echo, format, and either
/// the outcome or an invalid-input message.
fn execute(command: Command) -> (&'static str, InputEcho, Format, Result<Outcome, String>) {
    match command {
        Command::Char(a) => {
            let echo = weight_echo(&a);
            let out = run::char_outcome(&a.algebra, &a.lambda, &a.mu, a.order);
            ("char", echo, a.format, out)
        }
        Command::CharDualCheck(a) => {
            let echo = weight_echo(&a);
            let out = run::char_dual_outcome(&a.algebra, &a.lambda, &a.mu, a.order);
            ("char-dual-check", echo, a.format, out)
        }
        Command::KernelDims(a) => {
            let echo = weight_echo(&a);
            let out = run::kernel_dims_outcome(&a.algebra, &a.lambda, &a.mu, a.order);
            ("kernel-dims", echo, a.format, out)
        }
        Command::SerreCheck(a) => {
            let echo = twist_echo(&a);
            let out = run::serre_outcome(&a.algebra, &a.mu, a.order);
            ("serre-check", echo, a.format, out)
        }
        Command::CommrelCheck(a) => {
            let echo = twist_echo(&a);
            let out = run::commrel_outcome(&a.algebra, &a.mu, a.order);
            ("commrel-check", echo, a.format, out)
        }
        Command::VirasoroDelta(a) => match run::parse_gamma(&a.gamma) {
            Ok(g) => {
                let echo = virasoro_echo(&a, &g, None);
                let out = run::virasoro_delta_outcome(&g, &a.lambda, &a.mu);
                ("virasoro-delta", echo, a.format, out)
            }
            Err(e) => ("virasoro-delta", virasoro_echo_raw(&a, None), a.format, Err(e)),
        },
        Command::VirasoroSingvec { common, order, cap } => match run::parse_gamma(&common.gamma) {
            Ok(g) => {
                let echo = virasoro_echo(&common, &g, Some(order));
                let out = run::virasoro_singvec_outcome(&g, &common.lambda, &common.mu, order, cap);
                ("virasoro-singvec", echo, common.format, out)
            }
            Err(e) => (
                "virasoro-singvec",
                virasoro_echo_raw(&common, Some(order)),
                common.format,
                Err(e),
            ),
        },
        Command::Shapovalov { common, order, cap } => match run::parse_gamma(&common.gamma) {
            Ok(g) => {
                let echo = virasoro_echo(&common, &g, Some(order));
                let out = run::shapovalov_outcome(&g, &common.lambda, &common.mu, order, cap);
                ("shapovalov", echo, common.format, out)
            }
            Err(e) => (
                "shapovalov",
                virasoro_echo_raw(&common, Some(order)),
                common.format,
                Err(e),
            ),
        },
        Command::VerifyAll { format } => {
            let echo = InputEcho::empty(format);
            ("verify-all", echo, format, Ok(verify::verify_all_outcome()))
        }
    }
}

fn weight_echo(a: &WeightArgs) -> InputEcho {
    InputEcho {
        algebra: Some(a.algebra.clone()),
        lambda: Some(a.lambda.clone()),
        mu: Some(a.mu.clone()),
        order: Some(a.order),
        gamma: None,
        format: a.format.as_str(),
    }
}

fn twist_echo(a: &TwistArgs) -> InputEcho {
    InputEcho {
        algebra: Some(a.algebra.clone()),
        lambda: None,
        mu: Some(a.mu.clone()),
        order: Some(a.order),
        gamma: None,
        format: a.format.as_str(),
    }
}

fn virasoro_echo(a: &VirasoroArgs, gamma: &run::Gamma, order: Option<usize>) -> InputEcho {
    InputEcho {
        algebra: None,
        lambda: Some(a.lambda.clone()),
        mu: Some(a.mu.clone()),
        order,
        gamma: Some(gamma.echo()),
        format: a.format.as_str(),
    }
}

fn virasoro_echo_raw(a: &VirasoroArgs, order: Option<usize>) -> InputEcho {
    InputEcho {
        algebra: None,
        lambda: Some(a.lambda.clone()),
        mu: Some(a.mu.clone()),
        order,
        gamma: Some(a.gamma.clone()),
        format: a.format.as_str(),
    }
}

fn main() -> ExitCode {
    if let Err(msg) = init_workers() {
        eprintln!("error: {}", msg);
        return ExitCode::from(2);
    }
    let cli = Cli::parse();
    let (command, input, format, result) = execute(cli.command);
    match result {
        Ok(outcome) => {
            let report = Report {
                command,
                version: VERSION,
                status: if outcome.ok { Status::Ok } else { Status::CheckFailed },
                input,
                result: outcome.result.clone(),
            };
            print!("{}", render(&report, &outcome, format));
            if outcome.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(msg) => {
            eprintln!("error: {}", msg);
            ExitCode::from(2)
        }
    }
}
