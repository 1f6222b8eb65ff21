//! The `decocat` command-line front end.
//!
//! Four subcommands write CSV data (with '#'-prefixed metadata headers)
//! for the standard experiments:
//!
//! - `fringes`: momentum fringe patterns for a sweep of environment
//!   overlaps, plus a visibility summary.
//! - `dynamics`: visibility and Schmidt number as the environment grows
//!   mode by mode.
//! - `collapse`: sequential-measurement collapse trajectories in long
//!   format.
//! - `verify`: the built-in oracle suite; prints a PASS/FAIL table.
//!
//! Exit codes: 0 success, 1 invalid arguments, 2 I/O failure,
//! 3 verification failure. `DECOCAT_THREADS` caps the worker threads used
//! for trajectory ensembles; outputs are identical for any thread count.

use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};

use crate::amplitude::ComplexAmplitude;
use crate::cat::{
    effective_params, effective_summary, env_visibility_identical, fringe_marginal,
    fringe_visibility, MultimodeCat,
};
use crate::error::{Error, Result};
use crate::measurement::ensemble;
use crate::numerics::{GridSpec, RNG_ALGORITHM};
use crate::output::{fmt_float, write_csv, write_density_csv, RunMetadata};
use crate::verify::{report_exit_code, run_all_checks};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID_ARGS: i32 = 1;
pub const EXIT_IO: i32 = 2;
pub const EXIT_VERIFY_FAILED: i32 = 3;

/// Environment variable capping the rayon worker threads.
pub const THREADS_ENV_VAR: &str = "DECOCAT_THREADS";

const DEFAULT_Q_ENV_SWEEP: [f64; 6] = [1.0, 0.8, 0.6, 0.4, 0.2, 0.0];

#[derive(Debug, Parser)]
#[command(
    name = "decocat",
    version,
    about = "Coherence, visibility, and collapse of multimode Schrödinger-cat states"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Momentum fringe patterns for a sweep of environment overlaps.
    Fringes(FringesArgs),
    /// Visibility and Schmidt-number dynamics with a growing environment.
    Dynamics(DynamicsArgs),
    /// Sequential-measurement collapse trajectories.
    Collapse(CollapseArgs),
    /// Run the built-in verification suite.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
pub struct FringesArgs {
    /// System-mode amplitude (real, positive).
    #[arg(long, default_value_t = 3.4)]
    pub alpha: f64,
    /// Environment overlap in [0, 1]; repeat for a sweep. Defaults to
    /// 1.0, 0.8, 0.6, 0.4, 0.2, 0.0.
    #[arg(long = "q-env", value_name = "Q", allow_negative_numbers = true)]
    pub q_env: Vec<f64>,
    /// Lower edge of the momentum grid.
    #[arg(long, default_value_t = -6.0, allow_negative_numbers = true)]
    pub grid_min: f64,
    /// Upper edge of the momentum grid.
    #[arg(long, default_value_t = 6.0, allow_negative_numbers = true)]
    pub grid_max: f64,
    /// Number of grid points.
    #[arg(long, default_value_t = 2401)]
    pub points: usize,
    /// Output directory (one CSV per overlap plus fringes_summary.csv).
    #[arg(long, default_value = "fringes")]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct DynamicsArgs {
    /// Per-mode amplitude (identical modes).
    #[arg(long, default_value_t = 0.01)]
    pub alpha: f64,
    /// Total mode count; must satisfy n·α² >= 10.
    #[arg(long, default_value_t = 100_000)]
    pub n: usize,
    /// Environment mode counts run from 0 to m-max in steps of m-step.
    #[arg(long = "m-step", default_value_t = 100)]
    pub m_step: usize,
    /// Largest environment mode count; must stay below n.
    #[arg(long = "m-max", default_value_t = 20_000)]
    pub m_max: usize,
    /// Output CSV path.
    #[arg(long, default_value = "dynamics.csv")]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct CollapseArgs {
    /// Per-mode amplitude (identical modes).
    #[arg(long, default_value_t = 0.01)]
    pub alpha: f64,
    /// Number of environment modes measured per trajectory.
    #[arg(long = "m-max", default_value_t = 20_000)]
    pub m_max: usize,
    /// Record every m-step-th measurement (1 = every step).
    #[arg(long = "m-step", default_value_t = 1)]
    pub m_step: usize,
    /// Number of independent trajectories.
    #[arg(long, default_value_t = 15)]
    pub trajectories: usize,
    /// Base seed; trajectory i uses a stream seed derived from (seed, i).
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    /// Output CSV path (long format: trajectory_id, m, y, p_plus, health).
    #[arg(long, default_value = "collapse.csv")]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Output CSV path for the check table.
    #[arg(long, default_value = "verify.csv")]
    pub out: PathBuf,
}

/// Parses the process arguments, runs the selected command, and returns
/// the exit code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = e.print();
            return EXIT_OK;
        }
        Err(e) => {
            let _ = e.print();
            return EXIT_INVALID_ARGS;
        }
    };
    execute(&cli.command)
}

/// Runs one command and maps errors onto the exit-code contract.
pub fn execute(command: &Command) -> i32 {
    let outcome = match command {
        Command::Fringes(args) => cmd_fringes(args),
        Command::Dynamics(args) => cmd_dynamics(args),
        Command::Collapse(args) => cmd_collapse(args),
        Command::Verify(args) => return cmd_verify(args),
    };
    match outcome {
        Ok(()) => EXIT_OK,
        Err(Error::Io(e)) => {
            eprintln!("decocat: I/O error: {e}");
            EXIT_IO
        }
        Err(e) => {
            eprintln!("decocat: invalid arguments: {e}");
            EXIT_INVALID_ARGS
        }
    }
}

/// Thread pool honoring `DECOCAT_THREADS`; falls back to the rayon
/// default when the variable is unset or unparsable.
fn thread_pool() -> Result<rayon::ThreadPool> {
    let threads = std::env::var(THREADS_ENV_VAR)
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .unwrap_or(0);
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| Error::InvalidParameter(format!("thread pool: {e}")))
}

pub fn cmd_fringes(args: &FringesArgs) -> Result<()> {
    let grid = GridSpec::new(args.grid_min, args.grid_max, args.points)?;
    let sweep: Vec<f64> = if args.q_env.is_empty() {
        DEFAULT_Q_ENV_SWEEP.to_vec()
    } else {
        args.q_env.clone()
    };
    // Validate the whole sweep before any file is created.
    for &q in &sweep {
        if !(0.0..=1.0).contains(&q) {
            return Err(Error::InvalidParameter(format!(
                "environment overlap must lie in [0, 1], got {q}"
            )));
        }
    }
    if !(args.alpha > 0.0) {
        return Err(Error::InvalidParameter(format!(
            "alpha must be positive, got {}",
            args.alpha
        )));
    }

    std::fs::create_dir_all(&args.out)?;
    let mut summary_rows = Vec::with_capacity(sweep.len());
    for &q_env in &sweep {
        let density = fringe_marginal(args.alpha, q_env, &grid)?;
        let measured = fringe_visibility(&density, 1.0);
        let metadata = RunMetadata::from_env_args()
            .with("alpha", args.alpha)
            .with("q_env", q_env)
            .with("grid", format!("[{}, {}] x {}", grid.min(), grid.max(), grid.points()))
            .with("normalization_residual", density.normalization_residual());
        write_density_csv(
            args.out.join(format!("fringe_q{q_env:.6}.csv")),
            &metadata,
            &density,
        )?;
        summary_rows.push(vec![fmt_float(q_env), fmt_float(measured), fmt_float(q_env)]);
    }

    let metadata = RunMetadata::from_env_args()
        .with("alpha", args.alpha)
        .with("grid", format!("[{}, {}] x {}", grid.min(), grid.max(), grid.points()));
    write_csv(
        args.out.join("fringes_summary.csv"),
        &metadata,
        &["q_env", "visibility_measured", "visibility_analytic"],
        summary_rows,
    )?;
    Ok(())
}

pub fn cmd_dynamics(args: &DynamicsArgs) -> Result<()> {
    let photons = args.n as f64 * args.alpha * args.alpha;
    if !(photons >= 10.0) {
        return Err(Error::InvalidParameter(format!(
            "need n·α² >= 10 for the identical-mode limit, got {photons}"
        )));
    }
    if args.m_max >= args.n {
        return Err(Error::InvalidParameter(format!(
            "m-max {} must stay below the mode count {}",
            args.m_max, args.n
        )));
    }
    if args.m_step == 0 {
        return Err(Error::InvalidParameter("m-step must be positive".into()));
    }

    let base = MultimodeCat::identical(ComplexAmplitude::real(args.alpha), args.n, 0)?;
    let rows: Vec<Vec<String>> = (0..=args.m_max)
        .step_by(args.m_step)
        .map(|m| {
            let cat = base.repartitioned(m)?;
            let summary = effective_summary(&effective_params(&cat));
            Ok(vec![
                m.to_string(),
                fmt_float(m as f64 * args.alpha * args.alpha),
                fmt_float(env_visibility_identical(m, args.alpha)),
                fmt_float(summary.visibility),
                fmt_float(summary.schmidt_number),
            ])
        })
        .collect::<Result<_>>()?;

    let metadata = RunMetadata::from_env_args()
        .with("alpha", args.alpha)
        .with("n", args.n)
        .with("m_step", args.m_step)
        .with("m_max", args.m_max);
    write_csv(
        &args.out,
        &metadata,
        &["m", "photons_reduced", "V_closed_form", "V_schmidt", "K"],
        rows,
    )
}

pub fn cmd_collapse(args: &CollapseArgs) -> Result<()> {
    if args.trajectories == 0 {
        return Err(Error::InvalidParameter(
            "need at least one trajectory".into(),
        ));
    }
    if args.m_step == 0 {
        return Err(Error::InvalidParameter("m-step must be positive".into()));
    }
    let pool = thread_pool()?;
    let trajectories = pool.install(|| ensemble(args.alpha, args.m_max, args.trajectories, args.seed))?;

    let mut rows = Vec::new();
    for (id, trajectory) in trajectories.iter().enumerate() {
        // The m = 0 row is the pristine state; it has no measured value.
        rows.push(vec![
            id.to_string(),
            "0".into(),
            String::new(),
            fmt_float(trajectory.p_plus()[0]),
            fmt_float(trajectory.health()[0]),
        ]);
        for m in (args.m_step..=args.m_max).step_by(args.m_step) {
            rows.push(vec![
                id.to_string(),
                m.to_string(),
                fmt_float(trajectory.ys()[m - 1]),
                fmt_float(trajectory.p_plus()[m]),
                fmt_float(trajectory.health()[m]),
            ]);
        }
    }

    let metadata = RunMetadata::from_env_args()
        .with("alpha", args.alpha)
        .with("m_max", args.m_max)
        .with("m_step", args.m_step)
        .with("trajectories", args.trajectories)
        .with("seed", args.seed)
        .with("rng", RNG_ALGORITHM);
    write_csv(
        &args.out,
        &metadata,
        &["trajectory_id", "m", "y", "p_plus", "health"],
        rows,
    )
}

pub fn cmd_verify(args: &VerifyArgs) -> i32 {
    let checks = run_all_checks();
    println!("{:<32} {:>14} {:>12} {:>7}", "check", "measured", "threshold", "result");
    for check in &checks {
        println!(
            "{:<32} {:>14.3e} {:>12.1e} {:>7}",
            check.name,
            check.measured,
            check.threshold,
            if check.passed { "PASS" } else { "FAIL" }
        );
    }

    let metadata = RunMetadata::from_env_args();
    let rows = checks.iter().map(|c| {
        vec![
            c.name.to_string(),
            fmt_float(c.measured),
            fmt_float(c.threshold),
            if c.passed { "pass".into() } else { "fail".into() },
            c.detail.clone(),
        ]
    });
    if let Err(e) = write_csv(
        &args.out,
        &metadata,
        &["check", "measured", "threshold", "result", "detail"],
        rows,
    ) {
        eprintln!("decocat: I/O error: {e}");
        return EXIT_IO;
    }
    report_exit_code(&checks)
}
