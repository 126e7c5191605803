//! Command-line front door: analytic tables, Monte Carlo runs, and the
//! verification suite, emitted as CSV or JSON for plotting and CI.
//!
//! Conventions shared by every subcommand:
//!
//! * CSV is RFC-4180-style — header row, LF line endings, `.` decimal
//!   separator — with floats printed to 17 significant digits (`{:.16e}`),
//!   enough to round-trip the exact binary64 value.
//! * JSON output is UTF-8 with arrays of flat row objects; numbers are
//!   serialized so they parse back to the identical bits.
//! * Grids are written `start:stop:step`, inclusive of `start`, inclusive
//!   of `stop` when it lands on the grid within floating tolerance.
//! * The seed defaults to the `COVERTIME_SEED` environment variable and is
//!   overridden by `--seed`; without either it is 0. Every randomized
//!   command is fully determined by (seed, parameters).
//! * Exit codes: 0 success, 1 verification failure, 2 usage or domain
//!   error (with a one-line diagnostic on stderr).

mod verify;

pub use verify::{run_verification, CheckReport, VerifyReport};

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use crate::analytic::{
    cdf_theta_l, density_theta_l, laplace_theta, quantile_theta_l, switchback_pgf,
    switchback_rate, PgfQuery, RangeState, SeriesControl,
};
use crate::error::{Error, Result};
use crate::simulate::{
    estimate_transform, run_cover_time_batch, run_switchback_batch, CoverTimeSample, SimPlan,
};
use crate::stats::{chi_square_poisson, ks_test, GofReport, DEFAULT_SIGNIFICANCE};

/// Environment variable consulted for a default seed.
pub const SEED_ENV_VAR: &str = "COVERTIME_SEED";

/// Largest number of rows a grid may expand to.
const MAX_GRID_POINTS: usize = 10_000_000;

#[derive(Parser)]
#[command(
    name = "covertime",
    version,
    about = "Distribution of the Brownian cover time on a circle: analytic tables, Monte Carlo, verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Tabulate the cover-time density p_θL(t)
    Density(TimeTableArgs),
    /// Tabulate the cover-time CDF P(θ_L ≤ t)
    Cdf(TimeTableArgs),
    /// Tabulate the Laplace transform E[exp(−s·θ_L)]
    Laplace(LaplaceArgs),
    /// Tabulate quantiles t_p of θ_L
    Quantile(QuantileArgs),
    /// Sample cover times by discretized Monte Carlo and summarize
    Simulate(SimulateArgs),
    /// Sample exact switchback chains and test the Poisson law
    Switchbacks(SwitchbacksArgs),
    /// Run the verification suite and emit a JSON report
    Verify(VerifyArgs),
}

#[derive(Args)]
struct OutputArgs {
    /// Output format
    #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
    format: OutputFormat,
    /// Write to this file instead of stdout
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Csv,
    Json,
}

#[derive(Args)]
struct TimeTableArgs {
    /// Circle circumference L
    #[arg(long = "L", value_name = "LENGTH")]
    l: f64,
    /// Single evaluation time
    #[arg(long, value_name = "TIME", conflicts_with = "t_grid")]
    t: Option<f64>,
    /// Evaluation-time grid start:stop:step
    #[arg(long, value_name = "START:STOP:STEP")]
    t_grid: Option<String>,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct LaplaceArgs {
    /// Circle circumference L
    #[arg(long = "L", value_name = "LENGTH")]
    l: f64,
    /// Single Laplace argument
    #[arg(long, value_name = "S", conflicts_with = "s_grid")]
    s: Option<f64>,
    /// Laplace-argument grid start:stop:step
    #[arg(long, value_name = "START:STOP:STEP")]
    s_grid: Option<String>,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct QuantileArgs {
    /// Circle circumference L
    #[arg(long = "L", value_name = "LENGTH")]
    l: f64,
    /// Single probability level
    #[arg(long, value_name = "P", conflicts_with = "p_grid")]
    p: Option<f64>,
    /// Probability grid start:stop:step
    #[arg(long, value_name = "START:STOP:STEP")]
    p_grid: Option<String>,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct SimulateArgs {
    /// Circle circumference L
    #[arg(long = "L", value_name = "LENGTH")]
    l: f64,
    /// Number of cover-time samples
    #[arg(long, value_name = "COUNT")]
    n: u64,
    /// Walk time step
    #[arg(long, value_name = "DT")]
    dt: f64,
    /// Disable the Brownian-bridge within-step crossing correction
    #[arg(long)]
    no_bridge: bool,
    /// Seed (default: $COVERTIME_SEED, else 0)
    #[arg(long, value_name = "SEED")]
    seed: Option<u64>,
    /// Worker threads (affects speed only, never results)
    #[arg(long, value_name = "COUNT")]
    streams: Option<u64>,
    /// Suppress the per-sample table; emit only the summary
    #[arg(long)]
    summary_only: bool,
    /// Comma-separated s values for the empirical Laplace transform
    #[arg(long, value_name = "S,S,...", default_value = "0.5")]
    transform_s: String,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct SwitchbacksArgs {
    /// Starting range length a
    #[arg(long, value_name = "LENGTH")]
    a: f64,
    /// Circle circumference L
    #[arg(long = "L", value_name = "LENGTH")]
    l: f64,
    /// Number of chains
    #[arg(long, value_name = "COUNT")]
    n: u64,
    /// Seed (default: $COVERTIME_SEED, else 0)
    #[arg(long, value_name = "SEED")]
    seed: Option<u64>,
    /// Worker threads (affects speed only, never results)
    #[arg(long, value_name = "COUNT")]
    streams: Option<u64>,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct VerifyArgs {
    /// Also run the statistical suites (Monte Carlo; takes minutes)
    #[arg(long)]
    full: bool,
    /// Seed for the statistical suites (default: $COVERTIME_SEED, else 0)
    #[arg(long, value_name = "SEED")]
    seed: Option<u64>,
}

/// Parse the process arguments, execute, and translate errors into exit
/// codes. This is the whole body of the binary.
pub fn run() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        // `exit` prints help/version to stdout with code 0 and usage errors
        // to stderr with code 2.
        Err(e) => e.exit(),
    };
    match dispatch(cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

fn dispatch(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Density(args) => {
            let ctl = SeriesControl::default();
            let table = evaluate_table(grid_of(args.t, &args.t_grid, "--t/--t-grid")?, |t| {
                Ok(density_theta_l(t, args.l, &ctl)?.value)
            })?;
            emit_table(&args.output, ("t", "p_theta_L"), &table)?;
            Ok(0)
        }
        Command::Cdf(args) => {
            let ctl = SeriesControl::default();
            let table = evaluate_table(grid_of(args.t, &args.t_grid, "--t/--t-grid")?, |t| {
                cdf_theta_l(t, args.l, &ctl)
            })?;
            emit_table(&args.output, ("t", "F_theta_L"), &table)?;
            Ok(0)
        }
        Command::Laplace(args) => {
            let table = evaluate_table(grid_of(args.s, &args.s_grid, "--s/--s-grid")?, |s| {
                laplace_theta(s, args.l)
            })?;
            emit_table(&args.output, ("s", "laplace_theta_L"), &table)?;
            Ok(0)
        }
        Command::Quantile(args) => {
            let ctl = SeriesControl::default();
            let table = evaluate_table(grid_of(args.p, &args.p_grid, "--p/--p-grid")?, |p| {
                quantile_theta_l(p, args.l, &ctl)
            })?;
            emit_table(&args.output, ("p", "t_p"), &table)?;
            Ok(0)
        }
        Command::Simulate(args) => cmd_simulate(args),
        Command::Switchbacks(args) => cmd_switchbacks(args),
        Command::Verify(args) => {
            let report = run_verification(args.full, resolve_seed(args.seed)?);
            let mut stdout = std::io::stdout().lock();
            serde_json::to_writer_pretty(&mut stdout, &report)
                .and_then(|()| {
                    use std::io::Write as _;
                    writeln!(stdout).map_err(serde_json::Error::io)
                })
                .map_err(|e| Error::accuracy(format!("could not emit the report: {e}")))?;
            Ok(if report.all_pass { 0 } else { 1 })
        }
    }
}

/// `--seed` wins; otherwise `COVERTIME_SEED`; otherwise 0.
fn resolve_seed(flag: Option<u64>) -> Result<u64> {
    if let Some(seed) = flag {
        return Ok(seed);
    }
    match std::env::var(SEED_ENV_VAR) {
        Ok(text) => text.trim().parse::<u64>().map_err(|_| {
            Error::domain(format!(
                "{SEED_ENV_VAR} must be an unsigned 64-bit integer, got {text:?}"
            ))
        }),
        Err(_) => Ok(0),
    }
}

fn resolve_streams(flag: Option<u64>) -> u64 {
    flag.unwrap_or_else(|| {
        std::thread::available_parallelism()
            .map(|n| n.get() as u64)
            .unwrap_or(1)
    })
}

/// Expand `start:stop:step` into the inclusive grid it denotes.
fn parse_grid(spec: &str) -> Result<Vec<f64>> {
    let parts: Vec<&str> = spec.split(':').collect();
    let [start, stop, step] = parts[..] else {
        return Err(Error::domain(format!(
            "grid must be written start:stop:step, got {spec:?}"
        )));
    };
    let parse = |text: &str, what: &str| -> Result<f64> {
        text.trim()
            .parse::<f64>()
            .map_err(|_| Error::domain(format!("grid {what} {text:?} is not a number")))
    };
    let start = parse(start, "start")?;
    let stop = parse(stop, "stop")?;
    let step = parse(step, "step")?;
    if !(start.is_finite() && stop.is_finite() && step.is_finite()) {
        return Err(Error::domain(format!("grid {spec:?} must be finite")));
    }
    if step <= 0.0 {
        return Err(Error::domain(format!(
            "grid step must be positive, got {step}"
        )));
    }
    if stop < start {
        return Err(Error::domain(format!(
            "grid stop {stop} lies before start {start}"
        )));
    }
    // Number of steps that fit, with a tolerance so `0.1:5:0.1` includes
    // t = 5 even though 4.9/0.1 rounds just below 49.
    let count = ((stop - start) / step + 1e-9).floor() as usize + 1;
    if count > MAX_GRID_POINTS {
        return Err(Error::domain(format!(
            "grid {spec:?} expands to {count} points (limit {MAX_GRID_POINTS})"
        )));
    }
    Ok((0..count).map(|i| start + i as f64 * step).collect())
}

fn grid_of(single: Option<f64>, grid: &Option<String>, what: &str) -> Result<Vec<f64>> {
    match (single, grid) {
        (Some(v), None) => {
            if !v.is_finite() {
                return Err(Error::domain(format!("{what}: value must be finite")));
            }
            Ok(vec![v])
        }
        (None, Some(spec)) => parse_grid(spec),
        (None, None) => Err(Error::domain(format!("one of {what} is required"))),
        (Some(_), Some(_)) => unreachable!("clap conflicts_with forbids both"),
    }
}

fn evaluate_table<F: Fn(f64) -> Result<f64>>(xs: Vec<f64>, f: F) -> Result<Vec<(f64, f64)>> {
    xs.into_iter().map(|x| Ok((x, f(x)?))).collect()
}

/// 17 significant digits: always round-trips to the same binary64.
fn fmt17(v: f64) -> String {
    format!("{v:.16e}")
}

fn sink(out: &Option<PathBuf>) -> Result<Box<dyn Write>> {
    match out {
        Some(path) => {
            let file = std::fs::File::create(path).map_err(|e| {
                Error::domain(format!("could not create {}: {e}", path.display()))
            })?;
            Ok(Box::new(std::io::BufWriter::new(file)))
        }
        None => Ok(Box::new(std::io::BufWriter::new(std::io::stdout()))),
    }
}

fn write_failed(e: std::io::Error) -> Error {
    Error::domain(format!("could not write output: {e}"))
}

fn emit_table(output: &OutputArgs, headers: (&str, &str), rows: &[(f64, f64)]) -> Result<()> {
    let mut w = sink(&output.out)?;
    match output.format {
        OutputFormat::Csv => {
            writeln!(w, "{},{}", headers.0, headers.1).map_err(write_failed)?;
            for &(x, y) in rows {
                writeln!(w, "{},{}", fmt17(x), fmt17(y)).map_err(write_failed)?;
            }
        }
        OutputFormat::Json => {
            let array: Vec<Value> = rows
                .iter()
                .map(|&(x, y)| {
                    let mut obj = Map::new();
                    obj.insert(headers.0.to_owned(), json!(x));
                    obj.insert(headers.1.to_owned(), json!(y));
                    Value::Object(obj)
                })
                .collect();
            serde_json::to_writer_pretty(&mut w, &array)
                .map_err(|e| Error::accuracy(format!("JSON serialization failed: {e}")))?;
            writeln!(w).map_err(write_failed)?;
        }
    }
    w.flush().map_err(write_failed)
}

#[derive(serde::Serialize)]
struct TransformEstimate {
    s: f64,
    estimate: f64,
    std_error: f64,
}

#[derive(serde::Serialize)]
struct SimulateSummary {
    n: u64,
    mean: f64,
    variance: f64,
    transform: Vec<TransformEstimate>,
    ks: GofReport,
}

fn parse_s_list(text: &str) -> Result<Vec<f64>> {
    let values: Vec<f64> = text
        .split(',')
        .map(|part| {
            part.trim()
                .parse::<f64>()
                .map_err(|_| Error::domain(format!("--transform-s entry {part:?} is not a number")))
        })
        .collect::<Result<_>>()?;
    if values.is_empty() {
        return Err(Error::domain("--transform-s must name at least one value"));
    }
    Ok(values)
}

fn cmd_simulate(args: SimulateArgs) -> Result<u8> {
    let plan = SimPlan {
        n_samples: args.n,
        dt: args.dt,
        bridge_correction: !args.no_bridge,
        base_seed: resolve_seed(args.seed)?,
        n_streams: resolve_streams(args.streams),
    };
    let s_values = parse_s_list(&args.transform_s)?;
    let samples = run_cover_time_batch(&plan, args.l)?;
    let summary = summarize_samples(&samples, args.l, &s_values)?;

    let mut w = sink(&args.output.out)?;
    match args.output.format {
        OutputFormat::Csv => {
            if !args.summary_only {
                writeln!(w, "theta,n_steps,final_min,final_max").map_err(write_failed)?;
                for c in &samples {
                    writeln!(
                        w,
                        "{},{},{},{}",
                        fmt17(c.theta),
                        c.n_steps,
                        fmt17(c.final_min),
                        fmt17(c.final_max)
                    )
                    .map_err(write_failed)?;
                }
                writeln!(w).map_err(write_failed)?;
            }
            writeln!(w, "metric,value").map_err(write_failed)?;
            writeln!(w, "n,{}", summary.n).map_err(write_failed)?;
            writeln!(w, "mean,{}", fmt17(summary.mean)).map_err(write_failed)?;
            writeln!(w, "variance,{}", fmt17(summary.variance)).map_err(write_failed)?;
            for t in &summary.transform {
                writeln!(w, "transform_estimate(s={}),{}", fmt17(t.s), fmt17(t.estimate))
                    .map_err(write_failed)?;
                writeln!(
                    w,
                    "transform_std_error(s={}),{}",
                    fmt17(t.s),
                    fmt17(t.std_error)
                )
                .map_err(write_failed)?;
            }
            writeln!(w, "ks_statistic,{}", fmt17(summary.ks.statistic)).map_err(write_failed)?;
            if let Some(p) = summary.ks.p_value {
                writeln!(w, "ks_p_value,{}", fmt17(p)).map_err(write_failed)?;
            }
            writeln!(w, "ks_pass,{}", summary.ks.pass).map_err(write_failed)?;
        }
        OutputFormat::Json => {
            let body = if args.summary_only {
                json!({ "summary": summary })
            } else {
                json!({ "samples": samples, "summary": summary })
            };
            serde_json::to_writer_pretty(&mut w, &body)
                .map_err(|e| Error::accuracy(format!("JSON serialization failed: {e}")))?;
            writeln!(w).map_err(write_failed)?;
        }
    }
    w.flush().map_err(write_failed)?;
    Ok(0)
}

fn summarize_samples(
    samples: &[CoverTimeSample],
    l: f64,
    s_values: &[f64],
) -> Result<SimulateSummary> {
    let n = samples.len();
    let mean = samples.iter().map(|c| c.theta).sum::<f64>() / n as f64;
    let variance = if n > 1 {
        samples
            .iter()
            .map(|c| (c.theta - mean) * (c.theta - mean))
            .sum::<f64>()
            / (n - 1) as f64
    } else {
        0.0
    };
    let transform = s_values
        .iter()
        .map(|&s| {
            let (estimate, std_error) = estimate_transform(samples, s)?;
            Ok(TransformEstimate {
                s,
                estimate,
                std_error,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    // KS via the probability-integral transform: map each θ through the
    // analytic CDF and test against uniformity. This is the same statistic
    // as testing θ against the CDF directly (monotone invariance), and it
    // lets CDF evaluation errors surface as errors instead of panics.
    let ctl = SeriesControl::default();
    let mut pit: Vec<f64> = samples
        .iter()
        .map(|c| cdf_theta_l(c.theta, l, &ctl))
        .collect::<Result<_>>()?;
    pit.sort_by(|a, b| a.partial_cmp(b).expect("CDF values are never NaN"));
    let ks = ks_test(&pit, |u| u.clamp(0.0, 1.0), DEFAULT_SIGNIFICANCE)?;
    Ok(SimulateSummary {
        n: n as u64,
        mean,
        variance,
        transform,
        ks,
    })
}

#[derive(serde::Serialize)]
struct PgfComparison {
    t: f64,
    empirical: f64,
    std_error: f64,
    analytic: f64,
}

#[derive(serde::Serialize)]
struct SwitchbacksReport {
    lambda: f64,
    histogram: Vec<HistogramCell>,
    chi_square: GofReport,
    pgf: Vec<PgfComparison>,
}

#[derive(serde::Serialize)]
struct HistogramCell {
    nu: u64,
    count: u64,
}

fn cmd_switchbacks(args: SwitchbacksArgs) -> Result<u8> {
    let r = RangeState::new(args.a, args.l)?;
    let plan = SimPlan {
        n_samples: args.n,
        dt: 1.0, // unused by the exact chain sampler
        bridge_correction: false,
        base_seed: resolve_seed(args.seed)?,
        n_streams: resolve_streams(args.streams),
    };
    let chains = run_switchback_batch(&plan, &r)?;

    let mut counts: Vec<u64> = Vec::new();
    for c in &chains {
        let k = c.nu as usize;
        if k >= counts.len() {
            counts.resize(k + 1, 0);
        }
        counts[k] += 1;
    }
    let lambda = switchback_rate(r);
    let chi_square = chi_square_poisson(&counts, lambda, DEFAULT_SIGNIFICANCE)?;
    let n = chains.len() as f64;
    let pgf = [0.25f64, 0.5, 0.75]
        .iter()
        .map(|&t| {
            let values: Vec<f64> = chains.iter().map(|c| t.powi(c.nu as i32)).collect();
            let empirical = values.iter().sum::<f64>() / n;
            let ss = values
                .iter()
                .map(|v| (v - empirical) * (v - empirical))
                .sum::<f64>();
            let std_error = if chains.len() > 1 {
                (ss / (n - 1.0) / n).sqrt()
            } else {
                0.0
            };
            Ok(PgfComparison {
                t,
                empirical,
                std_error,
                analytic: switchback_pgf(PgfQuery::new(t, r)?),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let report = SwitchbacksReport {
        lambda,
        histogram: counts
            .iter()
            .enumerate()
            .map(|(k, &c)| HistogramCell {
                nu: k as u64,
                count: c,
            })
            .collect(),
        chi_square,
        pgf,
    };

    let mut w = sink(&args.output.out)?;
    match args.output.format {
        OutputFormat::Csv => {
            writeln!(w, "nu,count").map_err(write_failed)?;
            for cell in &report.histogram {
                writeln!(w, "{},{}", cell.nu, cell.count).map_err(write_failed)?;
            }
            writeln!(w).map_err(write_failed)?;
            writeln!(w, "metric,value").map_err(write_failed)?;
            writeln!(w, "lambda,{}", fmt17(report.lambda)).map_err(write_failed)?;
            writeln!(w, "chi_square_statistic,{}", fmt17(report.chi_square.statistic))
                .map_err(write_failed)?;
            if let Some(p) = report.chi_square.p_value {
                writeln!(w, "chi_square_p_value,{}", fmt17(p)).map_err(write_failed)?;
            }
            writeln!(w, "chi_square_pass,{}", report.chi_square.pass).map_err(write_failed)?;
            for c in &report.pgf {
                writeln!(w, "pgf_empirical(t={}),{}", fmt17(c.t), fmt17(c.empirical))
                    .map_err(write_failed)?;
                writeln!(w, "pgf_std_error(t={}),{}", fmt17(c.t), fmt17(c.std_error))
                    .map_err(write_failed)?;
                writeln!(w, "pgf_analytic(t={}),{}", fmt17(c.t), fmt17(c.analytic))
                    .map_err(write_failed)?;
            }
        }
        OutputFormat::Json => {
            serde_json::to_writer_pretty(&mut w, &report)
                .map_err(|e| Error::accuracy(format!("JSON serialization failed: {e}")))?;
            writeln!(w).map_err(write_failed)?;
        }
    }
    w.flush().map_err(write_failed)?;
    Ok(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grids_expand_inclusively_with_floating_tolerance() {
        let g = parse_grid("0.1:5:0.1").unwrap();
        assert_eq!(g.len(), 50);
        assert_eq!(g[0], 0.1);
        assert!((g[49] - 5.0).abs() < 1e-12);
        assert!(g.windows(2).all(|w| w[1] > w[0]));

        assert_eq!(parse_grid("1:1:0.5").unwrap(), vec![1.0]);
        assert_eq!(parse_grid("0:1:0.25").unwrap().len(), 5);
        // Stop just short of a grid point stays exclusive.
        assert_eq!(parse_grid("0:0.99:0.25").unwrap().len(), 4);
    }

    #[test]
    fn malformed_grids_are_rejected() {
        for bad in [
            "1:2", "1:2:3:4", "a:2:1", "1:b:1", "1:2:zz", "2:1:0.5", "1:2:0", "1:2:-0.1",
            "nan:2:1", "1:inf:1",
        ] {
            assert!(parse_grid(bad).is_err(), "{bad:?} should be rejected");
        }
        // Oversized expansion.
        assert!(parse_grid("0:1e9:1e-4").is_err());
    }

    #[test]
    fn seventeen_digit_floats_round_trip_exactly() {
        for v in [
            0.1,
            1.0 / 3.0,
            0.4359530636736674,
            1.3347632085838478,
            6.66e-300,
            1.7976931348623157e308,
        ] {
            let parsed: f64 = fmt17(v).parse().unwrap();
            assert_eq!(parsed.to_bits(), v.to_bits(), "{v} -> {}", fmt17(v));
        }
    }

    #[test]
    fn transform_s_lists_parse_and_validate() {
        assert_eq!(parse_s_list("0.5").unwrap(), vec![0.5]);
        assert_eq!(parse_s_list("0.25, 1, 4").unwrap(), vec![0.25, 1.0, 4.0]);
        assert!(parse_s_list("0.5,,1").is_err());
        assert!(parse_s_list("abc").is_err());
    }

    #[test]
    fn command_line_shape_is_stable() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
