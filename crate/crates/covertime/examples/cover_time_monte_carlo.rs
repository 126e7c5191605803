//! Monte Carlo cover times versus the analytic law: moments, Laplace
//! transform, and a Kolmogorov–Smirnov test of the whole distribution.
//!
//! Run with: cargo run --release --example cover_time_monte_carlo

use covertime::analytic::{cdf_theta_l, laplace_theta, moments_theta_l, SeriesControl};
use covertime::simulate::{estimate_transform, run_cover_time_batch, SimPlan};
use covertime::stats::{ks_test, moment_report, DEFAULT_SIGNIFICANCE};

fn main() -> covertime::Result<()> {
    let l = 1.0;
    let plan = SimPlan {
        n_samples: 20_000,
        dt: 1e-4,
        bridge_correction: true,
        base_seed: 0,
        n_streams: std::thread::available_parallelism().map(|n| n.get() as u64).unwrap_or(1),
    };
    println!(
        "Sampling {} cover times at L = {l}, dt = {} (bridge-corrected)...",
        plan.n_samples, plan.dt
    );
    let samples = run_cover_time_batch(&plan, l)?;
    let thetas: Vec<f64> = samples.iter().map(|c| c.theta).collect();

    // Moments against the exact mean L^2/2 and variance L^4/12.
    let (mean, variance) = moments_theta_l(l)?;
    let moments = moment_report(&thetas, mean, variance)?;
    println!(
        "\nMoment check vs (mean {mean}, variance {variance:.6}): max |z| = {:.2}, pass = {}",
        moments.statistic, moments.pass
    );

    // Empirical Laplace transform against the closed form.
    println!("\nLaplace transform, empirical vs exact:");
    println!("{:>6} {:>14} {:>12} {:>14} {:>8}", "s", "estimate", "SE", "exact", "z");
    for s in [0.25, 0.5, 1.0, 2.0] {
        let (estimate, se) = estimate_transform(&samples, s)?;
        let exact = laplace_theta(s, l)?;
        println!(
            "{s:>6.2} {estimate:>14.8} {se:>12.2e} {exact:>14.8} {:>8.2}",
            (estimate - exact) / se
        );
    }

    // Distribution-level check: map each theta through the analytic CDF
    // and KS-test the result against uniformity.
    let ctl = SeriesControl::default();
    let mut pit: Vec<f64> = thetas
        .iter()
        .map(|&t| cdf_theta_l(t, l, &ctl))
        .collect::<covertime::Result<_>>()?;
    pit.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let ks = ks_test(&pit, |u| u.clamp(0.0, 1.0), DEFAULT_SIGNIFICANCE)?;
    println!(
        "\nKS against the analytic CDF: D = {:.5}, p = {:.4}, pass = {}",
        ks.statistic,
        ks.p_value.unwrap_or(f64::NAN),
        ks.pass
    );
    Ok(())
}
