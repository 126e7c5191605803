//! The diffusive scaling law theta_L ~ L^2 theta_1, demonstrated two ways:
//! bit-for-bit on a shared seed, and in distribution on independent seeds.
//!
//! Run with: cargo run --release --example scaling_law

use covertime::simulate::{run_cover_time_batch, SimPlan};
use covertime::stats::{ks_two_sample, DEFAULT_SIGNIFICANCE};

fn main() -> covertime::Result<()> {
    // Doubling L while quadrupling dt maps the discretized path onto
    // itself: every floating-point operation scales by an exact power of
    // two, so with the same seed the samples agree bit for bit.
    let unit = SimPlan {
        n_samples: 8,
        dt: 1e-3,
        bridge_correction: true,
        base_seed: 42,
        n_streams: 1,
    };
    let doubled = SimPlan { dt: 4e-3, ..unit.clone() };
    println!("Same seed, L = 1 vs L = 2 with dt quadrupled:");
    println!("{:>22} {:>22} {:>10}", "4 * theta(L=1)", "theta(L=2)", "bitwise");
    let base = run_cover_time_batch(&unit, 1.0)?;
    let scaled = run_cover_time_batch(&doubled, 2.0)?;
    for (a, b) in base.iter().zip(&scaled) {
        let four_a = 4.0 * a.theta;
        println!(
            "{four_a:>22.16} {:>22.16} {:>10}",
            b.theta,
            four_a.to_bits() == b.theta.to_bits()
        );
    }

    // With *independent* seeds the identity is distributional, not
    // samplewise: rescaled L = 2 cover times and L = 1 cover times pass a
    // two-sample KS test.
    let n = 10_000;
    let threads = std::thread::available_parallelism().map(|v| v.get() as u64).unwrap_or(1);
    let plan_unit = SimPlan {
        n_samples: n,
        dt: 1e-4,
        bridge_correction: true,
        base_seed: 0,
        n_streams: threads,
    };
    let plan_doubled = SimPlan { dt: 4e-4, base_seed: 1, ..plan_unit.clone() };
    println!("\nIndependent seeds, {n} samples each...");
    let mut xs: Vec<f64> = run_cover_time_batch(&plan_unit, 1.0)?
        .iter()
        .map(|c| c.theta)
        .collect();
    let mut ys: Vec<f64> = run_cover_time_batch(&plan_doubled, 2.0)?
        .iter()
        .map(|c| c.theta / 4.0)
        .collect();
    xs.sort_by(|a, b| a.partial_cmp(b).unwrap());
    ys.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let ks = ks_two_sample(&xs, &ys, DEFAULT_SIGNIFICANCE)?;
    println!(
        "two-sample KS on theta(L=1) vs theta(L=2)/4: D = {:.5}, p = {:.4}, pass = {}",
        ks.statistic,
        ks.p_value.unwrap_or(f64::NAN),
        ks.pass
    );
    Ok(())
}
