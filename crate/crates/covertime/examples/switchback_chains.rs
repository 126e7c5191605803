//! Exact switchback chains and the Poisson(ln(L/a)) law of the
//! switchback count.
//!
//! A switchback happens when the walk extends its range on the far side
//! before the range reaches L. Each chain draws range extensions
//! M = a·U/(1−U) (inverse of P(M ≤ y) = y/(a+y)) until one would finish
//! the covering; the number of completed extensions is ν.
//!
//! Run with: cargo run --example switchback_chains

use covertime::analytic::{switchback_pgf, switchback_pmf, switchback_rate, PgfQuery, RangeState};
use covertime::simulate::{run_switchback_batch, sample_switchbacks, SimPlan};
use covertime::stats::{chi_square_poisson, DEFAULT_SIGNIFICANCE};

fn main() -> covertime::Result<()> {
    let r = RangeState::new(0.1, 1.0)?;
    let lambda = switchback_rate(r);
    println!("a = {}, L = {}: switchback rate lambda = ln(L/a) = {lambda:.6}", r.a, r.l);

    // One chain, spelled out.
    let plan = SimPlan {
        n_samples: 100_000,
        dt: 1.0, // unused by the exact chain sampler
        bridge_correction: false,
        base_seed: 0,
        n_streams: std::thread::available_parallelism().map(|n| n.get() as u64).unwrap_or(1),
    };
    let one = sample_switchbacks(&plan, &r, 3)?;
    println!("\nA single chain (stream 3): nu = {}, range trajectory:", one.nu);
    for (i, a) in one.a_trajectory.iter().enumerate() {
        println!("  a_{i} = {a:.6}");
    }

    // A large batch: histogram vs the Poisson pmf, chi-square judged.
    println!("\nSampling {} chains...", plan.n_samples);
    let chains = run_switchback_batch(&plan, &r)?;
    let mut counts: Vec<u64> = Vec::new();
    for c in &chains {
        let k = c.nu as usize;
        if k >= counts.len() {
            counts.resize(k + 1, 0);
        }
        counts[k] += 1;
    }
    let n = chains.len() as f64;
    println!("{:>4} {:>10} {:>12} {:>12}", "nu", "count", "empirical", "poisson");
    for (k, &c) in counts.iter().enumerate() {
        println!(
            "{k:>4} {c:>10} {:>12.6} {:>12.6}",
            c as f64 / n,
            switchback_pmf(k as u64, r)
        );
    }
    let gof = chi_square_poisson(&counts, lambda, DEFAULT_SIGNIFICANCE)?;
    println!(
        "chi-square: statistic = {:.3}, p = {:.4}, pass = {}",
        gof.statistic,
        gof.p_value.unwrap_or(f64::NAN),
        gof.pass
    );

    // The generating function E[t^nu] = (a/L)^(1-t); its value at t = 0 is
    // the no-switchback probability a/L itself.
    println!("\nGenerating function E[t^nu], empirical vs exact:");
    println!("{:>6} {:>12} {:>12}", "t", "empirical", "exact");
    for t in [0.0f64, 0.25, 0.5, 0.75, 1.0] {
        let empirical = chains.iter().map(|c| t.powi(c.nu as i32)).sum::<f64>() / n;
        let exact = switchback_pgf(PgfQuery::new(t, r)?);
        println!("{t:>6.2} {empirical:>12.6} {exact:>12.6}");
    }
    Ok(())
}
