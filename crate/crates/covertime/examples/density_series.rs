//! The cover-time density, CDF, and quantiles from their alternating
//! series, plus the exact moments.
//!
//! Run with: cargo run --example density_series

use covertime::analytic::{
    cdf_theta_l, density_theta1, moments_theta1, quantile_theta1, SeriesControl,
};

fn main() -> covertime::Result<()> {
    let ctl = SeriesControl::default();

    // p_theta1 rises steeply out of an essential singularity at t = 0
    // (every term carries exp(-(n+1)^2 / (2t))) and decays exponentially.
    println!("Density and CDF of theta_1:");
    println!("{:>6} {:>22} {:>22}", "t", "density", "cdf");
    for t in [0.05, 0.1, 0.2, 0.35, 0.5, 0.75, 1.0, 1.5, 2.0, 3.0, 5.0] {
        let point = density_theta1(t, &ctl)?;
        let cdf = cdf_theta_l(t, 1.0, &ctl)?;
        println!("{t:>6.2} {:>22.15e} {cdf:>22.16}", point.value);
    }

    // Quantiles by monotone root-finding on the CDF.
    println!("\nQuantiles t_p of theta_1:");
    println!("{:>8} {:>22} {:>22}", "p", "t_p", "cdf(t_p)");
    for p in [0.01, 0.1, 0.25, 0.5, 0.75, 0.9, 0.99, 0.999] {
        let t = quantile_theta1(p, &ctl)?;
        println!("{p:>8.3} {t:>22.16} {:>22.16}", cdf_theta_l(t, 1.0, &ctl)?);
    }

    // Mean and variance come from expanding the transform at s = 0:
    // E = 1/2, Var = 1/12 for L = 1.
    let (mean, variance) = moments_theta1();
    println!("\nMoments of theta_1: mean = {mean}, variance = {variance}");
    println!("(theta_L scales as L^2 theta_1, so mean L^2/2 and variance L^4/12.)");
    Ok(())
}
