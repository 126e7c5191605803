//! Numerically inverting the closed-form Laplace transform and comparing
//! against the series density — a cross-check that exercises completely
//! different code paths.
//!
//! Run with: cargo run --example laplace_inversion

use covertime::analytic::{
    density_theta1, invert_laplace_dd, laplace_theta_dd, stehfest_weights, SeriesControl,
    DEFAULT_INVERSION_ORDER,
};
use covertime::dd::Dd;

fn main() -> covertime::Result<()> {
    // The inversion weights are exact rationals evaluated in double-double
    // arithmetic. Two identities must hold exactly: the weights sum to 0
    // (the method annihilates constants' non-1/s parts) and the
    // harmonic-weighted sum is 1 (it reproduces the transform 1/s of the
    // constant function 1).
    println!("Inversion-weight identities:");
    println!("{:>6} {:>14} {:>14}", "order", "|sum|", "|harm - 1|");
    for order in [8usize, 10, 12, 14, 16] {
        let weights = stehfest_weights(order)?;
        let mut sum = Dd::ZERO;
        let mut harmonic = Dd::ZERO;
        for (i, w) in weights.iter().enumerate() {
            sum = sum.add(*w);
            harmonic = harmonic.add(w.div(Dd::from_f64((i + 1) as f64)));
        }
        println!(
            "{order:>6} {:>14.3e} {:>14.3e}",
            sum.to_f64().abs(),
            harmonic.add(Dd::from_f64(-1.0)).to_f64().abs()
        );
    }

    // Inverting E[exp(-s theta_1)] recovers the density. The fixed-order
    // real-axis method carries an intrinsic approximation error — about
    // 1e-4..1e-3 relative near the mode even in exact arithmetic — so the
    // two columns agree to roughly three digits, not machine precision,
    // and the tail (t >= 2) is accurate only absolutely.
    let ctl = SeriesControl::default();
    println!("\nInversion (order {DEFAULT_INVERSION_ORDER}) vs series density:");
    println!(
        "{:>6} {:>22} {:>22} {:>12}",
        "t", "inverted", "series", "abs err"
    );
    for t in [0.3, 0.5, 0.7, 1.0, 2.0, 5.0] {
        let inverted = invert_laplace_dd(|s| laplace_theta_dd(s, 1.0), t, DEFAULT_INVERSION_ORDER)?;
        let series = density_theta1(t, &ctl)?.value;
        println!(
            "{t:>6.2} {inverted:>22.15e} {:>22.15e} {:>12.3e}",
            series,
            (inverted - series).abs()
        );
    }
    Ok(())
}
