//! The closed-form Laplace transform of the cover time and the identities
//! that pin it down.
//!
//! Run with: cargo run --example transform_identities

use covertime::analytic::{
    conditional_laplace, integral_equation_residual, laplace_theta, transform_f, transform_g,
    RangeState,
};

fn main() -> covertime::Result<()> {
    // E[exp(−s·θ_L)] = 1/cosh²(L√(s/2)): exactly 1 at s = 0, decaying in s.
    println!("Laplace transform of theta_1:");
    println!("{:>8} {:>22}", "s", "E[exp(-s theta)]");
    for s in [0.0, 0.1, 0.5, 1.0, 2.0, 5.0, 10.0] {
        println!("{s:>8.2} {:>22.16}", laplace_theta(s, 1.0)?);
    }

    // Conditioned on the range already spanning a of L, the remaining-time
    // transform interpolates between the unconditional transform (a -> 0)
    // and 1 (a = L, nothing left to cover).
    println!("\nRange-conditional transform at s = 1, L = 1:");
    println!("{:>8} {:>22}", "a", "E[exp(-s theta) | a]");
    for a in [1e-6, 0.25, 0.5, 0.75, 1.0] {
        let value = conditional_laplace(1.0, RangeState::new(a, 1.0)?)?;
        println!("{a:>8.2} {value:>22.16}");
    }
    println!("  a -> 0 recovers the unconditional value {:.16}", laplace_theta(1.0, 1.0)?);

    // The splitting functions F and G (hit +y before −a, and the reverse)
    // satisfy two stopped-martingale normalizations simultaneously; this
    // fixes their relative sign and scale. c = sqrt(2 s).
    let (s, a, y) = (0.8f64, 0.6, 0.9);
    let c = (2.0 * s).sqrt();
    let f = transform_f(s, a, y)?;
    let g = transform_g(s, a, y)?;
    println!("\nFirst-passage splitting at s = {s}, a = {a}, y = {y}:");
    println!("  F = {f:.16}");
    println!("  G = {g:.16}");
    println!(
        "  exp(-ca) F + exp(+cy) G = {:.16}  (should be 1)",
        (-c * a).exp() * f + (c * y).exp() * g
    );
    println!(
        "  exp(+ca) F + exp(-cy) G = {:.16}  (should be 1)",
        (c * a).exp() * f + (-c * y).exp() * g
    );

    // The conditional transform solves a renewal integral equation over the
    // first switchback; the residual is numerically zero across states.
    println!("\nRenewal integral-equation residual:");
    println!("{:>8} {:>8} {:>8} {:>14}", "s", "a", "L", "|residual|");
    for (s, a, l) in [(0.5, 0.3, 1.0), (1.0, 0.5, 1.0), (2.0, 1.2, 2.0), (7.0, 0.1, 1.0)] {
        let r = integral_equation_residual(s, RangeState::new(a, l)?, 1e-12)?;
        println!("{s:>8.2} {a:>8.2} {l:>8.2} {:>14.3e}", r.abs());
    }
    Ok(())
}
