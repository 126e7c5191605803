//! Driving the library the way the CLI does: building a table over a grid
//! and emitting it as CSV and JSON with full round-trip precision.
//!
//! The same tables are available from the shipped binary, e.g.
//!   covertime density --L 1 --t-grid 0.1:5:0.1
//!   covertime cdf --L 2 --t 4 --format json
//!
//! Run with: cargo run --example grids_and_output

use covertime::analytic::{density_theta_l, SeriesControl};

fn main() -> covertime::Result<()> {
    let ctl = SeriesControl::default();
    let l = 1.0;
    let ts: Vec<f64> = (1..=10).map(|i| 0.1 * i as f64).collect();

    // CSV: 17 significant digits ({:.16e}) so every value parses back to
    // the identical binary64.
    println!("t,p_theta_L");
    for &t in &ts {
        println!("{t:.16e},{:.16e}", density_theta_l(t, l, &ctl)?.value);
    }

    // JSON: an array of flat row objects with the same keys.
    let rows: Vec<serde_json::Value> = ts
        .iter()
        .map(|&t| {
            Ok(serde_json::json!({
                "t": t,
                "p_theta_L": density_theta_l(t, l, &ctl)?.value,
            }))
        })
        .collect::<covertime::Result<_>>()?;
    println!("\n{}", serde_json::to_string_pretty(&rows).expect("plain numbers serialize"));
    Ok(())
}
