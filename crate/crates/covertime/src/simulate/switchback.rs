//! Exact sampler for the switchback chain.
//!
//! A switchback occurs when the walk extends its range on the *far* side
//! (hits the end at distance `a`) before the range reaches length L; the
//! range length then jumps from `a` to `a + M`, where the overshoot M has
//! the gambler's-ruin law P(M ≤ y) = y/(a + y). The chain of range lengths
//! is therefore a Markov recurrence that can be sampled *exactly* — no path
//! discretization — by inverse transform: with U uniform on (0,1),
//! M = a·U/(1−U) has exactly that CDF. The chain stops as soon as the
//! sampled overshoot would carry the range to L or beyond (the cover
//! completes without another switchback), and ν counts the steps taken.
//!
//! The switchback count sampled this way is exact in distribution — the
//! goodness-of-fit harness uses it as ground truth against the analytic
//! Poisson(ln(L/a)) law.

use rayon::prelude::*;

use super::cover::SimPlan;
use super::rng::StreamRng;
use crate::analytic::RangeState;
use crate::error::{Error, Result};

/// One sampled chain of range lengths.
#[derive(Clone, Debug, PartialEq, serde::Serialize)]
pub struct SwitchbackChain {
    /// Range length the chain started from.
    pub initial_a: f64,
    /// Target range length.
    pub l: f64,
    /// Number of switchbacks before the cover completed.
    pub nu: u64,
    /// Visited range lengths a₀ < a₁ < … (strictly increasing; empty for
    /// the degenerate start a = L, where no switchback can occur).
    pub a_trajectory: Vec<f64>,
}

/// Sample one switchback chain on stream `stream_index`.
///
/// `r` carries the starting range length `a` and the target `L` (with
/// 0 < a ≤ L already enforced; a = L yields the degenerate empty chain with
/// ν = 0). Each step draws a single uniform and either stops (overshoot
/// reaches L) or grows the range.
pub fn sample_switchbacks(plan: &SimPlan, r: &RangeState, stream_index: u64) -> Result<SwitchbackChain> {
    plan.validate()?;
    if r.a == r.l {
        return Ok(SwitchbackChain {
            initial_a: r.a,
            l: r.l,
            nu: 0,
            a_trajectory: Vec::new(),
        });
    }
    let mut rng = StreamRng::for_stream(plan.base_seed, stream_index);
    let mut a = r.a;
    let mut trajectory = vec![a];
    loop {
        let u = rng.open01();
        // Inverse of P(M ≤ y) = y/(a+y); finite because u < 1 strictly.
        let overshoot = a * u / (1.0 - u);
        if !overshoot.is_finite() {
            return Err(Error::accuracy(format!(
                "non-finite overshoot on stream {stream_index} at a = {a}"
            )));
        }
        if overshoot >= r.l - a {
            break;
        }
        a += overshoot;
        trajectory.push(a);
    }
    Ok(SwitchbackChain {
        initial_a: r.a,
        l: r.l,
        nu: (trajectory.len() - 1) as u64,
        a_trajectory: trajectory,
    })
}

/// Sample `plan.n_samples` chains over a pool of `plan.n_streams` workers,
/// ordered by stream index (schedule-independent output).
pub fn run_switchback_batch(plan: &SimPlan, r: &RangeState) -> Result<Vec<SwitchbackChain>> {
    plan.validate()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(plan.n_streams as usize)
        .build()
        .map_err(|e| Error::domain(format!("could not build worker pool: {e}")))?;
    pool.install(|| {
        (0..plan.n_samples)
            .into_par_iter()
            .map(|i| sample_switchbacks(plan, r, i))
            .collect()
    })
}
