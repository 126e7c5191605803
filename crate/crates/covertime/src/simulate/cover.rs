//! Monte Carlo sampler for the cover time θ_L.
//!
//! θ_L is realized as the first time the *range* (running max − running min)
//! of a linear Wiener path reaches length L. The path is discretized with
//! independent Gaussian increments √dt·Z. Plain discretization sees only the
//! step endpoints, so the tracked extremes lag the continuous ones by
//! O(√dt) per side and θ is overestimated by O(√dt). The optional
//! Brownian-bridge correction removes that bias at its source: each step,
//! the within-step supremum and infimum are sampled *exactly* by inverting
//! the bridge crossing law P(sup > b) = exp(−2(b−x₀)(b−x₁)/dt) at a fresh
//! uniform, and the running extremes are updated with them. The tracked
//! extremes then follow the continuous-path law (per side), leaving only
//! O(dt) error from the within-step independence of the two sides and from
//! θ interpolation.
//!
//! Determinism contract: sample `i` is produced entirely from
//! `StreamRng::for_stream(base_seed, i)`, so a batch is a pure function of
//! the plan — thread count and scheduling cannot affect results.

use rayon::prelude::*;

use super::rng::StreamRng;
use crate::error::{Error, Result};

/// Execution plan for a Monte Carlo batch.
#[derive(Clone, Debug, PartialEq)]
pub struct SimPlan {
    /// Number of samples (each on its own RNG stream).
    pub n_samples: u64,
    /// Time step of the discretized walk (cover-time sampler only).
    pub dt: f64,
    /// Whether to apply the Brownian-bridge within-step crossing test.
    pub bridge_correction: bool,
    /// Seed shared by the whole batch; combined with the stream index.
    pub base_seed: u64,
    /// Worker-pool width. Affects speed only, never results.
    pub n_streams: u64,
}

impl SimPlan {
    /// Check the field invariants: `n_samples ≥ 1`, `dt > 0`, `n_streams ≥ 1`.
    pub fn validate(&self) -> Result<()> {
        if self.n_samples == 0 {
            return Err(Error::domain("n_samples must be at least 1"));
        }
        if !(self.dt > 0.0) || !self.dt.is_finite() {
            return Err(Error::domain(format!(
                "dt must be positive and finite, got {}",
                self.dt
            )));
        }
        if self.n_streams == 0 {
            return Err(Error::domain("n_streams must be at least 1"));
        }
        Ok(())
    }
}

/// One simulated cover time with its diagnostics.
#[derive(Clone, Debug, PartialEq, serde::Serialize)]
pub struct CoverTimeSample {
    /// First time the range reached length L (interpolated within the step).
    pub theta: f64,
    /// Number of Gaussian increments consumed.
    pub n_steps: u64,
    /// Running minimum at termination (diagnostic excursion pair, low end).
    pub final_min: f64,
    /// Running maximum at termination (diagnostic excursion pair, high end).
    pub final_max: f64,
}

fn check_l(l: f64) -> Result<()> {
    if !(l > 0.0) || !l.is_finite() {
        return Err(Error::domain(format!(
            "circle circumference L must be positive and finite, got {l}"
        )));
    }
    Ok(())
}

/// Reject steps too coarse to resolve the covering at all: a single √dt
/// excursion should not be able to span the whole circle.
fn check_dt(dt: f64, l: f64) -> Result<()> {
    if dt >= l * l / 4.0 {
        return Err(Error::domain(format!(
            "dt = {dt} is too coarse for L = {l}: require dt < L²/4"
        )));
    }
    Ok(())
}

/// Simulate one cover time on stream `stream_index`.
///
/// Per step the walk advances by √dt·Z. Without the correction the running
/// extremes are updated with the step endpoint only. With
/// `bridge_correction` on, the within-step supremum is sampled first and
/// the infimum second (fixed draw order, one uniform each) by inverse
/// transform of the exact bridge crossing law
/// P(sup > b) = exp(−2(b−x₀)(b−x₁)/dt), which inverts to
/// sup = (x₀ + x₁ + √((x₁−x₀)² − 2·dt·ln U))/2 (and symmetrically for the
/// infimum); the running extremes are updated with those. Either way the
/// walk stops at the first step where max − min ≥ L, with θ linearly
/// interpolated within the step by the range overshoot. Deterministic given
/// `(base_seed, stream_index)`: the correction consumes exactly two
/// uniforms per step.
pub fn sample_cover_time(plan: &SimPlan, l: f64, stream_index: u64) -> Result<CoverTimeSample> {
    plan.validate()?;
    check_l(l)?;
    check_dt(plan.dt, l)?;

    let dt = plan.dt;
    let step_sd = dt.sqrt();
    let mut rng = StreamRng::for_stream(plan.base_seed, stream_index);

    let mut x = 0.0f64;
    let mut min = 0.0f64;
    let mut max = 0.0f64;
    let mut n_steps = 0u64;
    loop {
        let inc = step_sd * rng.standard_normal();
        if !inc.is_finite() {
            return Err(Error::accuracy(format!(
                "non-finite increment on stream {stream_index} after {n_steps} steps"
            )));
        }
        let x_new = x + inc;
        n_steps += 1;
        let elapsed = (n_steps - 1) as f64;

        let (min_new, max_new) = if plan.bridge_correction {
            // Exact extremes of the bridge from x to x_new over this step.
            // ln U < 0, so the square root is at least |x_new − x| and the
            // sampled sup/inf always enclose both endpoints.
            let gap_sq = (x_new - x) * (x_new - x);
            let sup = 0.5 * (x + x_new + (gap_sq - 2.0 * dt * rng.open01().ln()).sqrt());
            let inf = 0.5 * (x + x_new - (gap_sq - 2.0 * dt * rng.open01().ln()).sqrt());
            (min.min(inf), max.max(sup))
        } else {
            (min.min(x_new), max.max(x_new))
        };

        if max_new - min_new >= l {
            // The range grew from r_old < L to r_new ≥ L strictly within
            // this step, so the interpolation fraction is in (0, 1].
            let r_old = max - min;
            let r_new = max_new - min_new;
            let frac = (l - r_old) / (r_new - r_old);
            return Ok(CoverTimeSample {
                theta: (elapsed + frac) * dt,
                n_steps,
                final_min: min_new,
                final_max: max_new,
            });
        }

        x = x_new;
        min = min_new;
        max = max_new;
    }
}

/// Run the full batch of `plan.n_samples` cover times, fanned out over a
/// worker pool of `plan.n_streams` threads. Results are ordered by stream
/// index, so output is identical for any pool width.
pub fn run_cover_time_batch(plan: &SimPlan, l: f64) -> Result<Vec<CoverTimeSample>> {
    plan.validate()?;
    check_l(l)?;
    check_dt(plan.dt, l)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(plan.n_streams as usize)
        .build()
        .map_err(|e| Error::domain(format!("could not build worker pool: {e}")))?;
    pool.install(|| {
        (0..plan.n_samples)
            .into_par_iter()
            .map(|i| sample_cover_time(plan, l, i))
            .collect()
    })
}

/// Empirical Laplace transform: sample mean and standard error of
/// exp(−s·θᵢ) over the batch.
///
/// For a single sample the standard error is reported as 0 (no dispersion
/// estimate exists).
pub fn estimate_transform(samples: &[CoverTimeSample], s: f64) -> Result<(f64, f64)> {
    if samples.is_empty() {
        return Err(Error::domain("cannot estimate a transform from no samples"));
    }
    if !s.is_finite() || s < 0.0 {
        return Err(Error::domain(format!(
            "Laplace argument s must be finite and nonnegative, got {s}"
        )));
    }
    let n = samples.len();
    let values: Vec<f64> = samples.iter().map(|c| (-s * c.theta).exp()).collect();
    let mean = values.iter().sum::<f64>() / n as f64;
    if n == 1 {
        return Ok((mean, 0.0));
    }
    let ss = values.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>();
    let std_error = (ss / (n - 1) as f64 / n as f64).sqrt();
    Ok((mean, std_error))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn plan(n: u64, dt: f64, seed: u64) -> SimPlan {
        SimPlan {
            n_samples: n,
            dt,
            bridge_correction: true,
            base_seed: seed,
            n_streams: 4,
        }
    }

    #[test]
    fn plan_validation_rejects_degenerate_fields() {
        assert!(plan(0, 1e-3, 1).validate().is_err());
        assert!(plan(10, 0.0, 1).validate().is_err());
        assert!(plan(10, -1e-3, 1).validate().is_err());
        assert!(plan(10, f64::NAN, 1).validate().is_err());
        let mut p = plan(10, 1e-3, 1);
        p.n_streams = 0;
        assert!(p.validate().is_err());
        assert!(plan(10, 1e-3, 1).validate().is_ok());
    }

    #[test]
    fn coarse_steps_and_bad_lengths_are_domain_errors() {
        // dt ≥ L²/4 is inadmissible.
        assert!(sample_cover_time(&plan(1, 0.25, 1), 1.0, 0).is_err());
        assert!(sample_cover_time(&plan(1, 0.3, 1), 1.0, 0).is_err());
        assert!(sample_cover_time(&plan(1, 0.24, 1), 1.0, 0).is_ok());
        assert!(sample_cover_time(&plan(1, 1e-3, 1), 0.0, 0).is_err());
        assert!(sample_cover_time(&plan(1, 1e-3, 1), -2.0, 0).is_err());
    }

    #[test]
    fn same_seed_and_stream_reproduce_bit_for_bit() {
        let p = plan(1, 1e-3, 99);
        let a = sample_cover_time(&p, 1.0, 17).unwrap();
        let b = sample_cover_time(&p, 1.0, 17).unwrap();
        assert_eq!(a.theta.to_bits(), b.theta.to_bits());
        assert_eq!(a, b);
        // A different stream gives a different draw.
        let c = sample_cover_time(&p, 1.0, 18).unwrap();
        assert_ne!(a.theta.to_bits(), c.theta.to_bits());
    }

    #[test]
    fn batches_are_identical_for_any_worker_pool_width() {
        let mut p1 = plan(64, 1e-3, 5);
        p1.n_streams = 1;
        let mut p8 = p1.clone();
        p8.n_streams = 8;
        let a = run_cover_time_batch(&p1, 1.0).unwrap();
        let b = run_cover_time_batch(&p8, 1.0).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn samples_satisfy_the_termination_invariants() {
        let p = plan(200, 1e-3, 12);
        for c in run_cover_time_batch(&p, 1.0).unwrap() {
            assert!(c.theta > 0.0);
            assert!(c.n_steps >= 1);
            // θ lies inside the terminating step.
            assert!(c.theta <= c.n_steps as f64 * p.dt + 1e-12);
            assert!(c.theta >= (c.n_steps - 1) as f64 * p.dt);
            // The recorded excursion pair spans at least L.
            assert!(c.final_max - c.final_min >= 1.0 - 1e-12);
        }
    }

    #[test]
    fn quadrupling_dt_at_doubled_length_scales_samples_exactly() {
        // W is scale-invariant: doubling space and quadrupling time maps the
        // discretized path bijectively onto itself, and every floating-point
        // operation involved scales by an exact power of two. Same seed ⇒
        // θ(L=2, 4dt) is *bit-for-bit* 4·θ(L=1, dt).
        let p1 = plan(40, 1e-3, 31);
        let mut p4 = p1.clone();
        p4.dt = 4e-3;
        let base = run_cover_time_batch(&p1, 1.0).unwrap();
        let scaled = run_cover_time_batch(&p4, 2.0).unwrap();
        for (a, b) in base.iter().zip(&scaled) {
            assert_eq!((4.0 * a.theta).to_bits(), b.theta.to_bits());
            assert_eq!(a.n_steps, b.n_steps);
            assert_eq!((2.0 * a.final_min).to_bits(), b.final_min.to_bits());
            assert_eq!((2.0 * a.final_max).to_bits(), b.final_max.to_bits());
        }
    }

    #[test]
    fn sample_mean_sits_near_the_analytic_mean() {
        // E[θ_1] = 1/2, sd = √(1/12) ≈ 0.289. N = 4000 ⇒ SE ≈ 4.6e-3;
        // a ±10 SE band absorbs the remaining O(dt) discretization bias.
        let p = plan(4000, 1e-3, 2024);
        let samples = run_cover_time_batch(&p, 1.0).unwrap();
        let mean = samples.iter().map(|c| c.theta).sum::<f64>() / samples.len() as f64;
        assert!((mean - 0.5).abs() < 0.046, "mean {mean}");
    }

    #[test]
    fn consecutive_streams_are_uncorrelated() {
        let p = plan(2000, 1e-3, 77);
        let thetas: Vec<f64> = run_cover_time_batch(&p, 1.0)
            .unwrap()
            .iter()
            .map(|c| c.theta)
            .collect();
        let n = thetas.len() - 1;
        let xs = &thetas[..n];
        let ys = &thetas[1..];
        let mx = xs.iter().sum::<f64>() / n as f64;
        let my = ys.iter().sum::<f64>() / n as f64;
        let mut cov = 0.0;
        let mut vx = 0.0;
        let mut vy = 0.0;
        for i in 0..n {
            cov += (xs[i] - mx) * (ys[i] - my);
            vx += (xs[i] - mx) * (xs[i] - mx);
            vy += (ys[i] - my) * (ys[i] - my);
        }
        let rho = cov / (vx * vy).sqrt();
        assert!(rho.abs() < 4.0 / (n as f64).sqrt(), "lag-1 correlation {rho}");
    }

    #[test]
    fn transform_estimate_behaves_at_the_endpoints() {
        let p = plan(500, 1e-3, 8);
        let samples = run_cover_time_batch(&p, 1.0).unwrap();
        // s = 0 ⇒ every value is exactly 1 with zero dispersion.
        let (m0, se0) = estimate_transform(&samples, 0.0).unwrap();
        assert_eq!(m0, 1.0);
        assert_eq!(se0, 0.0);
        // Pointwise e^{−sθ} is decreasing in s, so so is the mean.
        let (m_half, _) = estimate_transform(&samples, 0.5).unwrap();
        let (m_one, _) = estimate_transform(&samples, 1.0).unwrap();
        assert!(m_one <= m_half && m_half <= 1.0);
        // Degenerate inputs.
        assert!(estimate_transform(&[], 1.0).is_err());
        assert!(estimate_transform(&samples, -0.5).is_err());
        assert!(estimate_transform(&samples, f64::NAN).is_err());
        let (m1, se1) = estimate_transform(&samples[..1], 0.5).unwrap();
        assert!(m1 > 0.0 && se1 == 0.0);
    }
}
