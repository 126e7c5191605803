//! Monte Carlo engines, fully deterministic under a seed.
//!
//! Two samplers with very different accuracy profiles:
//!
//! * [`sample_cover_time`] — a *discretized* Wiener walk whose range is
//!   tracked until it spans L, optionally updating the extremes with
//!   exactly-sampled within-step Brownian-bridge suprema/infima. Carries
//!   O(dt) bias with the correction on (O(√dt) without); used to validate
//!   the analytic density and transform end-to-end.
//! * [`sample_switchbacks`] — an *exact* inverse-CDF chain for the
//!   switchback count ν (no discretization error at all); used to validate
//!   the Poisson(ln(L/a)) law.
//!
//! Both sample `i` of a batch from its own RNG stream seeded by
//! `(base_seed, i)`, so batches are pure functions of the
//! [`SimPlan`] — worker count affects wall time only.

pub mod cover;
pub mod rng;
pub mod switchback;

pub use cover::{
    estimate_transform, run_cover_time_batch, sample_cover_time, CoverTimeSample, SimPlan,
};
pub use rng::StreamRng;
pub use switchback::{run_switchback_batch, sample_switchbacks, SwitchbackChain};
