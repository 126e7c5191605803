//! Distribution of the Brownian range-covering time, and the Poisson law of
//! range switchbacks.
//!
//! Let `W` be a standard one-dimensional Brownian path started at 0 and let
//! `θ_L` be the first time its running range — `max W − min W` over `[0, t]`
//! — reaches a target length `L`. Wrapped on a circle of circumference `L`,
//! `θ_L` is exactly the time the path needs to visit every point, so the
//! same object answers "how long until a diffusing particle has covered the
//! whole ring?".
//!
//! The distribution is classical but remarkably concrete:
//!
//! * its Laplace transform is `E[exp(−s·θ_L)] = 1 / cosh²(L·√(s/2))`;
//! * its density is an alternating theta-like series,
//!   `p_{θ_1}(t) = Σ_{n≥0} 4(−1)ⁿ (n+1)² / (√(2π) t^{3/2}) · exp(−(n+1)²/(2t))`,
//!   with the scaling law `θ_L ~ L²·θ_1`;
//! * on the way to length `L`, the number `ν` of *switchbacks* — times the
//!   path turns around and extends its range on the opposite side before the
//!   range is complete — is Poisson with mean `log(L/a)` when the range
//!   starts at length `a`.
//!
//! The crate evaluates all of these in closed form ([`analytic`]), samples
//! them by Monte Carlo and by an exact chain construction ([`simulate`]),
//! and compares the two routes with standard goodness-of-fit machinery
//! ([`stats`]). A numerical Laplace-inversion oracle (Gaver–Stehfest, in
//! double-double arithmetic) provides an independent consistency check on
//! the series evaluations. The [`cli`] module exposes everything as a small
//! command-line tool.
//!
//! # Quick start
//!
//! ```
//! use covertime::analytic::{self, SeriesControl};
//!
//! // Transform value E[exp(-0.5 θ_1)] = 1/cosh²(0.5): about 0.786448.
//! let phi = analytic::laplace_theta(0.5, 1.0).unwrap();
//! assert!((phi - 0.786_447_732_965_927_4).abs() < 1e-15);
//!
//! // Density and CDF of θ_1 at t = 0.5.
//! let ctl = SeriesControl::default();
//! let p = analytic::density_theta1(0.5, &ctl).unwrap();
//! let f = analytic::cdf_theta1(0.5, &ctl).unwrap();
//! assert!((p.value - 1.334_763_208_583_847_8).abs() < 1e-12);
//! assert!((f - 0.592_039_787_671_367_7).abs() < 1e-12);
//! ```
//!
//! Each major capability also has a runnable example under `examples/`; see
//! the README for the directory map.

pub mod analytic;
pub mod cli;
pub mod dd;
mod error;
pub mod numeric;
pub mod simulate;
pub mod special;
pub mod stats;

pub use error::{Error, Result};
