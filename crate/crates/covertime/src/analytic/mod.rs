//! Closed-form and series evaluation of the cover-time distribution, the
//! exit-time transforms behind it, the Poisson switchback law, and a
//! Gaver–Stehfest inversion oracle for cross-checking it all.
//!
//! Everything in this module is a pure function of its arguments — no
//! caching, no shared state — and safe to call from any number of threads.
//!
//! The submodules split by mathematical object; the public surface is
//! re-exported flat, so callers write `analytic::laplace_theta(…)`,
//! `analytic::density_theta1(…)`, and so on:
//!
//! * transforms: [`laplace_theta`] (with a double-double twin for the
//!   inversion oracle), the exit-time pair [`transform_f`]/[`transform_g`],
//!   [`conditional_laplace`] and its renewal-equation
//!   [`integral_equation_residual`], and the exit-probability kernel
//!   [`max_before_hit_cdf`];
//! * series: [`density_theta1`]/[`density_theta_l`],
//!   [`cdf_theta1`]/[`cdf_theta_l`], [`quantile_theta1`]/
//!   [`quantile_theta_l`], and the moments;
//! * switchbacks: [`switchback_rate`], [`switchback_pmf`],
//!   [`switchback_pgf`] — note the PGF sign discussion in
//!   [`switchback`](self) (the exponent is `+λ(t−1)`, pinned down by
//!   three independent identities);
//! * inversion: [`stehfest_weights`], [`invert_laplace`],
//!   [`invert_laplace_dd`], with the measured accuracy envelope of the
//!   method documented where the weights live.

mod series;
mod stehfest;
mod switchback;
mod transform;
mod types;

pub use series::{
    cdf_theta1, cdf_theta_l, density_theta1, density_theta_l, moments_theta1, moments_theta_l,
    quantile_theta1, quantile_theta_l,
};
pub use stehfest::{
    invert_laplace, invert_laplace_dd, stehfest_weights, DEFAULT_INVERSION_ORDER,
};
pub use switchback::{switchback_pgf, switchback_pmf, switchback_rate};
pub use transform::{
    conditional_laplace, integral_equation_residual, laplace_theta, laplace_theta_dd,
    max_before_hit_cdf, transform_f, transform_g,
};
pub use types::{DensityPoint, PgfQuery, RangeState, SeriesControl, TransformQuery};
