//! Alternating-series evaluation of the cover-time density and CDF, their
//! scaled-`L` variants, quantiles, and the first two moments.
//!
//! The density of `θ_1` is
//! `p(t) = Σ_{n≥0} 4(−1)ⁿ(n+1)²/(√(2π)·t^{3/2}) · exp(−(n+1)²/(2t))`.
//! Term-by-term Laplace integration (each term is a scaled first-passage
//! density with transform `exp(−a√(2s))`) gives the CDF
//! `F(t) = Σ_{n≥0} 4(−1)ⁿ(n+1) · erfc((n+1)/√(2t))`.
//!
//! Truncation needs care: the terms are *not* monotone in `n` until
//! `(n+1)² > t`, so the alternating-series remainder bound only applies
//! past that peak. Both sums therefore run under the shared rule "stop at
//! the first term past the peak that is below tolerance", with compensated
//! summation and a hard `max_terms` cap that errors instead of returning
//! an unconverged value (in practice the cap binds only beyond `t ≈ 10⁴`,
//! far outside the support that carries any mass).

use crate::analytic::types::{DensityPoint, SeriesControl};
use crate::numeric::KahanSum;
use crate::special::erfc;
use crate::{Error, Result};

fn check_time(t: f64) -> Result<()> {
    if !t.is_finite() || t <= 0.0 {
        return Err(Error::domain(format!(
            "time must be finite and positive, got t={t}"
        )));
    }
    Ok(())
}

fn check_length(l: f64) -> Result<()> {
    if !l.is_finite() || l <= 0.0 {
        return Err(Error::domain(format!(
            "L must be finite and positive, got {l}"
        )));
    }
    Ok(())
}

/// Sum `Σ_{n≥0} (−1)ⁿ·magnitude(n+1)` under the two-part truncation rule:
/// past the term-magnitude peak at `(n+1)² ≈ t` *and* below tolerance.
fn sum_alternating<F: Fn(f64) -> f64>(
    t: f64,
    ctl: &SeriesControl,
    magnitude: F,
    what: &str,
) -> Result<f64> {
    let mut acc = KahanSum::new();
    let mut sign = 1.0;
    for n in 0..ctl.max_terms {
        let m = (n + 1) as f64;
        let term = sign * magnitude(m);
        acc += term;
        sign = -sign;
        if m * m > t && term.abs() < ctl.rel_tol * acc.total().abs() + ctl.abs_tol {
            return Ok(acc.total());
        }
    }
    Err(Error::accuracy(format!(
        "{what} series did not converge within {} terms at t={t}",
        ctl.max_terms
    )))
}

/// Map a summed value onto `[0, ∞)`: truncation of an alternating series
/// can leave a residue of magnitude up to the last term, so values in
/// `[−abs_tol, 0)` clamp to 0, while anything more negative is reported as
/// an internal accuracy failure (a nonnegative quantity summing far below
/// zero means the summation itself is wrong, not the truncation).
fn clamp_nonnegative(value: f64, ctl: &SeriesControl, what: &str, t: f64) -> Result<f64> {
    if value >= 0.0 {
        Ok(value)
    } else if value >= -ctl.abs_tol {
        Ok(0.0)
    } else {
        Err(Error::accuracy(format!(
            "{what} at t={t} summed to {value:e}, beyond the negative-residue tolerance {:e}",
            ctl.abs_tol
        )))
    }
}

/// Density of the cover time `θ_1` of a unit-length range at time `t`.
///
/// Below the underflow threshold of `exp(−1/(2t))` (t ≲ 6.7e−4) the value
/// is exactly 0: every term underflows, which is the honest answer for a
/// density of order `exp(−745)`.
pub fn density_theta1(t: f64, ctl: &SeriesControl) -> Result<DensityPoint> {
    ctl.validate()?;
    check_time(t)?;
    if (-0.5 / t).exp() == 0.0 {
        return Ok(DensityPoint { t, value: 0.0 });
    }
    let prefactor = 4.0 / ((2.0 * std::f64::consts::PI).sqrt() * t * t.sqrt());
    let sum = sum_alternating(
        t,
        ctl,
        |m| prefactor * m * m * (-m * m * 0.5 / t).exp(),
        "cover-time density",
    )?;
    let value = clamp_nonnegative(sum, ctl, "cover-time density", t)?;
    Ok(DensityPoint { t, value })
}

/// Density of `θ_L` for a general target length, by the exact scaling
/// `θ_L ~ L²·θ_1`: `p_{θ_L}(t) = p_{θ_1}(t/L²)/L²`.
///
/// Implemented by substitution, so it reproduces
/// `density_theta1(t/L²)/L²` bit for bit.
pub fn density_theta_l(t: f64, l: f64, ctl: &SeriesControl) -> Result<DensityPoint> {
    check_length(l)?;
    let unit = density_theta1(t / (l * l), ctl)?;
    Ok(DensityPoint { t, value: unit.value / (l * l) })
}

/// CDF of the unit cover time: `F(t) = Σ 4(−1)ⁿ(n+1)·erfc((n+1)/√(2t))`,
/// clamped into `[0, 1]`.
pub fn cdf_theta1(t: f64, ctl: &SeriesControl) -> Result<f64> {
    ctl.validate()?;
    check_time(t)?;
    let sqrt_2t = (2.0 * t).sqrt();
    let sum = sum_alternating(
        t,
        ctl,
        |m| 4.0 * m * erfc(m / sqrt_2t),
        "cover-time CDF",
    )?;
    let value = clamp_nonnegative(sum, ctl, "cover-time CDF", t)?;
    // For t ≫ 1 the partial sums cancel from magnitudes of order √t down
    // to 1, so the converged value can sit a few units of rounding above
    // 1; clamp that, but treat a gross overshoot as a summation bug.
    if value > 1.0 + 1e-9 {
        return Err(Error::accuracy(format!(
            "cover-time CDF at t={t} summed to {value:e}, far above 1"
        )));
    }
    Ok(value.min(1.0))
}

/// CDF of `θ_L`: `F_{θ_L}(t) = F_{θ_1}(t/L²)`.
pub fn cdf_theta_l(t: f64, l: f64, ctl: &SeriesControl) -> Result<f64> {
    check_length(l)?;
    cdf_theta1(t / (l * l), ctl)
}

/// Quantile of `θ_1`: the time `t` with `|F(t) − p| ≤ 1e−10`.
///
/// The bracket starts at `[1e−3, 10]` — which already spans all the mass
/// representable in binary64 — and grows geometrically on either side if a
/// pathological `p` requires it, then hands over to the secant/bisection
/// root finder.
pub fn quantile_theta1(p: f64, ctl: &SeriesControl) -> Result<f64> {
    ctl.validate()?;
    if !p.is_finite() || p <= 0.0 || p >= 1.0 {
        return Err(Error::domain(format!(
            "quantile probability must lie strictly inside (0, 1), got {p}"
        )));
    }
    let mut lo = 1e-3;
    let mut hi = 10.0;
    let mut f_lo = cdf_theta1(lo, ctl)? - p;
    let mut f_hi = cdf_theta1(hi, ctl)? - p;
    while f_hi < 0.0 {
        lo = hi;
        f_lo = f_hi;
        hi *= 2.0;
        if hi > 1e7 {
            return Err(Error::accuracy(format!(
                "quantile bracket expansion ran away (p={p})"
            )));
        }
        f_hi = cdf_theta1(hi, ctl)? - p;
    }
    while f_lo > 0.0 {
        hi = lo;
        f_hi = f_lo;
        lo *= 0.5;
        if lo < 1e-12 {
            return Err(Error::accuracy(format!(
                "quantile bracket shrink ran away (p={p})"
            )));
        }
        f_lo = cdf_theta1(lo, ctl)? - p;
    }
    let _ = (f_lo, f_hi);
    let ctl_owned = *ctl;
    crate::numeric::solve_monotone(
        |t| cdf_theta1(t, &ctl_owned).expect("CDF evaluable inside bracket") - p,
        lo,
        hi,
        1e-10,
    )
}

/// Quantile of `θ_L`, by scaling: `L²·quantile_theta1(p)`.
pub fn quantile_theta_l(p: f64, l: f64, ctl: &SeriesControl) -> Result<f64> {
    check_length(l)?;
    Ok(l * l * quantile_theta1(p, ctl)?)
}

/// Mean and variance of the unit cover time: `(1/2, 1/12)`.
///
/// Derivation from the transform, expanding at s = 0:
/// `cosh²(√(s/2)) = 1 + s/2 + s²/12 + O(s³)`, so
/// `E[e^{−sθ}] = 1/cosh²(√(s/2)) = 1 − s/2 + s²/6 + O(s³)`.
/// Matching `1 − s·E[θ] + s²·E[θ²]/2` gives `E[θ] = 1/2`, `E[θ²] = 1/3`,
/// hence variance `1/3 − 1/4 = 1/12`. The same two numbers are reproduced
/// independently by quadrature of `t·p(t)` and `t²·p(t)` in the test
/// suite, so the hard-coded values are cross-checked, not trusted.
pub fn moments_theta1() -> (f64, f64) {
    (0.5, 1.0 / 12.0)
}

/// Mean and variance of `θ_L`: `(L²/2, L⁴/12)` by the scaling law.
pub fn moments_theta_l(l: f64) -> Result<(f64, f64)> {
    check_length(l)?;
    let (mean, var) = moments_theta1();
    Ok((mean * l * l, var * l * l * l * l))
}
