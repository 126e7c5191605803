//! Closed-form Laplace transforms of the cover time and of the two-sided
//! exit times feeding it.
//!
//! Everything here is a ratio of hyperbolic functions of `c = √(2s)`. Naive
//! `sinh`/`cosh` overflow once their argument passes ~710, so every ratio
//! is rewritten in terms of decaying exponentials before evaluation:
//!
//! * `1/cosh²(x) = 4e⁻²ˣ/(1+e⁻²ˣ)²`,
//! * `sinh(u)/sinh(v) = e^{u−v}·expm1(−2u)/expm1(−2v)` for `0 < u ≤ v`,
//! * `cosh(u)/cosh(v) = e^{u−v}·(1+e^{−2u})/(1+e^{−2v})`.
//!
//! Each form is exact algebra, keeps every exponent nonpositive, and
//! degrades gracefully to the correct `s → 0` limits through `expm1`.

use crate::analytic::types::{RangeState, TransformQuery};
use crate::dd::Dd;
use crate::numeric;
use crate::{Error, Result};

fn check_length(name: &str, value: f64) -> Result<()> {
    if !value.is_finite() || value <= 0.0 {
        return Err(Error::domain(format!(
            "{name} must be finite and positive, got {value}"
        )));
    }
    Ok(())
}

/// Laplace transform of the cover time of a length-`l` range:
/// `E[exp(−s·θ_L)] = 1/cosh²(l·√(s/2))`.
///
/// Returns exactly 1 at `s = 0`, decreases strictly in both `s` and `l`,
/// and underflows gracefully to 0 for huge `s·l²`.
pub fn laplace_theta(s: f64, l: f64) -> Result<f64> {
    let q = TransformQuery::new(s)?;
    check_length("L", l)?;
    if q.is_zero() {
        return Ok(1.0);
    }
    // 1/cosh²(cl/2) with e = exp(−c·l).
    let e = (-q.c * l).exp();
    Ok(4.0 * e / ((1.0 + e) * (1.0 + e)))
}

/// [`laplace_theta`] carried out in double-double arithmetic, for use as an
/// inversion-oracle integrand where `f64` evaluation noise would be
/// amplified ~1e8-fold by the Stehfest weights.
///
/// The caller guarantees `s ≥ 0` and `l > 0` (this is an internal building
/// block of [`crate::analytic::invert_laplace_dd`] closures).
pub fn laplace_theta_dd(s: Dd, l: f64) -> Dd {
    debug_assert!(s.hi >= 0.0 && l > 0.0);
    let cl = s.ldexp(1).sqrt().mul_f64(l);
    let e = cl.neg().exp();
    e.ldexp(2).div(e.add_f64(1.0).sqr())
}

/// Probability that a path at distance `a` from one barrier reaches new
/// ground of size at most `y` on the other side before hitting the barrier:
/// `P(M ≤ y) = y/(a+y)`.
///
/// This is the `s → 0` limit of [`transform_f`] and the inverse-CDF kernel
/// of the exact switchback chain.
pub fn max_before_hit_cdf(a: f64, y: f64) -> Result<f64> {
    check_length("a", a)?;
    if !y.is_finite() || y < 0.0 {
        return Err(Error::domain(format!(
            "overshoot bound y must be finite and nonnegative, got {y}"
        )));
    }
    Ok(y / (a + y))
}

/// Joint transform `F(s, a, y) = sinh(c·y)/sinh(c·(a+y))`: the Laplace
/// weight `E[exp(−s·τ₋ₐ); τ₋ₐ < τ_y]` of hitting `−a` before `+y` from 0.
///
/// `s = 0` evaluates to the exit probability `y/(a+y)`; `y = 0` to 0.
pub fn transform_f(s: f64, a: f64, y: f64) -> Result<f64> {
    let q = TransformQuery::new(s)?;
    check_length("a", a)?;
    if !y.is_finite() || y < 0.0 {
        return Err(Error::domain(format!(
            "new-ground extent y must be finite and nonnegative, got {y}"
        )));
    }
    if q.is_zero() {
        return Ok(y / (a + y));
    }
    if y == 0.0 {
        return Ok(0.0);
    }
    Ok((-q.c * a).exp() * f64::exp_m1(-2.0 * q.c * y) / f64::exp_m1(-2.0 * q.c * (a + y)))
}

/// Joint transform `G(s, a, y) = sinh(c·a)/sinh(c·(a+y))`: the Laplace
/// weight `E[exp(−s·τ_y); τ_y < τ₋ₐ]` of hitting `+y` before `−a` from 0.
///
/// `s = 0` evaluates to the exit probability `a/(a+y)`.
pub fn transform_g(s: f64, a: f64, y: f64) -> Result<f64> {
    let q = TransformQuery::new(s)?;
    check_length("a", a)?;
    if !y.is_finite() || y < 0.0 {
        return Err(Error::domain(format!(
            "new-ground extent y must be finite and nonnegative, got {y}"
        )));
    }
    if q.is_zero() {
        return Ok(a / (a + y));
    }
    Ok((-q.c * y).exp() * f64::exp_m1(-2.0 * q.c * a) / f64::exp_m1(-2.0 * q.c * (a + y)))
}

/// Laplace transform of the remaining cover time given the range currently
/// has length `a` (path sitting at one end):
/// `f(a) = (sinh(c·a)/sinh(c·L)) · (tanh(c·L/2)/tanh(c·a/2))`.
///
/// Algebraically this collapses to `cosh²(c·a/2)/cosh²(c·L/2)` (the tanh
/// factor is `exp ∫_a^L c/sinh(c·u) du` with antiderivative
/// `log tanh(c·u/2)`, checked by differentiation:
/// `d/du log tanh(cu/2) = (c/2)·(1/tanh − tanh)(cu/2) = c/sinh(cu)`),
/// which is the form evaluated here. `f(L) = 1` exactly, `f` is
/// nondecreasing in `a`, and `f → laplace_theta` as `a ↓ 0`.
pub fn conditional_laplace(s: f64, r: RangeState) -> Result<f64> {
    let q = TransformQuery::new(s)?;
    if q.is_zero() {
        return Ok(1.0);
    }
    // cosh(ca/2)/cosh(cL/2) = e^{c(a−L)/2}·(1+e^{−ca})/(1+e^{−cL}); the
    // numerator and denominator are identical when a = L, so f(L) is
    // exactly 1.
    let ratio = (0.5 * q.c * (r.a - r.l)).exp() * (1.0 + (-q.c * r.a).exp())
        / (1.0 + (-q.c * r.l).exp());
    Ok(ratio * ratio)
}

/// Residual of the renewal integral equation that characterizes
/// [`conditional_laplace`]:
///
/// `f(a) − sinh(ca)/sinh(cL) − ∫_a^L c·sinh(ca)/sinh²(cx) · f(x) dx`.
///
/// The first right-hand term is the direct route (range completes without
/// another switchback), the integral sums over the length `x` reached at
/// the next switchback. A correct `f` drives this to quadrature noise;
/// the magnitude of the returned value is therefore a deep consistency
/// check of the closed form. `quad_tol` is the adaptive-quadrature
/// absolute tolerance.
pub fn integral_equation_residual(s: f64, r: RangeState, quad_tol: f64) -> Result<f64> {
    let q = TransformQuery::new(s)?;
    if q.is_zero() {
        return Err(Error::domain(
            "integral-equation residual needs s > 0 (the s = 0 equation is the trivial 1 = 1)",
        ));
    }
    let c = q.c;
    let (a, l) = (r.a, r.l);
    let f_a = conditional_laplace(s, r)?;
    // sinh(ca)/sinh(cL) without overflow.
    let direct = (c * (a - l)).exp() * f64::exp_m1(-2.0 * c * a) / f64::exp_m1(-2.0 * c * l);
    // c·sinh(ca)/sinh²(cx) = 2c·e^{c(a−2x)}·(1−e^{−2ca})/(1−e^{−2cx})².
    let kernel_scale = -f64::exp_m1(-2.0 * c * a);
    let integral = numeric::integrate(
        |x| {
            let state = RangeState::new(x, l).expect("quadrature node inside (a, L]");
            let f_x = conditional_laplace(s, state).expect("validated arguments");
            let em = f64::exp_m1(-2.0 * c * x);
            2.0 * c * (c * (a - 2.0 * x)).exp() * kernel_scale / (em * em) * f_x
        },
        a,
        l,
        quad_tol,
    )?;
    Ok(f_a - direct - integral)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analytic::types::RangeState;

    fn assert_rel(actual: f64, expected: f64, rel_tol: f64) {
        let scale = expected.abs().max(f64::MIN_POSITIVE);
        assert!(
            (actual - expected).abs() / scale <= rel_tol,
            "actual {actual:.17e} vs expected {expected:.17e} (rel tol {rel_tol:.1e})"
        );
    }

    // Reference values computed with mpmath at 60 significant digits.

    #[test]
    fn laplace_theta_matches_reference_values() {
        assert_eq!(laplace_theta(0.0, 1.0).unwrap(), 1.0);
        assert_rel(laplace_theta(0.5, 1.0).unwrap(), 0.7864477329659274, 5e-15);
        assert_rel(laplace_theta(1.0, 1.0).unwrap(), 0.6292902736348537, 5e-15);
        assert_rel(laplace_theta(2.0, 1.0).unwrap(), 0.4199743416140261, 5e-15);
        assert_rel(laplace_theta(1.0, 2.0).unwrap(), 0.21077109396613054, 5e-15);
        assert_rel(laplace_theta(0.01, 1.0).unwrap(), 0.9950166195671564, 5e-15);
        assert_rel(laplace_theta(100.0, 1.0).unwrap(), 2.8854124479768524e-6, 1e-14);
        assert_rel(laplace_theta(1.0, 0.5).unwrap(), 0.8847240654808521, 5e-15);
        assert_rel(laplace_theta(0.5, 3.0).unwrap(), 0.18070663892364853, 5e-15);
    }

    #[test]
    fn laplace_theta_scaling_invariance_is_bitwise_when_cl_matches() {
        // (s=2, L=2) and (s=8, L=1) share c·L = 4 exactly in IEEE terms.
        assert_eq!(laplace_theta(2.0, 2.0).unwrap(), laplace_theta(8.0, 1.0).unwrap());
    }

    #[test]
    fn laplace_theta_is_strictly_decreasing_and_survives_huge_arguments() {
        // Bound the sweep where exp(-√(2s)·L) is still a positive subnormal;
        // past s ≈ 2.8e5 consecutive values both underflow to exactly 0 and
        // strict comparison is meaningless.
        let mut prev = laplace_theta(0.0, 1.0).unwrap();
        for k in 1..40 {
            let s = 0.05 * f64::powi(1.4, k);
            let v = laplace_theta(s, 1.0).unwrap();
            assert!(v < prev, "not decreasing in s at s={s}");
            prev = v;
        }
        let huge = laplace_theta(1e9, 3.0).unwrap();
        assert!(huge >= 0.0 && huge < 1e-300, "no overflow: {huge}");
        assert!(laplace_theta(1.0, -1.0).is_err());
        assert!(laplace_theta(f64::NAN, 1.0).is_err());
        assert!(laplace_theta(-0.5, 1.0).is_err());
    }

    #[test]
    fn laplace_theta_dd_agrees_with_f64_evaluation() {
        for &(s, l) in &[(0.5, 1.0), (2.0, 1.0), (1.0, 2.0), (32.3, 1.0), (0.01, 3.0)] {
            let dd = laplace_theta_dd(Dd::from_f64(s), l).to_f64();
            let plain = laplace_theta(s, l).unwrap();
            assert_rel(dd, plain, 5e-15);
        }
        // Spot value to full f64 precision.
        let dd = laplace_theta_dd(Dd::from_f64(0.5), 1.0).to_f64();
        assert!((dd - 0.7864477329659274).abs() < 3e-16);
    }

    #[test]
    fn max_before_hit_cdf_reference_points() {
        assert_eq!(max_before_hit_cdf(1.0, 1.0).unwrap(), 0.5);
        assert_eq!(max_before_hit_cdf(1.0, 0.0).unwrap(), 0.0);
        assert_rel(max_before_hit_cdf(0.1, 0.9).unwrap(), 0.9, 1e-15);
        assert!(max_before_hit_cdf(0.0, 1.0).is_err());
        assert!(max_before_hit_cdf(1.0, -0.1).is_err());
        // Monotone nondecreasing in y, capped at 1.
        let lo = max_before_hit_cdf(0.7, 0.3).unwrap();
        let hi = max_before_hit_cdf(0.7, 3.0).unwrap();
        assert!(lo < hi && hi < 1.0);
    }

    #[test]
    fn transform_f_and_g_match_reference_values() {
        // (s, a, y) → sinh(cy)/sinh(c(a+y)) resp. sinh(ca)/sinh(c(a+y)).
        assert_rel(transform_f(0.5, 1.0, 1.0).unwrap(), 0.3240271368319427, 5e-15);
        assert_rel(transform_g(0.5, 1.0, 1.0).unwrap(), 0.3240271368319427, 5e-15);
        assert_rel(transform_f(2.0, 0.3, 0.8).unwrap(), 0.5329844960590434, 5e-15);
        assert_rel(transform_g(2.0, 0.3, 0.8).unwrap(), 0.14284015247315651, 5e-15);
        assert_rel(transform_f(0.01, 2.0, 3.0).unwrap(), 0.5695033915407171, 5e-15);
        assert_rel(transform_g(0.01, 2.0, 3.0).unwrap(), 0.37344679984040326, 5e-15);
        assert_rel(transform_f(10.0, 0.05, 0.2).unwrap(), 0.7456653439388918, 5e-15);
        assert_rel(transform_g(10.0, 0.05, 0.2).unwrap(), 0.16506739225918119, 5e-15);
    }

    #[test]
    fn transform_limits_and_edges() {
        assert_eq!(transform_f(0.0, 1.0, 1.0).unwrap(), 0.5);
        assert_eq!(transform_g(0.0, 1.0, 1.0).unwrap(), 0.5);
        assert_rel(transform_g(0.0, 0.1, 0.9).unwrap(), 0.1, 1e-15);
        assert_eq!(transform_f(0.5, 1.0, 0.0).unwrap(), 0.0);
        assert_eq!(transform_g(0.5, 1.0, 0.0).unwrap(), 1.0);
        // Tiny s approaches the s = 0 limit smoothly (expm1 path).
        assert_rel(transform_f(1e-14, 1.0, 1.0).unwrap(), 0.5, 1e-9);
        assert!(transform_f(0.5, -1.0, 1.0).is_err());
        assert!(transform_g(0.5, 1.0, -1.0).is_err());
        assert!(transform_f(-0.5, 1.0, 1.0).is_err());
    }

    #[test]
    fn exit_transforms_satisfy_the_optional_stopping_identities() {
        // Stopping exp(±cW − c²t/2) at the two-sided exit gives
        //   e^{−ca}·F + e^{+cy}·G = 1   and   e^{+ca}·F + e^{−cy}·G = 1.
        for &s in &[0.1f64, 0.5, 1.0, 3.0, 10.0] {
            let c = (2.0 * s).sqrt();
            for &(a, y) in &[(0.2, 0.2), (0.5, 1.5), (1.0, 0.3), (2.0, 2.0), (0.05, 3.0)] {
                let f = transform_f(s, a, y).unwrap();
                let g = transform_g(s, a, y).unwrap();
                let plus = (-c * a).exp() * f + (c * y).exp() * g;
                let minus = (c * a).exp() * f + (-c * y).exp() * g;
                assert_rel(plus, 1.0, 1e-12);
                assert_rel(minus, 1.0, 1e-12);
            }
        }
    }

    #[test]
    fn conditional_laplace_matches_reference_values() {
        let r = |a, l| RangeState::new(a, l).unwrap();
        assert_rel(conditional_laplace(0.5, r(0.5, 1.0)).unwrap(), 0.8366333084680007, 5e-15);
        assert_rel(conditional_laplace(2.0, r(0.3, 1.0)).unwrap(), 0.45891965807582509, 5e-15);
        assert_rel(conditional_laplace(1.0, r(1.0, 2.0)).unwrap(), 0.33493461252577802, 5e-15);
        assert_rel(conditional_laplace(10.0, r(0.05, 1.0)).unwrap(), 0.045225968452260781, 5e-15);
        // f(L) = 1 exactly, any s.
        assert_eq!(conditional_laplace(3.7, r(2.2, 2.2)).unwrap(), 1.0);
        assert_eq!(conditional_laplace(0.0, r(0.5, 1.0)).unwrap(), 1.0);
    }

    #[test]
    fn conditional_laplace_converges_to_the_unconditional_transform() {
        for &s in &[0.1, 1.0, 10.0] {
            let cond = conditional_laplace(s, RangeState::new(1e-8, 1.0).unwrap()).unwrap();
            let full = laplace_theta(s, 1.0).unwrap();
            assert!(
                (cond - full).abs() <= 1e-6,
                "s={s}: {cond} vs {full}"
            );
        }
    }

    #[test]
    fn conditional_laplace_is_nondecreasing_in_a() {
        for &s in &[0.3, 1.0, 5.0] {
            let mut prev = 0.0;
            for k in 1..=20 {
                let a = k as f64 / 20.0 * 1.5;
                let v = conditional_laplace(s, RangeState::new(a, 1.5).unwrap()).unwrap();
                assert!(v >= prev, "s={s}, a={a}: {v} < {prev}");
                prev = v;
            }
            assert_eq!(prev, 1.0);
        }
    }

    #[test]
    fn conditional_laplace_solves_the_first_order_ode() {
        // g(x) = f(x)/sinh(cx) satisfies g'(a) = −c/sinh(ca)·g(a); check by
        // central differences.
        let (s, l) = (0.7f64, 1.4);
        let c = (2.0 * s).sqrt();
        let g = |x: f64| conditional_laplace(s, RangeState::new(x, l).unwrap()).unwrap() / (c * x).sinh();
        let a = 0.6;
        let h = 1e-5;
        let deriv = (g(a + h) - g(a - h)) / (2.0 * h);
        let rhs = -c / (c * a).sinh() * g(a);
        assert_rel(deriv, rhs, 1e-6);
    }

    #[test]
    fn integral_equation_residual_is_at_quadrature_noise() {
        let cases = [(0.5, 0.5, 1.0), (2.0, 0.3, 0.9), (7.5, 0.2, 2.5), (0.1, 1.0, 3.0)];
        for (s, a, l) in cases {
            let r = RangeState::new(a, l).unwrap();
            let resid = integral_equation_residual(s, r, 1e-12).unwrap();
            assert!(
                resid.abs() <= 1e-10,
                "(s={s}, a={a}, L={l}): residual {resid:e}"
            );
        }
        assert!(integral_equation_residual(0.0, RangeState::new(0.5, 1.0).unwrap(), 1e-12).is_err());
    }
}
