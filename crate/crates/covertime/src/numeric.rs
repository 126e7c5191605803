//! Small numeric kernels shared across the crate: compensated summation,
//! adaptive Gauss–Legendre quadrature, and a bracketed root finder.
//!
//! The quadrature routine exists as an *independent oracle*: acceptance
//! checks integrate the series density numerically and compare against the
//! closed-form transform, so this module deliberately shares no code with
//! the series evaluators it is used to audit.

use crate::{Error, Result};

/// Kahan–Babuška compensated accumulator.
///
/// Alternating series with large cancelling terms (the density series, the
/// Kolmogorov tail sum) lose up to all their leading digits in a naive
/// accumulation; carrying the running rounding error keeps the final sum
/// within a few ulps of the scale of the *largest* term instead.
#[derive(Clone, Copy, Debug, Default)]
pub struct KahanSum {
    sum: f64,
    err: f64,
}

impl KahanSum {
    /// Fresh accumulator at zero.
    pub fn new() -> Self {
        Self::default()
    }

    /// Current compensated total.
    pub fn total(&self) -> f64 {
        self.sum
    }
}

impl std::ops::AddAssign<f64> for KahanSum {
    fn add_assign(&mut self, rhs: f64) {
        let y = rhs - self.err;
        let t = self.sum + y;
        self.err = (t - self.sum) - y;
        self.sum = t;
    }
}

/// Abscissae of the 10-point Gauss–Legendre rule on [-1, 1] (positive half;
/// the rule is symmetric).
const GL10_X: [f64; 5] = [
    0.148_874_338_981_631_21,
    0.433_395_394_129_247_2,
    0.679_409_568_299_024_4,
    0.865_063_366_688_984_5,
    0.973_906_528_517_171_7,
];

/// Weights paired with [`GL10_X`].
const GL10_W: [f64; 5] = [
    0.295_524_224_714_752_87,
    0.269_266_719_309_996_36,
    0.219_086_362_515_982_04,
    0.149_451_349_150_580_59,
    0.066_671_344_308_688_14,
];

/// One 10-point Gauss–Legendre panel over [a, b].
fn gl10<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> f64 {
    let half = 0.5 * (b - a);
    let mid = 0.5 * (a + b);
    let mut acc = 0.0;
    for i in 0..5 {
        let dx = half * GL10_X[i];
        acc += GL10_W[i] * (f(mid - dx) + f(mid + dx));
    }
    acc * half
}

/// Maximum bisection depth before the integrator gives up.
const MAX_DEPTH: u32 = 48;

fn adaptive<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    whole: f64,
    abs_tol: f64,
    depth: u32,
) -> Result<f64> {
    let mid = 0.5 * (a + b);
    let left = gl10(f, a, mid);
    let right = gl10(f, mid, b);
    let refined = left + right;
    if !refined.is_finite() {
        return Err(Error::accuracy(format!(
            "quadrature produced a non-finite panel value on [{a}, {b}]"
        )));
    }
    let disagreement = (refined - whole).abs();
    if disagreement <= abs_tol {
        return Ok(refined);
    }
    if depth >= MAX_DEPTH {
        return Err(Error::accuracy(format!(
            "quadrature failed to converge on [{a}, {b}]: estimate gap {disagreement:.3e} > {abs_tol:.3e}"
        )));
    }
    let half_tol = 0.5 * abs_tol;
    Ok(adaptive(f, a, mid, left, half_tol, depth + 1)?
        + adaptive(f, mid, b, right, half_tol, depth + 1)?)
}

/// Adaptive quadrature of `f` over the finite interval [a, b] to absolute
/// tolerance `abs_tol`.
///
/// Bisects 10-point Gauss–Legendre panels until the refined estimate of each
/// panel agrees with its parent within the panel's tolerance share. On the
/// smooth integrands this crate audits (exponentials, hyperbolic ratios,
/// erfc compositions) the rule converges at machine speed; non-convergence
/// within the depth cap reports an accuracy error rather than a wrong value.
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, abs_tol: f64) -> Result<f64> {
    if !(a.is_finite() && b.is_finite()) || a >= b {
        return Err(Error::domain(format!(
            "integration interval [{a}, {b}] must be finite and ordered"
        )));
    }
    if !(abs_tol > 0.0) {
        return Err(Error::domain("quadrature tolerance must be positive"));
    }
    let whole = gl10(&f, a, b);
    adaptive(&f, a, b, whole, abs_tol, 0)
}

/// Solve `f(x) = 0` for continuous nondecreasing `f` on a bracket with
/// `f(lo) ≤ 0 ≤ f(hi)`, to residual tolerance `|f(x)| ≤ f_tol`.
///
/// Uses false position with the Illinois modification: when the same
/// endpoint is replaced twice in a row, the stale endpoint's residual is
/// halved, which prevents the one-sided stagnation plain false position
/// suffers on convex functions. Every fourth step forces a bisection, so
/// the bracket provably shrinks to rounding width within the iteration
/// budget regardless of the function's shape.
pub fn solve_monotone<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64, f_tol: f64) -> Result<f64> {
    let (mut lo, mut hi) = (lo, hi);
    let (mut flo, mut fhi) = (f(lo), f(hi));
    if flo > 0.0 || fhi < 0.0 {
        return Err(Error::domain(format!(
            "root not bracketed: f({lo}) = {flo:.3e}, f({hi}) = {fhi:.3e}"
        )));
    }
    if flo.abs() <= f_tol {
        return Ok(lo);
    }
    if fhi.abs() <= f_tol {
        return Ok(hi);
    }
    // Illinois bookkeeping: which side the last replacement landed on.
    let mut last_side = 0i8;
    for iter in 0..200 {
        let mut x = (lo * fhi - hi * flo) / (fhi - flo);
        if iter % 4 == 3 || !x.is_finite() || x <= lo || x >= hi {
            x = 0.5 * (lo + hi);
        }
        let fx = f(x);
        if fx.abs() <= f_tol {
            return Ok(x);
        }
        if fx < 0.0 {
            lo = x;
            flo = fx;
            if last_side < 0 {
                fhi *= 0.5;
            }
            last_side = -1;
        } else {
            hi = x;
            fhi = fx;
            if last_side > 0 {
                flo *= 0.5;
            }
            last_side = 1;
        }
        if hi - lo <= f64::EPSILON * lo.abs().max(hi.abs()) {
            // Bracket exhausted in floating precision: the root is located
            // as precisely as f64 allows even though the residual tolerance
            // was not reachable. Return the endpoint with smaller residual.
            return Ok(if flo.abs() <= fhi.abs() { lo } else { hi });
        }
    }
    Err(Error::accuracy(format!(
        "root refinement stalled on [{lo}, {hi}] with residuals [{flo:.3e}, {fhi:.3e}]"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_close(actual: f64, expected: f64, tol: f64) {
        assert!(
            (actual - expected).abs() <= tol,
            "actual {actual:.17e} vs expected {expected:.17e} (tol {tol:.1e})"
        );
    }

    #[test]
    fn kahan_recovers_digits_naive_summation_loses() {
        // 1 + 1e-16 added 10^7 times: naive f64 drops every tiny increment.
        let mut kahan = KahanSum::new();
        let mut naive = 0.0f64;
        kahan += 1.0;
        naive += 1.0;
        for _ in 0..10_000_000 {
            kahan += 1e-16;
            naive += 1e-16;
        }
        let exact = 1.0 + 1e-9;
        assert_close(kahan.total(), exact, 1e-15);
        assert!((naive - exact).abs() > 1e-10, "naive {naive} unexpectedly accurate");
    }

    #[test]
    fn integrates_polynomial_exactly() {
        // Degree 7 is far inside the 10-point rule's exactness degree (19).
        let v = integrate(|x| 7.0 * x.powi(6), 0.0, 2.0, 1e-13).unwrap();
        assert_close(v, 128.0, 1e-10);
    }

    #[test]
    fn integrates_sine_over_half_period() {
        let v = integrate(f64::sin, 0.0, std::f64::consts::PI, 1e-12).unwrap();
        assert_close(v, 2.0, 1e-12);
    }

    #[test]
    fn integrates_sharp_gaussian() {
        // erf(6·√2)·√(π/2)·... : essentially the full Gaussian mass.
        let v = integrate(|x| (-0.5 * x * x).exp(), -8.0, 8.0, 1e-13).unwrap();
        assert_close(v, (2.0 * std::f64::consts::PI).sqrt(), 1e-12);
    }

    #[test]
    fn rejects_bad_interval() {
        assert!(matches!(integrate(|x| x, 1.0, 1.0, 1e-10), Err(Error::Domain(_))));
        assert!(matches!(
            integrate(|x| x, 0.0, f64::INFINITY, 1e-10),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn root_finder_hits_sqrt_two() {
        let r = solve_monotone(|x| x * x - 2.0, 0.0, 2.0, 1e-14).unwrap();
        assert_close(r, std::f64::consts::SQRT_2, 1e-13);
    }

    #[test]
    fn root_finder_requires_bracket() {
        assert!(matches!(
            solve_monotone(|x| x * x - 2.0, 2.0, 3.0, 1e-14),
            Err(Error::Domain(_))
        ));
    }
}
