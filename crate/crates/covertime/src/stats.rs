//! Goodness-of-fit machinery connecting simulated samples to analytic laws.
//!
//! Everything returns a [`GofReport`]: a named statistic, an optional
//! p-value (omitted where the asymptotic distribution is not the right
//! yardstick, e.g. plain moment z-scores), the sample size, and a pass flag
//! at the requested significance. The default significance is deliberately
//! conservative ([`DEFAULT_SIGNIFICANCE`] = 0.001): the verification suites
//! run many tests, and a 1-in-1000 false alarm per test keeps them quiet
//! without blinding them to real defects, which enter at far smaller
//! p-values.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::special::{gamma_q, ln_factorial};

/// Significance level used by the acceptance and verify suites.
pub const DEFAULT_SIGNIFICANCE: f64 = 0.001;

/// Outcome of one goodness-of-fit check.
#[derive(Clone, Debug, Serialize)]
pub struct GofReport {
    /// Which check produced this report.
    pub test_name: String,
    /// The test statistic (D for KS, Σ(O−E)²/E for chi-square, max |z| for
    /// moment checks).
    pub statistic: f64,
    /// Asymptotic p-value, when the statistic has one.
    pub p_value: Option<f64>,
    /// Number of samples the check consumed.
    pub n: u64,
    /// True when the check passed at the configured significance.
    pub pass: bool,
}

fn check_significance(significance: f64) -> Result<()> {
    if !(significance > 0.0 && significance < 1.0) {
        return Err(Error::domain(format!(
            "significance must lie strictly inside (0, 1), got {significance}"
        )));
    }
    Ok(())
}

/// Survival function Q(x) = P(K > x) of the Kolmogorov distribution.
///
/// The defining series is 2·Σ_{k≥1} (−1)^{k−1} e^{−2k²x²}. For small x that
/// alternating sum loses all accuracy, so below x = 1.18 the Jacobi-theta
/// transformed form 1 − (√(2π)/x)·(u + u⁹ + u²⁵) with u = e^{−π²/(8x²)} is
/// used instead; the two branches agree to ~1e-19 at the seam.
pub fn kolmogorov_sf(x: f64) -> f64 {
    if x <= 0.0 {
        return 1.0;
    }
    if x < 1.18 {
        let u = (-std::f64::consts::PI.powi(2) / (8.0 * x * x)).exp();
        let cdf = (2.0 * std::f64::consts::PI).sqrt() / x * (u + u.powi(9) + u.powi(25));
        (1.0 - cdf).clamp(0.0, 1.0)
    } else {
        let v = (-2.0 * x * x).exp();
        (2.0 * (v - v.powi(4) + v.powi(9) - v.powi(16))).clamp(0.0, 1.0)
    }
}

/// Survival function of the chi-square distribution with `df` degrees of
/// freedom, via the regularized upper incomplete gamma Q(df/2, x/2).
pub fn chi_square_sf(stat: f64, df: f64) -> Result<f64> {
    if !(df > 0.0) || !stat.is_finite() || stat < 0.0 {
        return Err(Error::domain(format!(
            "chi-square survival needs df > 0 and statistic ≥ 0, got df={df}, stat={stat}"
        )));
    }
    gamma_q(df / 2.0, stat / 2.0)
}

/// One-sample Kolmogorov–Smirnov statistic D = sup_t |F_n(t) − F(t)| for a
/// *sorted* sample against a reference CDF.
///
/// The supremum over the empirical step function is attained at a sample
/// point from one side or the other, so D = max_i max(|F(xᵢ) − i/n|,
/// |F(xᵢ) − (i+1)/n|). No minimum sample size is imposed here (the test
/// wrapper imposes one); this lets tiny hand-checkable cases run.
pub fn ks_statistic<F: Fn(f64) -> f64>(sorted: &[f64], cdf: F) -> Result<f64> {
    if sorted.is_empty() {
        return Err(Error::domain("KS statistic needs at least one sample"));
    }
    let n = sorted.len() as f64;
    let mut d = 0.0f64;
    let mut prev = f64::NEG_INFINITY;
    for (i, &x) in sorted.iter().enumerate() {
        if !x.is_finite() || x < prev {
            return Err(Error::domain(
                "KS input must be a sorted sequence of finite values",
            ));
        }
        prev = x;
        let f = cdf(x);
        if !(0.0..=1.0).contains(&f) {
            return Err(Error::domain(format!(
                "reference CDF left [0, 1]: F({x}) = {f}"
            )));
        }
        let lo = i as f64 / n;
        let hi = (i + 1) as f64 / n;
        d = d.max((f - lo).abs()).max((f - hi).abs());
    }
    Ok(d)
}

/// One-sample Kolmogorov–Smirnov test of a sorted sample against a CDF.
///
/// The p-value evaluates the asymptotic Kolmogorov survival function at
/// Stephens' small-sample-corrected argument x = D·(√n + 0.12 + 0.11/√n).
pub fn ks_test<F: Fn(f64) -> f64>(sorted: &[f64], cdf: F, significance: f64) -> Result<GofReport> {
    check_significance(significance)?;
    if sorted.len() < 10 {
        return Err(Error::domain(format!(
            "KS test needs at least 10 samples, got {}",
            sorted.len()
        )));
    }
    let d = ks_statistic(sorted, cdf)?;
    let sqrt_n = (sorted.len() as f64).sqrt();
    let p = kolmogorov_sf(d * (sqrt_n + 0.12 + 0.11 / sqrt_n));
    Ok(GofReport {
        test_name: "ks_one_sample".to_owned(),
        statistic: d,
        p_value: Some(p),
        n: sorted.len() as u64,
        pass: p >= significance,
    })
}

/// Two-sample Kolmogorov–Smirnov test on two sorted samples.
///
/// D is the largest gap between the two empirical CDFs; the p-value uses
/// the same asymptotic distribution with the effective size
/// n_e = n₁n₂/(n₁+n₂).
pub fn ks_two_sample(xs: &[f64], ys: &[f64], significance: f64) -> Result<GofReport> {
    check_significance(significance)?;
    if xs.len() < 10 || ys.len() < 10 {
        return Err(Error::domain(format!(
            "two-sample KS needs at least 10 samples per side, got {} and {}",
            xs.len(),
            ys.len()
        )));
    }
    for side in [xs, ys] {
        if side.windows(2).any(|w| w[1] < w[0]) || side.iter().any(|v| !v.is_finite()) {
            return Err(Error::domain(
                "two-sample KS input must be sorted sequences of finite values",
            ));
        }
    }
    let (n1, n2) = (xs.len(), ys.len());
    let (mut i, mut j) = (0usize, 0usize);
    let mut d = 0.0f64;
    while i < n1 && j < n2 {
        // Advance each side through every copy of the smaller value before
        // measuring, so tied values move both empirical CDFs together (a
        // sample tested against itself gives exactly D = 0).
        let (x, y) = (xs[i], ys[j]);
        if x <= y {
            while i < n1 && xs[i] == x {
                i += 1;
            }
        }
        if y <= x {
            while j < n2 && ys[j] == y {
                j += 1;
            }
        }
        d = d.max((i as f64 / n1 as f64 - j as f64 / n2 as f64).abs());
    }
    let n_eff = (n1 as f64) * (n2 as f64) / (n1 + n2) as f64;
    let sqrt_n = n_eff.sqrt();
    let p = kolmogorov_sf(d * (sqrt_n + 0.12 + 0.11 / sqrt_n));
    Ok(GofReport {
        test_name: "ks_two_sample".to_owned(),
        statistic: d,
        p_value: Some(p),
        n: (n1 + n2) as u64,
        pass: p >= significance,
    })
}

fn poisson_pmf(k: u64, lambda: f64) -> f64 {
    (-lambda + k as f64 * lambda.ln() - ln_factorial(k)).exp()
}

/// Chi-square goodness of fit of a switchback-count histogram against
/// Poisson(λ).
///
/// `counts[k]` is the observed number of chains with ν = k. Cells are
/// merged left to right until each bin's expected count reaches 5, with
/// everything past the last observed cell pooled into the tail bin (and the
/// tail folded into its neighbor if still too thin). The statistic is
/// Σ(O−E)²/E on those bins with df = bins − 1.
pub fn chi_square_poisson(counts: &[u64], lambda: f64, significance: f64) -> Result<GofReport> {
    check_significance(significance)?;
    if !lambda.is_finite() || lambda < 0.0 {
        return Err(Error::domain(format!(
            "Poisson rate must be finite and nonnegative, got {lambda}"
        )));
    }
    let total: u64 = counts.iter().sum();
    if total == 0 {
        return Err(Error::domain("all-zero histogram: nothing to test"));
    }
    if total < 100 {
        return Err(Error::domain(format!(
            "chi-square needs a total count of at least 100, got {total}"
        )));
    }
    let n = total as f64;

    if lambda == 0.0 {
        // Degenerate point mass at 0: the test is exact, not asymptotic.
        let off_zero = total - counts.first().copied().unwrap_or(0);
        let pass = off_zero == 0;
        return Ok(GofReport {
            test_name: "chi_square_poisson".to_owned(),
            statistic: if pass { 0.0 } else { f64::INFINITY },
            p_value: Some(if pass { 1.0 } else { 0.0 }),
            n: total,
            pass,
        });
    }

    // Build bins left to right; each closes once its expected mass reaches 5.
    // The final bin absorbs the entire Poisson tail beyond the histogram.
    let mut bins: Vec<(f64, f64)> = Vec::new(); // (observed, expected)
    let mut acc_obs = 0.0f64;
    let mut acc_exp = 0.0f64;
    let mut cdf = 0.0f64;
    for (k, &c) in counts.iter().enumerate() {
        let pk = poisson_pmf(k as u64, lambda);
        cdf += pk;
        acc_obs += c as f64;
        acc_exp += n * pk;
        if acc_exp >= 5.0 {
            bins.push((acc_obs, acc_exp));
            acc_obs = 0.0;
            acc_exp = 0.0;
        }
    }
    // Tail beyond the last histogram cell (observed zero there).
    acc_exp += n * (1.0 - cdf).max(0.0);
    if let Some(last) = bins.last_mut() {
        if acc_exp >= 5.0 {
            bins.push((acc_obs, acc_exp));
        } else {
            last.0 += acc_obs;
            last.1 += acc_exp;
        }
    } else {
        bins.push((acc_obs, acc_exp));
    }

    let statistic: f64 = bins
        .iter()
        .map(|&(o, e)| {
            debug_assert!(e > 0.0);
            (o - e) * (o - e) / e
        })
        .sum();
    let df = bins.len() as f64 - 1.0;
    if df < 1.0 {
        // Everything merged into one bin: no resolution left, trivially
        // consistent (O = E = total by construction).
        return Ok(GofReport {
            test_name: "chi_square_poisson".to_owned(),
            statistic: 0.0,
            p_value: Some(1.0),
            n: total,
            pass: true,
        });
    }
    let p = chi_square_sf(statistic, df)?;
    Ok(GofReport {
        test_name: "chi_square_poisson".to_owned(),
        statistic,
        p_value: Some(p),
        n: total,
        pass: p >= significance,
    })
}

/// Compare sample mean and variance against analytic values by z-score.
///
/// The mean's standard error is s/√n; the variance's uses the fourth
/// central moment, SE(s²) = √((m₄ − s⁴)/n). The report's statistic is the
/// larger |z|, and the check passes iff both are below 4 — a fixed, very
/// conservative gate, so no p-value is reported.
pub fn moment_report(samples: &[f64], analytic_mean: f64, analytic_variance: f64) -> Result<GofReport> {
    let n = samples.len();
    if n < 30 {
        return Err(Error::domain(format!(
            "moment comparison needs at least 30 samples, got {n}"
        )));
    }
    if !(analytic_variance > 0.0) {
        return Err(Error::domain(format!(
            "analytic variance must be positive, got {analytic_variance}"
        )));
    }
    let nf = n as f64;
    let mean = samples.iter().sum::<f64>() / nf;
    let var = samples.iter().map(|x| (x - mean) * (x - mean)).sum::<f64>() / (nf - 1.0);
    let m4 = samples.iter().map(|x| (x - mean).powi(4)).sum::<f64>() / nf;
    let z_mean = (mean - analytic_mean) / (var / nf).sqrt();
    let se_var = ((m4 - var * var).max(0.0) / nf).sqrt();
    let z_var = if se_var > 0.0 {
        (var - analytic_variance) / se_var
    } else {
        // Zero dispersion of the squared deviations: variance check is
        // exact-or-broken.
        if var == analytic_variance {
            0.0
        } else {
            f64::INFINITY
        }
    };
    let statistic = z_mean.abs().max(z_var.abs());
    Ok(GofReport {
        test_name: "moment_z_scores".to_owned(),
        statistic,
        p_value: None,
        n: n as u64,
        pass: statistic < 4.0,
    })
}
