//! Validated argument types shared by the analytic evaluations.

use crate::{Error, Result};

/// A Laplace-transform argument `s ≥ 0` together with the rate `c = √(2s)`
/// that every sinh/cosh formula in this module is written in.
///
/// Constructing the query is the single validation point for `s`; the `c`
/// derivation lives here so call sites cannot disagree about it.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TransformQuery {
    /// Laplace argument, in 1/time units.
    pub s: f64,
    /// Derived rate `c = √(2s)`, in 1/length units.
    pub c: f64,
}

impl TransformQuery {
    pub fn new(s: f64) -> Result<Self> {
        if !s.is_finite() || s < 0.0 {
            return Err(Error::domain(format!(
                "Laplace argument must be finite and nonnegative, got s={s}"
            )));
        }
        Ok(TransformQuery { s, c: (2.0 * s).sqrt() })
    }

    /// True for the `s = 0` query, whose transforms are defined by limits.
    #[inline]
    pub fn is_zero(&self) -> bool {
        self.s == 0.0
    }
}

/// The pair (current range length `a`, target range length `L`) — the state
/// variable of both the conditional-transform recursion and the switchback
/// chain. Invariant: `0 < a ≤ L`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RangeState {
    /// Current range length.
    pub a: f64,
    /// Target range length.
    pub l: f64,
}

impl RangeState {
    pub fn new(a: f64, l: f64) -> Result<Self> {
        if !a.is_finite() || !l.is_finite() || a <= 0.0 || l <= 0.0 || a > l {
            return Err(Error::domain(format!(
                "range state requires 0 < a <= L with both finite, got a={a}, L={l}"
            )));
        }
        Ok(RangeState { a, l })
    }
}

/// Truncation policy for the alternating series (density and CDF).
///
/// Terms are summed with compensated (Kahan) addition and truncated at the
/// first index `n` past the term-magnitude peak (`(n+1)² > t`) whose term
/// is below `rel_tol·|partial sum| + abs_tol`. `max_terms` caps the loop;
/// hitting the cap is reported as an accuracy error rather than returning
/// a silently unconverged value.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SeriesControl {
    pub rel_tol: f64,
    pub abs_tol: f64,
    pub max_terms: usize,
}

impl Default for SeriesControl {
    fn default() -> Self {
        // abs_tol sits an order of magnitude above the ~3e-16 compensation
        // noise a heavily cancelling partial sum can carry, so the
        // negative-residue clamp never misfires on rounding alone.
        SeriesControl { rel_tol: 1e-12, abs_tol: 1e-15, max_terms: 1000 }
    }
}

impl SeriesControl {
    pub fn validate(&self) -> Result<()> {
        if !(self.rel_tol > 0.0) || !(self.abs_tol >= 0.0) || self.max_terms < 1 {
            return Err(Error::domain(format!(
                "series control requires rel_tol > 0, abs_tol >= 0, max_terms >= 1, got {self:?}"
            )));
        }
        Ok(())
    }
}

/// One evaluated point of a cover-time density.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DensityPoint {
    /// Time at which the density was evaluated.
    pub t: f64,
    /// Density value, in 1/time units.
    pub value: f64,
}

/// Argument of the switchback-count generating function: the PGF variable
/// `t` and the Poisson rate `λ = log(L/a)`.
///
/// The PGF variable is unrelated to the time variable of [`DensityPoint`];
/// keeping it in its own type is what prevents the two `t`s from mixing.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PgfQuery {
    /// PGF argument (dimensionless; 0 ≤ t ≤ 1 for probabilistic use, any
    /// real t evaluates).
    pub t: f64,
    /// Poisson rate `log(L/a) ≥ 0`.
    pub lambda: f64,
}

impl PgfQuery {
    /// Query for the switchback count of a range growing from `r.a` to `r.l`.
    pub fn new(t: f64, r: RangeState) -> Result<Self> {
        if !t.is_finite() {
            return Err(Error::domain(format!("PGF argument must be finite, got t={t}")));
        }
        Ok(PgfQuery { t, lambda: (r.l / r.a).ln() })
    }

    /// Query at an explicit Poisson rate.
    pub fn from_rate(t: f64, lambda: f64) -> Result<Self> {
        if !t.is_finite() || !lambda.is_finite() || lambda < 0.0 {
            return Err(Error::domain(format!(
                "PGF query requires finite t and lambda >= 0, got t={t}, lambda={lambda}"
            )));
        }
        Ok(PgfQuery { t, lambda })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn transform_query_derives_the_rate() {
        let q = TransformQuery::new(0.5).unwrap();
        assert_eq!(q.c, 1.0);
        assert!(TransformQuery::new(0.0).unwrap().is_zero());
        assert!(TransformQuery::new(-1.0).is_err());
        assert!(TransformQuery::new(f64::NAN).is_err());
        assert!(TransformQuery::new(f64::INFINITY).is_err());
    }

    #[test]
    fn range_state_enforces_ordering() {
        assert!(RangeState::new(0.5, 1.0).is_ok());
        assert!(RangeState::new(1.0, 1.0).is_ok());
        assert!(RangeState::new(1.5, 1.0).is_err());
        assert!(RangeState::new(0.0, 1.0).is_err());
        assert!(RangeState::new(-0.1, 1.0).is_err());
        assert!(RangeState::new(0.5, f64::NAN).is_err());
    }

    #[test]
    fn series_control_default_is_valid() {
        SeriesControl::default().validate().unwrap();
        let bad = SeriesControl { rel_tol: 0.0, ..SeriesControl::default() };
        assert!(bad.validate().is_err());
        let bad = SeriesControl { max_terms: 0, ..SeriesControl::default() };
        assert!(bad.validate().is_err());
    }

    #[test]
    fn pgf_query_takes_rate_from_range_state() {
        let r = RangeState::new(0.5, 1.0).unwrap();
        let q = PgfQuery::new(0.3, r).unwrap();
        assert!((q.lambda - std::f64::consts::LN_2).abs() < 1e-16);
        assert!(PgfQuery::from_rate(0.3, -0.1).is_err());
        assert_eq!(PgfQuery::from_rate(2.0, 0.0).unwrap().lambda, 0.0);
    }
}
