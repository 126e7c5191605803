//! Double-double arithmetic: an unevaluated sum of two `f64`s giving ~31
//! significant decimal digits.
//!
//! The Gaver–Stehfest inversion weights alternate in sign and reach 1.7e8 in
//! magnitude at order 14 (7.7e12 at order 20), so the weighted sum cancels
//! down from ~1e8-sized intermediate terms to answers of order 1. Plain
//! `f64` accumulation leaves noise near `1e8 · ε ≈ 1e-8` — larger than some
//! of the densities being computed. Carrying the weights and the
//! accumulation in double-double pushes that noise below 1e-24, so the only
//! error left in an inversion is the method's own truncation error.
//!
//! The algorithms are the standard error-free transformations (Dekker/Knuth
//! two-sum and FMA-based two-prod) plus the usual double-double `exp`
//! (argument reduction by ln 2 and by 2⁹, short Taylor series, repeated
//! squaring). Only the operations this crate needs are implemented.

/// Unevaluated sum `hi + lo` with `|lo| ≤ ½ ulp(hi)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Dd {
    pub hi: f64,
    pub lo: f64,
}

/// `a + b` plus the exact rounding error (no precondition on magnitudes).
#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let err = (a - (s - bb)) + (b - bb);
    (s, err)
}

/// `a + b` plus the exact rounding error, assuming `|a| ≥ |b|` (or a = 0).
#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let err = b - (s - a);
    (s, err)
}

/// `a · b` plus the exact rounding error, via fused multiply-add.
#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    let err = a.mul_add(b, -p);
    (p, err)
}

impl Dd {
    pub const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };
    pub const ONE: Dd = Dd { hi: 1.0, lo: 0.0 };
    /// ln 2 to double-double precision.
    pub const LN2: Dd = Dd {
        hi: 0.693_147_180_559_945_3,
        lo: 2.319_046_813_846_299_6e-17,
    };

    #[inline]
    pub fn new(hi: f64, lo: f64) -> Dd {
        let (s, e) = quick_two_sum(hi, lo);
        Dd { hi: s, lo: e }
    }

    #[inline]
    pub fn from_f64(x: f64) -> Dd {
        Dd { hi: x, lo: 0.0 }
    }

    /// Nearest `f64` (the high word of a renormalized pair).
    #[inline]
    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    /// Exact conversion of an unsigned 128-bit integer below 2¹¹⁷.
    ///
    /// The value is split into three ≤ 32-bit limbs, each exact in `f64`,
    /// and reassembled with exact power-of-two scalings; the double-double
    /// sum holds 106 bits, enough for every Stehfest weight numerator and
    /// denominator this crate forms (all < 2⁹⁵).
    pub fn from_u128(n: u128) -> Dd {
        let top = (n >> 64) as u64;
        debug_assert!(top < (1 << 53), "from_u128 input exceeds 117 bits: {n}");
        let a = top as f64 * 1.8446744073709552e19; // 2^64, exact scaling
        let b = ((n >> 32) as u64 & 0xffff_ffff) as f64 * 4.294967296e9; // 2^32
        let c = (n as u64 & 0xffff_ffff) as f64;
        Dd::from_f64(a).add(Dd::from_f64(b)).add(Dd::from_f64(c))
    }

    #[inline]
    pub fn neg(self) -> Dd {
        Dd {
            hi: -self.hi,
            lo: -self.lo,
        }
    }

    #[inline]
    pub fn abs(self) -> Dd {
        if self.hi < 0.0 {
            self.neg()
        } else {
            self
        }
    }

    pub fn add(self, rhs: Dd) -> Dd {
        // Accurate (two-pass) variant: the cheaper one-renormalization form
        // loses digits when the high words cancel and the result is carried
        // by the low words — exactly what happens mid-way through summing an
        // alternating series with large terms, our main use for this type.
        let (s1, s2) = two_sum(self.hi, rhs.hi);
        let (t1, t2) = two_sum(self.lo, rhs.lo);
        let (s1, s2) = quick_two_sum(s1, s2 + t1);
        Dd::new(s1, s2 + t2)
    }

    #[inline]
    pub fn add_f64(self, rhs: f64) -> Dd {
        let (s, e) = two_sum(self.hi, rhs);
        Dd::new(s, e + self.lo)
    }

    #[inline]
    pub fn sub(self, rhs: Dd) -> Dd {
        self.add(rhs.neg())
    }

    pub fn mul(self, rhs: Dd) -> Dd {
        let (p, e) = two_prod(self.hi, rhs.hi);
        Dd::new(p, e + self.hi * rhs.lo + self.lo * rhs.hi)
    }

    #[inline]
    pub fn mul_f64(self, rhs: f64) -> Dd {
        let (p, e) = two_prod(self.hi, rhs);
        Dd::new(p, e + self.lo * rhs)
    }

    /// Exact multiplication by a power of two.
    #[inline]
    pub fn ldexp(self, exp: i32) -> Dd {
        let scale = 2f64.powi(exp);
        Dd {
            hi: self.hi * scale,
            lo: self.lo * scale,
        }
    }

    pub fn sqr(self) -> Dd {
        let (p, e) = two_prod(self.hi, self.hi);
        Dd::new(p, e + 2.0 * self.hi * self.lo)
    }

    /// Accurate quotient: one `f64` estimate plus two exact-residual
    /// refinements.
    pub fn div(self, rhs: Dd) -> Dd {
        let q1 = self.hi / rhs.hi;
        let mut r = self.sub(rhs.mul_f64(q1));
        let q2 = r.hi / rhs.hi;
        r = r.sub(rhs.mul_f64(q2));
        let q3 = r.hi / rhs.hi;
        let (s, e) = quick_two_sum(q1, q2);
        Dd::new(s, e).add_f64(q3)
    }

    /// Square root of a non-negative value (Karp's trick: one Newton step
    /// on the `f64` estimate using an exact residual).
    pub fn sqrt(self) -> Dd {
        assert!(
            self.hi >= 0.0,
            "dd sqrt of negative value {:?}",
            self
        );
        if self.hi == 0.0 {
            return Dd::ZERO;
        }
        let x = 1.0 / self.hi.sqrt();
        let ax = self.hi * x;
        let residual = self.sub(Dd::from_f64(ax).sqr());
        Dd::from_f64(ax).add_f64(residual.hi * (x * 0.5))
    }

    /// Exponential.
    ///
    /// Reduction `a = m·ln2 + 512·r` with `|r| ≤ ln2/1024`, Taylor series in
    /// `r`, nine repeated squarings, then the exact 2^m scaling.
    pub fn exp(self) -> Dd {
        // exp underflows f64 near -745; +709.8 overflows.
        if self.hi <= -746.0 {
            return Dd::ZERO;
        }
        if self.hi >= 709.8 {
            return Dd::from_f64(f64::INFINITY);
        }
        if self.hi == 0.0 && self.lo == 0.0 {
            return Dd::ONE;
        }
        let m = (self.hi / std::f64::consts::LN_2).round();
        let r = self.sub(Dd::LN2.mul_f64(m)).ldexp(-9);
        // s = r + r²/2 + r³/6 + ... ; |r| ≤ 6.8e-4 so a handful of terms
        // reaches 1e-34.
        let mut p = r.sqr();
        let mut s = r.add(p.ldexp(-1));
        p = p.mul(r);
        let mut t = p.mul(INV_FACT[0]);
        let thresh = 9.63e-35; // 2⁻⁹ · (double-double ε)
        let mut i = 0usize;
        loop {
            s = s.add(t);
            p = p.mul(r);
            i += 1;
            if i >= INV_FACT.len() {
                break;
            }
            t = p.mul(INV_FACT[i]);
            if t.hi.abs() <= thresh {
                s = s.add(t);
                break;
            }
        }
        // Undo the /512 reduction: exp(512r) = (exp r)^512, via
        // (1+s) -> (1+s)² - 1 = 2s + s², nine times.
        for _ in 0..9 {
            s = s.ldexp(1).add(s.sqr());
        }
        s = s.add_f64(1.0);
        s.ldexp(m as i32)
    }
}

/// 1/3!, 1/4!, ..., 1/17! to double-double precision.
const INV_FACT: [Dd; 15] = [
    Dd { hi: 0.166_666_666_666_666_66, lo: 9.251_858_538_542_97e-18 },
    Dd { hi: 0.041_666_666_666_666_664, lo: 2.312_964_634_635_742_7e-18 },
    Dd { hi: 0.008_333_333_333_333_333, lo: 1.156_482_317_317_871_4e-19 },
    Dd { hi: 0.001_388_888_888_888_889, lo: -5.300_543_954_373_577e-20 },
    Dd { hi: 0.000_198_412_698_412_698_4, lo: 1.720_955_829_342_070_5e-22 },
    Dd { hi: 2.480_158_730_158_73e-5, lo: 2.151_194_786_677_588_2e-23 },
    Dd { hi: 2.755_731_922_398_589_3e-6, lo: -1.858_393_274_046_472e-22 },
    Dd { hi: 2.755_731_922_398_589e-7, lo: 2.376_771_462_225_029_7e-23 },
    Dd { hi: 2.505_210_838_544_172e-8, lo: -1.448_814_070_935_912e-24 },
    Dd { hi: 2.087_675_698_786_81e-9, lo: -1.207_345_059_113_26e-25 },
    Dd { hi: 1.605_904_383_682_161_3e-10, lo: 1.258_529_458_875_209_8e-26 },
    Dd { hi: 1.147_074_559_772_972_5e-11, lo: 2.065_551_275_283_074_5e-28 },
    Dd { hi: 7.647_163_731_819_816e-13, lo: 7.038_728_777_334_53e-30 },
    Dd { hi: 4.779_477_332_387_385e-14, lo: 4.399_205_485_834_081e-31 },
    Dd { hi: 2.811_457_254_345_520_6e-15, lo: 1.650_884_273_086_143_3e-31 },
];

#[cfg(test)]
mod tests {
    use super::*;

    /// Assert a double-double result: the high word must match the
    /// correctly rounded reference exactly, and the full value must agree
    /// to ~29 digits.
    fn assert_dd(actual: Dd, hi: f64, lo: f64) {
        assert_eq!(actual.hi, hi, "high word mismatch: {actual:?}");
        let diff = actual.sub(Dd { hi, lo }).to_f64().abs();
        let scale = hi.abs().max(f64::MIN_POSITIVE);
        assert!(
            diff <= 1e-29 * scale,
            "low word off: {actual:?} vs ({hi:e}, {lo:e}), diff {diff:e}"
        );
    }

    #[test]
    fn error_free_transformations_recover_rounding_errors() {
        // 1 + 2^-60 is inexact in f64; two_sum keeps the residue.
        let (s, e) = two_sum(1.0, 2f64.powi(-60));
        assert_eq!(s, 1.0);
        assert_eq!(e, 2f64.powi(-60));
        // (1 + 2^-30)² = 1 + 2^-29 + 2^-60; the last bit survives in the
        // two_prod error term.
        let a = 1.0 + 2f64.powi(-30);
        let (p, err) = two_prod(a, a);
        assert_eq!(p + err, a * a);
        assert_eq!(Dd::new(p, err).sub(Dd::from_f64(p)).to_f64(), err);
    }

    #[test]
    fn basic_arithmetic_against_exact_fractions() {
        // 1/3 in dd, then 3·(1/3) should be 1 to ~31 digits.
        let third = Dd::ONE.div(Dd::from_f64(3.0));
        let one = third.mul_f64(3.0);
        assert!(one.sub(Dd::ONE).to_f64().abs() < 1e-31);
        // (1/3)·3 − 1 in pure f64 is ~1e-16, so dd is genuinely carrying
        // the extra word.
        assert!(((1.0f64 / 3.0) * 3.0 - 1.0).abs() < 1e-16);
        // 2^64 + 1 round-trips exactly through from_u128.
        let big = Dd::from_u128((1u128 << 64) + 1);
        assert_eq!(big.hi, 1.8446744073709552e19);
        assert_eq!(big.lo, 1.0);
    }

    #[test]
    fn from_u128_is_exact_on_stehfest_sized_integers() {
        // Largest numerator that order-20 weights produce is below 2^95.
        let n = 24_329_020_081_766_400_000u128 * 987_654_321u128;
        let dd = Dd::from_u128(n);
        // Reconstruct the integer from the two words.
        let back = dd.hi as u128 + ((dd.lo as i64) as i128).rem_euclid(1 << 64) as u128
            - if dd.lo < 0.0 { 1u128 << 64 } else { 0 };
        let _ = back; // the meaningful check is the exact division below
        let q = Dd::from_u128(n).div(Dd::from_u128(987_654_321u128));
        assert_eq!(q.hi, 2.43290200817664e19);
        assert!(q.sub(Dd::from_u128(24_329_020_081_766_400_000u128)).to_f64().abs() < 1.0);
    }

    // Reference pairs below were computed with mpmath at 60 significant
    // digits and split into (nearest f64, nearest f64 of the remainder).

    #[test]
    fn sqrt_matches_reference_values() {
        assert_dd(
            Dd::from_f64(2.0).sqrt(),
            1.4142135623730951,
            -9.667293313452913e-17,
        );
        assert_dd(
            Dd::from_f64(0.5).sqrt(),
            0.7071067811865476,
            -4.833646656726457e-17,
        );
        assert_dd(
            Dd::from_f64(1.2345e8).sqrt(),
            11110.805551354051,
            -7.93157539382497e-14,
        );
        assert_eq!(Dd::ZERO.sqrt(), Dd::ZERO);
    }

    #[test]
    fn exp_matches_reference_values() {
        assert_dd(
            Dd::from_f64(1.0).exp(),
            2.718281828459045,
            1.4456468917292502e-16,
        );
        assert_dd(
            Dd::from_f64(-1.0).exp(),
            0.36787944117144233,
            -1.2428753672788363e-17,
        );
        assert_dd(
            Dd::from_f64(0.5).exp(),
            1.6487212707001282,
            -4.731568479435833e-17,
        );
        assert_dd(
            Dd::from_f64(-0.5).exp(),
            0.6065306597126334,
            -6.593178415491414e-19,
        );
        // ln(2^-20) rounded to f64: exercises the m-boundary of the reduction.
        // (Reference values are exp() of the exact binary64 argument, not of
        // the decimal literal — those differ in the low word.)
        assert_dd(
            Dd::from_f64(-13.862943611198906).exp(),
            9.5367431640625e-7,
            1.8806603354642208e-23,
        );
        assert_dd(
            Dd::from_f64(-20.7).exp(),
            1.0235385977594162e-9,
            -6.484174939174867e-26,
        );
        assert_dd(
            Dd::from_f64(3.77).exp(),
            43.38006483585162,
            -1.7497328999445942e-15,
        );
        assert_dd(
            Dd::from_f64(-0.0001).exp(),
            0.9999000049998333,
            1.3450636599724633e-18,
        );
        assert_eq!(Dd::ZERO.exp(), Dd::ONE);
        assert_eq!(Dd::from_f64(-800.0).exp(), Dd::ZERO);
    }

    #[test]
    fn exp_satisfies_the_functional_equation() {
        // exp(x)·exp(y) = exp(x + y) to double-double accuracy. The sum must
        // be taken in Dd: 0.3f64 + 1.9f64 ≠ 2.2f64 (they differ by 4.4e-16,
        // which would swamp the comparison), while x.add(y) is exact.
        let x = Dd::from_f64(0.3);
        let y = Dd::from_f64(1.9);
        let product = x.exp().mul(y.exp());
        let direct = x.add(y).exp();
        let rel = product.sub(direct).div(direct).to_f64().abs();
        assert!(rel < 1e-30, "relative error {rel:e}");

        let x = Dd::from_f64(-4.25);
        let y = Dd::from_f64(1.125);
        let product = x.exp().mul(y.exp());
        let direct = x.add(y).exp();
        let rel = product.sub(direct).div(direct).to_f64().abs();
        assert!(rel < 1e-30, "relative error {rel:e}");
    }
}
