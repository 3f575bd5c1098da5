//! Singleton, Hamming and Plotkin bounds for `δ_r`, the channel parameter
//! `r`, and the optimality classifier.
//!
//! For parameters `(n, K, δ)` and `r ≥ 1`:
//!
//! * Singleton: `K ≤ 2^(n - c + 1)` with `c = ⌈2δ/(r+1)⌉`;
//! * Hamming: `K ≤ 2^n / Σ_{i≤T} C(n, i)` with `T` the largest integer
//!   strictly below `δ/(r+1)`;
//! * Plotkin: with `d = ⌈2δ/(r+1)⌉` and `2d > n`, `K ≤ ⌊2d/(2d - n)⌋`.
//!
//! At `r = 1` and `δ = d_H` these are the classical bounds (the Plotkin
//! denominator is `2d_H - n`).
//!
//! All bound decisions use big-integer arithmetic. A float `r` only affects
//! how `c`, `T` and `d` are rounded.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Float, One, Signed, ToPrimitive, Zero};

use crate::code::Code;
use crate::error::{Error, Result};
use crate::metric::min_discrepancy;
use crate::scalar::{is_positive, require_r, strict_floor, Scalar};

/// Binary asymmetric channel: `p` is the 0→1 crossover probability and `q`
/// the 1→0 crossover probability.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChannelParams<F> {
    pub p: F,
    pub q: F,
}

impl<F: Float> ChannelParams<F> {
    pub fn new(p: F, q: F) -> Result<Self> {
        let half = F::from(0.5).expect("float constant");
        if p == F::zero() {
            return Err(Error::InfiniteR);
        }
        if !(p > F::zero() && p <= q && q < half) {
            return Err(Error::Parameter(
                "channel probabilities must satisfy 0 < p <= q < 1/2".into(),
            ));
        }
        Ok(ChannelParams { p, q })
    }

    /// `r = ln(p/(1-q)) / ln(q/(1-p))`.
    pub fn r(&self) -> F {
        let one = F::one();
        (self.p / (one - self.q)).ln() / (self.q / (one - self.p)).ln()
    }
}

/// `r = log_{q/(1-p)} (p/(1-q))` for `0 < p ≤ q < 1/2`.
pub fn channel_r<F: Float>(p: F, q: F) -> Result<F> {
    Ok(ChannelParams::new(p, q)?.r())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BoundKind {
    Singleton,
    Hamming,
    Plotkin,
}

impl BoundKind {
    pub const ALL: [BoundKind; 3] = [BoundKind::Singleton, BoundKind::Hamming, BoundKind::Plotkin];

    pub fn name(&self) -> &'static str {
        match self {
            BoundKind::Singleton => "singleton",
            BoundKind::Hamming => "hamming",
            BoundKind::Plotkin => "plotkin",
        }
    }
}

/// Outcome of one bound check on `K`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundStatus {
    pub kind: BoundKind,
    /// `c`, `T` or `d` depending on the bound.
    pub parameter: BigInt,
    /// False only for Plotkin with `2d ≤ n`.
    pub applicable: bool,
    /// Upper bound on `K`; `None` when not applicable.
    pub rhs: Option<BigRational>,
    /// `rhs - K`; `None` when not applicable.
    pub slack: Option<BigRational>,
    /// `K ≤ rhs`.
    pub holds: bool,
    /// `K = rhs`.
    pub meets: bool,
}

impl BoundStatus {
    fn applicable(kind: BoundKind, parameter: BigInt, k: &BigUint, rhs: BigRational) -> Self {
        let slack = &rhs - BigRational::from_integer(BigInt::from(k.clone()));
        BoundStatus {
            kind,
            parameter,
            applicable: true,
            holds: !slack.is_negative(),
            meets: slack.is_zero(),
            rhs: Some(rhs),
            slack: Some(slack),
        }
    }
}

/// Rounding convention for the Hamming radius.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum FloorConvention {
    /// Largest integer strictly below the argument.
    #[default]
    Strict,
    /// Ordinary floor.
    Standard,
}

fn check_params<S: Scalar>(n: usize, k: &BigUint, delta: &S, r: &S) -> Result<()> {
    if n == 0 {
        return Err(Error::Parameter("n must be >= 1".into()));
    }
    if *k < BigUint::from(2u32) {
        return Err(Error::Parameter("K must be >= 2".into()));
    }
    if !is_positive(delta) {
        return Err(Error::Parameter("delta must be > 0".into()));
    }
    require_r(r)
}

/// `⌈2δ/(r+1)⌉`.
fn scaled_ceiling<S: Scalar>(delta: &S, r: &S) -> BigInt {
    let two = S::from_count(2);
    (two * delta.clone() / (r.clone() + S::one())).ceil_int()
}

fn pow2(e: &BigInt) -> BigRational {
    let mag = e.abs().to_usize().expect("exponent fits in usize");
    let p = BigInt::one() << mag;
    if e.is_negative() {
        BigRational::new(BigInt::one(), p)
    } else {
        BigRational::from_integer(p)
    }
}

/// Singleton bound: `K ≤ 2^(n - c + 1)`, met iff equality (so `K` must be a
/// power of two).
pub fn singleton_check<S: Scalar>(n: usize, k: &BigUint, delta: &S, r: &S) -> Result<BoundStatus> {
    check_params(n, k, delta, r)?;
    let c = scaled_ceiling(delta, r);
    let exponent = BigInt::from(n) - &c + 1;
    let rhs = pow2(&exponent);
    Ok(BoundStatus::applicable(BoundKind::Singleton, c, k, rhs))
}

/// `Σ_{i=0}^{t} C(n, i)` for `t ≥ 0`, capped at `t = n`.
pub fn binomial_prefix_sum(n: usize, t: usize) -> BigUint {
    let t = t.min(n);
    let mut term = BigUint::one();
    let mut sum = BigUint::one();
    for i in 1..=t {
        term = term * BigUint::from(n - i + 1) / BigUint::from(i);
        sum += &term;
    }
    sum
}

/// Hamming bound with the strict floor.
pub fn hamming_check<S: Scalar>(n: usize, k: &BigUint, delta: &S, r: &S) -> Result<BoundStatus> {
    hamming_check_with(n, k, delta, r, FloorConvention::Strict)
}

/// Hamming bound with an explicit floor convention for `T`.
pub fn hamming_check_with<S: Scalar>(
    n: usize,
    k: &BigUint,
    delta: &S,
    r: &S,
    floor: FloorConvention,
) -> Result<BoundStatus> {
    check_params(n, k, delta, r)?;
    let ratio = delta.clone() / (r.clone() + S::one());
    let t = match floor {
        FloorConvention::Strict => strict_floor(&ratio),
        FloorConvention::Standard => ratio.floor_int(),
    };
    // δ > 0 keeps the strict floor at -1 or above; -1 can only come from a
    // float rounding down to an integer, and the empty sphere is clamped.
    let radius = t.to_usize().unwrap_or(0);
    let sphere = binomial_prefix_sum(n, radius);
    let rhs = BigRational::new(BigInt::from(BigUint::one() << n), BigInt::from(sphere));
    Ok(BoundStatus::applicable(BoundKind::Hamming, t, k, rhs))
}

/// Plotkin bound. Inapplicable (not an error) when `2d ≤ n`.
pub fn plotkin_check<S: Scalar>(n: usize, k: &BigUint, delta: &S, r: &S) -> Result<BoundStatus> {
    check_params(n, k, delta, r)?;
    let d = scaled_ceiling(delta, r);
    let two_d: BigInt = &d * 2;
    let n_big = BigInt::from(n);
    if two_d <= n_big {
        return Ok(BoundStatus {
            kind: BoundKind::Plotkin,
            parameter: d,
            applicable: false,
            rhs: None,
            slack: None,
            holds: true,
            meets: false,
        });
    }
    let rhs = two_d.div_floor(&(&two_d - &n_big));
    Ok(BoundStatus::applicable(
        BoundKind::Plotkin,
        d,
        k,
        BigRational::from_integer(rhs),
    ))
}

/// Runs one of the three checks.
pub fn check<S: Scalar>(
    kind: BoundKind,
    n: usize,
    k: &BigUint,
    delta: &S,
    r: &S,
) -> Result<BoundStatus> {
    match kind {
        BoundKind::Singleton => singleton_check(n, k, delta, r),
        BoundKind::Hamming => hamming_check(n, k, delta, r),
        BoundKind::Plotkin => plotkin_check(n, k, delta, r),
    }
}

/// Direct and characterized answers to "does the code reach this bound for
/// `δ_r`?".
///
/// The characterization: Singleton and Plotkin are reached for `δ_r` iff they
/// are reached for `d_H` and `δ_r > (r+1)/2·(d_H - 1)`; Hamming is reached
/// iff the code is perfect, `d_H = 2t + 1` and `δ_r > t(r+1)`.
///
/// For Plotkin the forward direction can fail when two values of `d` give the
/// same `⌊2d/(2d-n)⌋`: `{00000, 11111}` at `r = 3/2` reaches the `δ_r` bound
/// directly but misses the threshold. `agree` records such cases.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundVerdict<S> {
    pub kind: BoundKind,
    /// The bound evaluated at `(d_H, r = 1)`.
    pub status_dh: BoundStatus,
    /// The bound evaluated at `(δ_r, r)`.
    pub status_delta_r: BoundStatus,
    pub reaches_for_dh: bool,
    /// Direct equality for `δ_r`.
    pub reaches_for_delta_r: bool,
    /// Right-hand side of the `δ_r` threshold: `(r+1)/2·(d_H-1)` or `t(r+1)`.
    pub threshold: S,
    /// `δ_r > threshold`.
    pub threshold_met: bool,
    /// Hamming only: whether `d_H` is odd.
    pub odd_distance: Option<bool>,
    /// The characterization's answer.
    pub characterized: bool,
    pub agree: bool,
    /// `(d_H+1)/(d_H-1)` or `(t+1)/t`; `None` when the denominator is zero.
    pub r_threshold: Option<S>,
    /// `r < r_threshold`.
    pub r_below_threshold: Option<bool>,
}

/// Full optimality report for a code at one `r`.
#[derive(Debug, Clone, PartialEq)]
pub struct OptimalityReport<S> {
    pub n: usize,
    pub k: usize,
    pub d_h: usize,
    pub r: S,
    pub delta_r: S,
    pub singleton: BoundVerdict<S>,
    pub hamming: BoundVerdict<S>,
    pub plotkin: BoundVerdict<S>,
}

impl<S> OptimalityReport<S> {
    pub fn verdict(&self, kind: BoundKind) -> &BoundVerdict<S> {
        match kind {
            BoundKind::Singleton => &self.singleton,
            BoundKind::Hamming => &self.hamming,
            BoundKind::Plotkin => &self.plotkin,
        }
    }

    pub fn all_agree(&self) -> bool {
        self.singleton.agree && self.hamming.agree && self.plotkin.agree
    }
}

/// Classifies `code` against all three bounds at `r`.
pub fn classify_optimality<S: Scalar>(code: &Code, r: &S) -> Result<OptimalityReport<S>> {
    require_r(r)?;
    code.require_pairs()?;
    let d_h = code.profile()?.min_hamming().0;
    let delta_r = min_discrepancy(code, r)?.value;
    classify_parameters(code.n(), code.len(), d_h, delta_r, r)
}

/// Classification from precomputed `(n, K, d_H, δ_r)`.
pub fn classify_parameters<S: Scalar>(
    n: usize,
    k: usize,
    d_h: usize,
    delta_r: S,
    r: &S,
) -> Result<OptimalityReport<S>> {
    let kk = BigUint::from(k);
    let dh_s = S::from_count(d_h as u64);
    let one = S::one();
    let r_plus_1 = r.clone() + one.clone();

    let verdict = |kind: BoundKind| -> Result<BoundVerdict<S>> {
        let status_dh = check(kind, n, &kk, &dh_s, &one)?;
        let status_delta_r = check(kind, n, &kk, &delta_r, r)?;
        let reaches_for_dh = status_dh.meets;
        let reaches_for_delta_r = status_delta_r.meets;
        let (threshold, odd_distance, r_threshold) = match kind {
            BoundKind::Singleton | BoundKind::Plotkin => {
                let dm1 = S::from_count(d_h as u64 - 1);
                let thr = r_plus_1.clone() / S::from_count(2) * dm1.clone();
                let rt = (d_h > 1).then(|| S::from_count(d_h as u64 + 1) / dm1);
                (thr, None, rt)
            }
            BoundKind::Hamming => {
                let t = (d_h as u64 - 1) / 2;
                let thr = S::from_count(t) * r_plus_1.clone();
                let rt = (t > 0).then(|| S::from_count(t + 1) / S::from_count(t));
                (thr, Some(d_h % 2 == 1), rt)
            }
        };
        let threshold_met = delta_r > threshold;
        let characterized = reaches_for_dh && threshold_met && odd_distance.unwrap_or(true);
        let r_below_threshold = r_threshold.as_ref().map(|rt| r < rt);
        Ok(BoundVerdict {
            kind,
            status_dh,
            status_delta_r,
            reaches_for_dh,
            reaches_for_delta_r,
            threshold,
            threshold_met,
            odd_distance,
            characterized,
            agree: characterized == reaches_for_delta_r,
            r_threshold,
            r_below_threshold,
        })
    };

    Ok(OptimalityReport {
        n,
        k,
        d_h,
        r: r.clone(),
        delta_r: delta_r.clone(),
        singleton: verdict(BoundKind::Singleton)?,
        hamming: verdict(BoundKind::Hamming)?,
        plotkin: verdict(BoundKind::Plotkin)?,
    })
}
