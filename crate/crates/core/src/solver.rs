//! Minimal gate-set sizes, depth amplification and the Clifford comparison.

use num_bigint::BigUint;
use num_rational::BigRational;
#[allow(unused_imports)] // inherent float methods shadow these when std is linked
use num_traits::Float;
use num_traits::{One, ToPrimitive};

use crate::bounds::{master_rate, BoundContext, Method};
use crate::error::{Error, Result};
use crate::rep::sum_of_dimensions;
use crate::specfun::ln_biguint;

/// Largest size tried by [`min_size_search`].
pub const SEARCH_LIMIT: u64 = 1 << 40;

/// Smallest size meeting a target, with the bound on either side of the crossing.
#[derive(Debug, Clone, PartialEq)]
pub struct MinSizeResult {
    pub size: u64,
    pub method: Method,
    /// Log of the raw total bound at `size`.
    pub log_bound: f64,
    /// Log of the raw total bound one step below `size`, if that size exists.
    pub log_bound_below: Option<f64>,
    pub d: usize,
    pub t: u32,
    pub delta: f64,
    pub prob: f64,
}

impl MinSizeResult {
    /// Size in units of the search step: pairs for symmetric methods.
    pub fn reported(&self) -> u64 {
        if self.method.is_symmetric() {
            self.size / 2
        } else {
            self.size
        }
    }
}

fn check_target(delta: f64, prob: f64) -> Result<()> {
    if !(delta > 0.0 && delta < 1.0) {
        return Err(Error::InvalidArgument("delta must lie in (0, 1)"));
    }
    if !(prob > 0.0 && prob < 1.0) {
        return Err(Error::InvalidArgument("probability must lie in (0, 1)"));
    }
    Ok(())
}

/// `2(log(2Σd_λ) − log(1−P)) / log((1+δ)^{1+δ}(1−δ)^{1−δ})` for a given `Σd_λ`.
pub fn closed_form_size(sum_dims: &BigUint, delta: f64, prob: f64) -> Result<f64> {
    check_target(delta, prob)?;
    let numer = core::f64::consts::LN_2 + ln_biguint(sum_dims) - (-prob).ln_1p();
    Ok(2.0 * numer / master_rate(delta))
}

/// Smallest `S` for which the plain master union bound is at most `1 − P`.
pub fn min_size_closed_form(d: usize, t: u32, delta: f64, prob: f64) -> Result<MinSizeResult> {
    let sum = sum_of_dimensions(d, t)?;
    let exact = closed_form_size(&sum, delta, prob)?;
    let size = exact.ceil() as u64;
    let log_at = |s: u64| core::f64::consts::LN_2 + ln_biguint(&sum) - s as f64 / 2.0 * master_rate(delta);
    Ok(MinSizeResult {
        size,
        method: Method::MasterPlain,
        log_bound: log_at(size),
        log_bound_below: (size > 1).then(|| log_at(size - 1)),
        d,
        t,
        delta,
        prob,
    })
}

/// Smallest `S` (even for symmetric methods) with total bound at most `1 − P`.
pub fn min_size_search(d: usize, t: u32, delta: f64, prob: f64, method: Method) -> Result<MinSizeResult> {
    check_target(delta, prob)?;
    let mut ctx = BoundContext::new(d, t)?;
    min_size_search_with(&mut ctx, delta, prob, method)
}

/// [`min_size_search`] on a prepared context.
pub fn min_size_search_with(ctx: &mut BoundContext, delta: f64, prob: f64, method: Method) -> Result<MinSizeResult> {
    check_target(delta, prob)?;
    let step = if method.is_symmetric() { 2 } else { 1 };
    let target = (-prob).ln_1p();
    let tol = 1e-9;
    let mut eval = |s: u64| ctx.total(method, s, delta).map(|r| r.log_bound);

    let mut hi = step;
    let mut f_hi = eval(hi)?;
    let mut lo = 0u64;
    let mut f_lo = f64::INFINITY;
    while f_hi > target {
        if hi >= SEARCH_LIMIT {
            return Err(Error::SearchLimit);
        }
        let next = hi * 2;
        let f_next = eval(next)?;
        if f_next > f_hi + tol {
            return Err(Error::NonMonotone { size: next });
        }
        lo = hi;
        f_lo = f_hi;
        hi = next;
        f_hi = f_next;
    }
    while hi - lo > step {
        let mid = lo + (hi - lo) / (2 * step) * step;
        let f_mid = eval(mid)?;
        if f_mid > f_lo + tol || f_mid < f_hi - tol {
            return Err(Error::NonMonotone { size: mid });
        }
        if f_mid > target {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
            f_hi = f_mid;
        }
    }
    Ok(MinSizeResult {
        size: hi,
        method,
        log_bound: f_hi,
        log_bound_below: (lo > 0).then_some(f_lo),
        d: ctx.d(),
        t: ctx.t(),
        delta,
        prob,
    })
}

/// `2(2t log d + log 2 − log(1−P)) / log((1+δ)^{1+δ}(1−δ)^{1−δ})`, from `Σd_λ ≤ d^{2t}`.
pub fn min_size_scaling(d: usize, t: u32, delta: f64, prob: f64) -> Result<f64> {
    check_target(delta, prob)?;
    if d < 2 || t < 1 {
        return Err(Error::InvalidArgument("need d >= 2 and t >= 1"));
    }
    let numer = 2.0 * f64::from(t) * (d as f64).ln() + core::f64::consts::LN_2 - (-prob).ln_1p();
    Ok(2.0 * numer / master_rate(delta))
}

/// `Σ_{λ∈Λ̃_2} d_λ = d⁴ − 3d² + 1`, valid for `d ≥ 4`.
pub fn sum_of_dimensions_t2(d: &BigUint) -> BigUint {
    let d2 = d * d;
    &d2 * &d2 + BigUint::one() - BigUint::from(3u32) * d2
}

/// `|C_n| = 2^{n²+2n} Π_{j=1}^n (4^j − 1)`.
pub fn clifford_cardinality(n: u32) -> Result<BigUint> {
    if n < 1 {
        return Err(Error::InvalidArgument("qubit count must be at least 1"));
    }
    let mut out = BigUint::one() << (n * n + 2 * n);
    for j in 1..=n {
        out *= (BigUint::one() << (2 * j)) - BigUint::one();
    }
    Ok(out)
}

/// `⌈2·10⁴ (log(2^{4n+1} − 3·2^{2n+1} + 2) + 4.61)⌉`: the rounded-constant size
/// for an `n`-qubit `0.01`-approximate 2-design with probability `0.99`.
pub fn clifford_comparison_size(n: u32) -> Result<BigUint> {
    if n < 1 {
        return Err(Error::InvalidArgument("qubit count must be at least 1"));
    }
    let d = BigUint::one() << n;
    let twice_sum = sum_of_dimensions_t2(&d) * 2u32;
    let value = 2e4 * (ln_biguint(&twice_sum) + 4.61);
    Ok(BigUint::from(value.ceil() as u64))
}

/// The same size from the unrounded closed form (`δ = 0.01`, `P = 0.99`).
pub fn clifford_comparison_size_exact(n: u32) -> Result<BigUint> {
    if n < 1 {
        return Err(Error::InvalidArgument("qubit count must be at least 1"));
    }
    let d = BigUint::one() << n;
    let size = closed_form_size(&sum_of_dimensions_t2(&d), 0.01, 0.99)?;
    Ok(BigUint::from(size.ceil() as u64))
}

/// `|C_n| / S_n` with `S_n` from [`clifford_comparison_size`].
pub fn clifford_ratio(n: u32) -> Result<BigRational> {
    if n > 50 {
        return Err(Error::InvalidArgument("qubit count must be at most 50"));
    }
    let card = clifford_cardinality(n)?;
    let size = clifford_comparison_size(n)?;
    Ok(BigRational::new(card.into(), size.into()))
}

/// Natural log of a positive rational.
pub fn ln_ratio(r: &BigRational) -> f64 {
    let numer = r.numer().to_biguint().unwrap_or_default();
    let denom = r.denom().to_biguint().unwrap_or_default();
    ln_biguint(&numer) - ln_biguint(&denom)
}

/// Smallest depth `l` with `δ₀^l ≤ δ_target`.
pub fn depth_for_target(delta0: f64, target: f64) -> Result<u32> {
    if !(delta0 > 0.0 && delta0 < 1.0) {
        return Err(Error::InvalidArgument("delta0 must lie in (0, 1)"));
    }
    if !(target > 0.0 && target <= delta0) {
        return Err(Error::InvalidArgument("target must lie in (0, delta0]"));
    }
    let estimate = (target.ln() / delta0.ln()).ceil().max(1.0);
    let mut depth = estimate.to_u32().ok_or(Error::InvalidArgument("depth overflows"))?;
    // Guard against rounding in the ratio of logs.
    while depth > 1 && delta0.powi(depth as i32 - 1) <= target {
        depth -= 1;
    }
    while delta0.powi(depth as i32) > target {
        depth += 1;
    }
    Ok(depth)
}
