//! Log-domain modified Bessel functions of the first kind.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::ops::{Add, Mul, Neg};

use num_bigint::BigUint;
#[allow(unused_imports)] // inherent float methods shadow these when std is linked
use num_traits::Float;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};

/// A real number stored as `sign · exp(log_abs)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogValue {
    pub sign: i8,
    pub log_abs: f64,
}

impl LogValue {
    pub const ZERO: LogValue = LogValue { sign: 0, log_abs: f64::NEG_INFINITY };
    pub const ONE: LogValue = LogValue { sign: 1, log_abs: 0.0 };

    /// `sign · exp(log_abs)`; a sign of zero or a `log_abs` of `−∞` gives zero.
    pub fn new(sign: i8, log_abs: f64) -> Self {
        if sign == 0 || log_abs == f64::NEG_INFINITY {
            Self::ZERO
        } else {
            LogValue { sign: sign.signum(), log_abs }
        }
    }

    /// The positive number `exp(log_abs)`.
    pub fn from_log(log_abs: f64) -> Self {
        Self::new(1, log_abs)
    }

    pub fn from_f64(x: f64) -> Self {
        match x.partial_cmp(&0.0) {
            Some(Ordering::Greater) => Self::new(1, x.ln()),
            Some(Ordering::Less) => Self::new(-1, (-x).ln()),
            _ => Self::ZERO,
        }
    }

    pub fn to_f64(self) -> f64 {
        f64::from(self.sign) * self.log_abs.exp()
    }

    pub fn is_zero(self) -> bool {
        self.sign == 0
    }

    pub fn is_positive(self) -> bool {
        self.sign > 0
    }

    /// Signed log-sum-exp.
    pub fn sum<I: IntoIterator<Item = LogValue>>(values: I) -> LogValue {
        let values: Vec<LogValue> = values.into_iter().filter(|v| !v.is_zero()).collect();
        let top = values.iter().map(|v| v.log_abs).fold(f64::NEG_INFINITY, f64::max);
        if top == f64::NEG_INFINITY {
            return Self::ZERO;
        }
        if top == f64::INFINITY {
            let signs: i32 = values.iter().filter(|v| v.log_abs == top).map(|v| i32::from(v.sign)).sum();
            return Self::new(signs.signum() as i8, top);
        }
        // Neumaier summation of the rescaled terms.
        let mut total = 0.0f64;
        let mut carry = 0.0f64;
        for v in &values {
            let term = f64::from(v.sign) * (v.log_abs - top).exp();
            let next = total + term;
            if total.abs() >= term.abs() {
                carry += (total - next) + term;
            } else {
                carry += (term - next) + total;
            }
            total = next;
        }
        let scaled = total + carry;
        Self::from_f64(scaled).scale(top)
    }

    /// Multiplies by `exp(log_factor)`.
    pub fn scale(self, log_factor: f64) -> LogValue {
        Self::new(self.sign, self.log_abs + log_factor)
    }

    /// `self^p` for a positive value.
    pub fn powf(self, p: f64) -> LogValue {
        debug_assert!(self.sign > 0);
        Self::new(self.sign, self.log_abs * p)
    }
}

impl Add for LogValue {
    type Output = LogValue;

    fn add(self, rhs: LogValue) -> LogValue {
        LogValue::sum([self, rhs])
    }
}

impl Mul for LogValue {
    type Output = LogValue;

    fn mul(self, rhs: LogValue) -> LogValue {
        LogValue::new(self.sign * rhs.sign, self.log_abs + rhs.log_abs)
    }
}

impl Neg for LogValue {
    type Output = LogValue;

    fn neg(self) -> LogValue {
        LogValue::new(-self.sign, self.log_abs)
    }
}

/// Arguments at or below this use the power series.
const SERIES_LIMIT: f64 = 20.0;

/// `log I_n(x)` for `n ≥ 0`, `x ≥ 0`.
pub fn log_bessel_i(n: i32, x: f64) -> Result<f64> {
    if n < 0 {
        return Err(Error::InvalidArgument("Bessel order must be nonnegative"));
    }
    let n = n as u32;
    check_argument(x)?;
    if x == 0.0 {
        return Ok(if n == 0 { 0.0 } else { f64::NEG_INFINITY });
    }
    if x <= SERIES_LIMIT {
        Ok(log_series(n, x))
    } else {
        Ok(log_miller(n, x)[n as usize])
    }
}

/// `[log I_0(x), …, log I_nmax(x)]` in one pass.
pub fn log_bessel_i_orders(nmax: u32, x: f64) -> Result<Vec<f64>> {
    check_argument(x)?;
    if x == 0.0 {
        let mut out = vec![f64::NEG_INFINITY; nmax as usize + 1];
        out[0] = 0.0;
        return Ok(out);
    }
    if x <= SERIES_LIMIT {
        Ok((0..=nmax).map(|n| log_series(n, x)).collect())
    } else {
        Ok(log_miller(nmax, x))
    }
}

fn check_argument(x: f64) -> Result<()> {
    if x.is_nan() || x < 0.0 {
        Err(Error::InvalidArgument("Bessel argument must be nonnegative"))
    } else if x.is_infinite() {
        Err(Error::InvalidArgument("Bessel argument must be finite"))
    } else {
        Ok(())
    }
}

/// `I_n(x) = (x/2)^n / n! · Σ_k (x²/4)^k / (k! (n+1)_k)`; all terms positive.
fn log_series(n: u32, x: f64) -> f64 {
    let q = x * x / 4.0;
    let mut term = 1.0f64;
    let mut total = 1.0f64;
    let nf = f64::from(n);
    let mut k = 0.0f64;
    loop {
        k += 1.0;
        term *= q / (k * (nf + k));
        total += term;
        if term < total * 1e-17 && k > q.sqrt() {
            break;
        }
    }
    nf * (x / 2.0).ln() - libm::lgamma(nf + 1.0) + total.ln()
}

/// Miller's backward recurrence `I_{k−1} = I_{k+1} + (2k/x) I_k`, normalized by
/// `e^x = I_0 + 2 Σ_{k≥1} I_k`. Returns `log I_k(x)` for `k = 0..=nmax`.
fn log_miller(nmax: u32, x: f64) -> Vec<f64> {
    const RESCALE_AT: f64 = 1e250;
    let start = nmax as usize + 30 + (100.0 * x).sqrt().ceil() as usize;
    let mut logs = vec![0.0f64; nmax as usize + 1];
    let mut upper = 0.0f64;
    let mut current = 1e-300f64;
    let mut log_scale = 0.0f64;
    let mut total = 0.0f64;
    for k in (1..=start).rev() {
        if k <= nmax as usize {
            logs[k] = current.ln() + log_scale;
        }
        total += 2.0 * current;
        let lower = upper + (2.0 * k as f64 / x) * current;
        upper = current;
        current = lower;
        if current > RESCALE_AT {
            upper /= RESCALE_AT;
            current /= RESCALE_AT;
            total /= RESCALE_AT;
            log_scale += RESCALE_AT.ln();
        }
    }
    logs[0] = current.ln() + log_scale;
    total += current;
    let norm = x - (total.ln() + log_scale);
    for l in &mut logs {
        *l += norm;
    }
    logs
}

/// Natural log of a big integer; `−∞` for zero.
pub fn ln_biguint(v: &BigUint) -> f64 {
    let bits = v.bits();
    if bits == 0 {
        return f64::NEG_INFINITY;
    }
    if bits <= 1000 {
        return v.to_f64().map_or(f64::INFINITY, f64::ln);
    }
    let shift = bits - 64;
    let head = (v >> shift).to_f64().unwrap_or(f64::INFINITY);
    head.ln() + shift as f64 * core::f64::consts::LN_2
}

/// Bounds `(lower, upper)` on `I_n(x) / I_{n−1}(x)` for `n ≥ 1`, `x > 0`:
/// `x / (n − ½ + √((n+½)² + x²))` and `x / (n − 1 + √((n+1)² + x²))`.
pub fn bessel_ratio_bounds(n: u32, x: f64) -> (f64, f64) {
    let nf = f64::from(n);
    let lower = x / (nf - 0.5 + ((nf + 0.5).powi(2) + x * x).sqrt());
    let upper = x / (nf - 1.0 + ((nf + 1.0).powi(2) + x * x).sqrt());
    (lower, upper)
}
