//! Tail bounds on `P(δ(ν_S, t) ≥ δ)` for Haar random gate-sets.
//!
//! Per-irrep bounds are combined over `Λ̃_t` by a union bound evaluated with
//! log-sum-exp. All bounds are returned in the log domain; probabilities are
//! clipped at one only when reported.

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::{BigInt, BigUint};
#[allow(unused_imports)] // inherent float methods shadow these when std is linked
use num_traits::Float;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::rep::{enumerate_lambda_set, fs_indicator_two, HighestWeight, Irrep};
use crate::specfun::{ln_biguint, log_bessel_i_orders, LogValue};

/// How the gates of a set are drawn.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GateSetKind {
    /// `S` independent Haar unitaries.
    Plain,
    /// `S/2` independent Haar unitaries together with their inverses.
    Symmetric,
    /// SU(2) Haar seeds embedded on every ordered pair of modes of `C^d`.
    BeamsplitterLifted,
}

impl GateSetKind {
    pub const ALL: [GateSetKind; 3] = [GateSetKind::Plain, GateSetKind::Symmetric, GateSetKind::BeamsplitterLifted];

    pub fn name(self) -> &'static str {
        match self {
            GateSetKind::Plain => "plain",
            GateSetKind::Symmetric => "symmetric",
            GateSetKind::BeamsplitterLifted => "beamsplitter",
        }
    }

    /// Checks that `size` is admissible for this kind.
    pub fn validate_size(self, size: u64) -> Result<()> {
        if size == 0 {
            return Err(Error::InvalidArgument("gate-set size must be at least 1"));
        }
        if self == GateSetKind::Symmetric && size % 2 == 1 {
            return Err(Error::InvalidArgument("symmetric gate-set size must be even"));
        }
        Ok(())
    }
}

impl fmt::Display for GateSetKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GateSetKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        GateSetKind::ALL.into_iter().find(|k| k.name() == s).ok_or(Error::InvalidArgument("unknown gate-set kind"))
    }
}

/// The five union-bound methods.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Method {
    BernsteinPlain,
    BernsteinSymmetric,
    MasterPlain,
    MasterSymmetric,
    MasterSymmetricSimplified,
}

impl Method {
    pub const ALL: [Method; 5] = [
        Method::BernsteinPlain,
        Method::BernsteinSymmetric,
        Method::MasterPlain,
        Method::MasterSymmetric,
        Method::MasterSymmetricSimplified,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::BernsteinPlain => "bernstein-plain",
            Method::BernsteinSymmetric => "bernstein-symmetric",
            Method::MasterPlain => "master-plain",
            Method::MasterSymmetric => "master-symmetric",
            Method::MasterSymmetricSimplified => "master-symmetric-simplified",
        }
    }

    /// The gate-set kind the method applies to.
    pub fn kind(self) -> GateSetKind {
        match self {
            Method::BernsteinPlain | Method::MasterPlain => GateSetKind::Plain,
            _ => GateSetKind::Symmetric,
        }
    }

    pub fn is_symmetric(self) -> bool {
        self.kind() == GateSetKind::Symmetric
    }

    /// Methods applicable to `kind`, in canonical order.
    pub fn for_kind(kind: GateSetKind) -> Vec<Method> {
        Method::ALL.into_iter().filter(|m| m.kind() == kind).collect()
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Method::ALL.into_iter().find(|m| m.name() == s).ok_or(Error::InvalidArgument("unknown bound method"))
    }
}

/// Either a whole moment `t` or a single irrep block `λ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Target {
    Moment(u32),
    Irrep(HighestWeight),
}

/// Input to every bound evaluation.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundQuery {
    pub d: usize,
    pub target: Target,
    pub kind: GateSetKind,
    pub size: u64,
    pub delta: f64,
}

impl BoundQuery {
    pub fn irrep(weight: &HighestWeight, kind: GateSetKind, size: u64, delta: f64) -> Self {
        BoundQuery { d: weight.d(), target: Target::Irrep(weight.clone()), kind, size, delta }
    }

    pub fn moment(d: usize, t: u32, kind: GateSetKind, size: u64, delta: f64) -> Self {
        BoundQuery { d, target: Target::Moment(t), kind, size, delta }
    }

    fn validate(&self, method: Method) -> Result<()> {
        if self.kind != method.kind() {
            return Err(Error::IncompatibleMethod);
        }
        self.kind.validate_size(self.size)?;
        check_delta(self.delta)?;
        if let Target::Irrep(w) = &self.target {
            if w.d() != self.d {
                return Err(Error::InvalidArgument("highest weight length differs from d"));
            }
        }
        Ok(())
    }
}

fn check_delta(delta: f64) -> Result<()> {
    if (0.0..1.0).contains(&delta) {
        Ok(())
    } else {
        Err(Error::InvalidArgument("delta must lie in [0, 1)"))
    }
}

/// A bound in the log domain together with the optimizing `θ` where one exists.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundResult {
    pub method: Method,
    pub log_bound: f64,
    /// Minimizer of the `+θ` branch (symmetric master bounds only).
    pub theta_star: Option<f64>,
    /// Minimizer of the `−θ` branch (symmetric master bounds only).
    pub theta_star_neg: Option<f64>,
    /// Whether the raw bound exceeds one.
    pub clipped: bool,
}

impl BoundResult {
    fn new(method: Method, log_bound: f64) -> Self {
        BoundResult { method, log_bound, theta_star: None, theta_star_neg: None, clipped: log_bound > 0.0 }
    }

    /// The raw bound, possibly larger than one.
    pub fn raw(&self) -> f64 {
        self.log_bound.exp()
    }

    /// `min(1, raw)`.
    pub fn probability(&self) -> f64 {
        if self.clipped {
            1.0
        } else {
            self.raw()
        }
    }
}

/// `(1+δ)log(1+δ) + (1−δ)log(1−δ)`.
pub fn master_rate(delta: f64) -> f64 {
    (1.0 + delta) * delta.ln_1p() + (1.0 - delta) * (-delta).ln_1p()
}

/// `−(S/2)log(1−δ²) − δ S artanh δ`, equal to `−(S/2)·master_rate(δ)`.
pub fn master_exponent_artanh(size: f64, delta: f64) -> f64 {
    -(size / 2.0) * (-delta * delta).ln_1p() - delta * size * delta.atanh()
}

/// Constants of one irrep that enter the bounds.
#[derive(Debug, Clone)]
pub struct LambdaProfile {
    pub weight: HighestWeight,
    pub dim: BigUint,
    pub log_dim: f64,
    /// `δ_λ(2)`.
    pub fs2: f64,
    symmetric: Option<SymmetricData>,
}

#[derive(Debug, Clone)]
struct SymmetricData {
    /// `m_λ(0)/d_λ`.
    zero_fraction: f64,
    /// `γ_λ(k)` for `k = 0..=d`.
    gamma: Vec<f64>,
}

fn ratio_to_f64(r: &num_rational::BigRational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

impl LambdaProfile {
    pub fn new(weight: &HighestWeight) -> Self {
        let dim = crate::rep::weyl_dimension(weight);
        LambdaProfile {
            log_dim: ln_biguint(&dim),
            fs2: ratio_to_f64(&fs_indicator_two(weight)),
            weight: weight.clone(),
            dim,
            symmetric: None,
        }
    }

    /// Computes `m_λ(0)` and the `γ_λ(k)` (needs the Weyl-group sum).
    pub fn load_symmetric(&mut self) -> Result<()> {
        if self.symmetric.is_some() {
            return Ok(());
        }
        let mut irrep = Irrep::new(&self.weight);
        let gamma_map = irrep.gamma_coefficients()?;
        let m0 = BigInt::from(irrep.zero_weight_multiplicity()?);
        let zero_fraction = ratio_to_f64(&num_rational::BigRational::new(m0, BigInt::from(self.dim.clone())));
        let d = self.weight.d() as i64;
        let gamma = (0..=d).map(|k| ratio_to_f64(&gamma_map[&k])).collect();
        self.symmetric = Some(SymmetricData { zero_fraction, gamma });
        Ok(())
    }

    /// `log` of the bracket `(m/d)e^{x} + Σ_k γ(k) I_{|k|}(x)` at `x = sign·2θ/S`,
    /// or `None` when the bracket is not positive.
    pub fn log_bracket(&self, x: f64) -> Result<Option<f64>> {
        let data = self.symmetric.as_ref().ok_or(Error::InvalidArgument("symmetric data not loaded"))?;
        let d = data.gamma.len() - 1;
        let ax = x.abs();
        let logs = log_bessel_i_orders(d as u32, ax)?;
        let mut terms = Vec::with_capacity(d + 2);
        terms.push(LogValue::from_f64(data.zero_fraction).scale(x));
        terms.push(LogValue::from_f64(data.gamma[0]).scale(logs[0]));
        for (k, (g, l)) in data.gamma.iter().zip(&logs).enumerate().skip(1) {
            let odd_flip = if x < 0.0 && k % 2 == 1 { -1.0 } else { 1.0 };
            terms.push(LogValue::from_f64(2.0 * odd_flip * g).scale(*l));
        }
        let bracket = LogValue::sum(terms);
        Ok(if bracket.is_positive() { Some(bracket.log_abs) } else { None })
    }

    /// `log(e^{−θδ} F(±θ))`, `+∞` where the bracket is not positive.
    pub fn symmetric_objective(&self, theta: f64, size: f64, delta: f64, negative: bool) -> Result<f64> {
        let x = 2.0 * theta / size * if negative { -1.0 } else { 1.0 };
        Ok(match self.log_bracket(x)? {
            Some(l) => -theta * delta + size / 2.0 * l,
            None => f64::INFINITY,
        })
    }

    /// Per-irrep bound for `method`.
    pub fn bound(&self, method: Method, size: u64, delta: f64) -> Result<BoundResult> {
        method.kind().validate_size(size)?;
        check_delta(delta)?;
        let s = size as f64;
        let ln2 = core::f64::consts::LN_2;
        match method {
            Method::BernsteinPlain => {
                let exponent = -3.0 * s * delta * delta / (6.0 + 2.0 * delta);
                Ok(BoundResult::new(method, ln2 + self.log_dim + exponent))
            }
            Method::BernsteinSymmetric => {
                let exponent = -3.0 * s * delta * delta / (6.0 * (1.0 + self.fs2) + 4.0 * delta);
                Ok(BoundResult::new(method, ln2 + self.log_dim + exponent))
            }
            Method::MasterPlain => Ok(BoundResult::new(method, ln2 + self.log_dim - s / 2.0 * master_rate(delta))),
            Method::MasterSymmetric => self.master_symmetric(s, delta),
            Method::MasterSymmetricSimplified => self.master_symmetric_simplified(s, delta),
        }
    }

    fn master_symmetric(&self, size: f64, delta: f64) -> Result<BoundResult> {
        let method = Method::MasterSymmetric;
        if delta == 0.0 {
            let mut r = BoundResult::new(method, core::f64::consts::LN_2 + self.log_dim);
            r.theta_star = Some(0.0);
            r.theta_star_neg = Some(0.0);
            return Ok(r);
        }
        let theta0 = size * delta / (1.0 - delta * delta).sqrt();
        let theta_max = 1e4 * size;
        let mut branches = [(f64::INFINITY, None); 2];
        for (slot, negative) in branches.iter_mut().zip([false, true]) {
            let mut failure = None;
            let found = minimize_log_theta(
                |theta| match self.symmetric_objective(theta, size, delta, negative) {
                    Ok(v) => v,
                    Err(e) => {
                        failure = Some(e);
                        f64::INFINITY
                    }
                },
                theta0,
                theta_max,
            );
            if let Some(e) = failure {
                return Err(e);
            }
            if let Some((theta, value)) = found {
                *slot = (value, Some(theta));
            }
        }
        if branches.iter().all(|(v, _)| v.is_infinite()) {
            return Err(Error::BoundUnavailable);
        }
        let log_sum = LogValue::sum(branches.iter().map(|(v, _)| LogValue::from_log(*v))).log_abs;
        let mut r = BoundResult::new(method, self.log_dim + log_sum);
        r.theta_star = branches[0].1;
        r.theta_star_neg = branches[1].1;
        Ok(r)
    }

    fn master_symmetric_simplified(&self, size: f64, delta: f64) -> Result<BoundResult> {
        let method = Method::MasterSymmetricSimplified;
        let theta0 = size * delta / (1.0 - delta * delta).sqrt();
        let plus = self.symmetric_objective(theta0, size, delta, false)?;
        let minus = self.symmetric_objective(theta0, size, delta, true)?;
        if plus.is_infinite() && minus.is_infinite() {
            return Err(Error::BoundUnavailable);
        }
        let log_sum = LogValue::sum([LogValue::from_log(plus), LogValue::from_log(minus)]).log_abs;
        let mut r = BoundResult::new(method, self.log_dim + log_sum);
        r.theta_star = Some(theta0);
        r.theta_star_neg = Some(theta0);
        Ok(r)
    }
}

/// Minimizes `f(θ)` over `θ ∈ (0, θ_max]` in `u = log θ`: doubling/halving from
/// `θ₀/16` until the minimum is bracketed, then golden-section search to a
/// relative tolerance of `1e−10` in `θ`. Returns `None` if `f` is `+∞` at every
/// probe.
pub fn minimize_log_theta(mut f: impl FnMut(f64) -> f64, theta0: f64, theta_max: f64) -> Option<(f64, f64)> {
    const LOWEST: f64 = 1e-12;
    let step = core::f64::consts::LN_2;
    let u_max = theta_max.ln();
    let u_min = (theta0 * LOWEST).ln();
    let mut eval = |u: f64| f(u.exp());

    let start = (theta0 / 16.0).ln().min(u_max);
    let mut probes: Vec<(f64, f64)> = Vec::new();
    let f_start = eval(start);
    let up = (start + step).min(u_max);
    let f_up = eval(up);
    probes.push((start, f_start));
    probes.push((up, f_up));

    let (a, b, c);
    if f_up <= f_start {
        // Walk upward until the objective rises.
        let (mut prev, mut mid) = ((start, f_start), (up, f_up));
        loop {
            if mid.0 >= u_max {
                return finite_best(&probes);
            }
            let u = (mid.0 + step).min(u_max);
            let fu = eval(u);
            probes.push((u, fu));
            if fu > mid.1 {
                a = prev.0;
                b = mid;
                c = u;
                break;
            }
            prev = mid;
            mid = (u, fu);
        }
    } else {
        let (mut next, mut mid) = ((up, f_up), (start, f_start));
        loop {
            if mid.0 <= u_min {
                return finite_best(&probes);
            }
            let u = mid.0 - step;
            let fu = eval(u);
            probes.push((u, fu));
            if fu > mid.1 || (fu.is_infinite() && mid.1.is_infinite()) {
                if mid.1.is_infinite() {
                    return finite_best(&probes);
                }
                a = u;
                b = mid;
                c = next.0;
                break;
            }
            next = mid;
            mid = (u, fu);
        }
    }
    if b.1.is_infinite() {
        return finite_best(&probes);
    }

    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let (mut lo, mut hi) = (a, c);
    let mut x1 = hi - inv_phi * (hi - lo);
    let mut x2 = lo + inv_phi * (hi - lo);
    let mut f1 = eval(x1);
    let mut f2 = eval(x2);
    let mut best = b;
    while hi - lo > 1e-10 {
        if f1 <= f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = eval(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = eval(x2);
        }
        for (u, v) in [(x1, f1), (x2, f2)] {
            if v < best.1 {
                best = (u, v);
            }
        }
    }
    Some((best.0.exp(), best.1))
}

fn finite_best(probes: &[(f64, f64)]) -> Option<(f64, f64)> {
    probes.iter().filter(|(_, v)| v.is_finite()).min_by(|x, y| x.1.total_cmp(&y.1)).map(|&(u, v)| (u.exp(), v))
}

/// Per-irrep profiles of `Λ̃_t`, reusable across sizes and thresholds.
#[derive(Debug, Clone)]
pub struct BoundContext {
    d: usize,
    t: u32,
    profiles: Vec<LambdaProfile>,
    sum_dims: BigUint,
}

impl BoundContext {
    pub fn new(d: usize, t: u32) -> Result<Self> {
        let profiles: Vec<LambdaProfile> = enumerate_lambda_set(d, t)?.iter().map(LambdaProfile::new).collect();
        let sum_dims = profiles.iter().map(|p| &p.dim).sum();
        Ok(BoundContext { d, t, profiles, sum_dims })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn t(&self) -> u32 {
        self.t
    }

    pub fn profiles(&self) -> &[LambdaProfile] {
        &self.profiles
    }

    /// `Σ_{λ∈Λ̃_t} d_λ`.
    pub fn sum_of_dimensions(&self) -> &BigUint {
        &self.sum_dims
    }

    /// Loads the data for the symmetric master bounds of every label.
    pub fn load_symmetric(&mut self) -> Result<()> {
        self.profiles.iter_mut().try_for_each(LambdaProfile::load_symmetric)
    }

    pub fn profiles_mut(&mut self) -> &mut [LambdaProfile] {
        &mut self.profiles
    }

    /// Per-label bounds in canonical label order, loading symmetric data as needed.
    pub fn per_lambda(&mut self, method: Method, size: u64, delta: f64) -> Result<Vec<BoundResult>> {
        if matches!(method, Method::MasterSymmetric | Method::MasterSymmetricSimplified) {
            self.load_symmetric()?;
        }
        self.per_lambda_loaded(method, size, delta)
    }

    /// [`Self::per_lambda`] without loading; symmetric master methods fail
    /// unless [`Self::load_symmetric`] ran first.
    pub fn per_lambda_loaded(&self, method: Method, size: u64, delta: f64) -> Result<Vec<BoundResult>> {
        self.profiles.iter().map(|p| p.bound(method, size, delta)).collect()
    }

    /// Union bound over `Λ̃_t`.
    pub fn total(&mut self, method: Method, size: u64, delta: f64) -> Result<BoundResult> {
        if matches!(method, Method::MasterSymmetric | Method::MasterSymmetricSimplified) {
            self.load_symmetric()?;
        }
        self.total_loaded(method, size, delta)
    }

    /// [`Self::total`] without loading.
    pub fn total_loaded(&self, method: Method, size: u64, delta: f64) -> Result<BoundResult> {
        let parts = self.per_lambda_loaded(method, size, delta)?;
        let log_bound = LogValue::sum(parts.iter().map(|r| LogValue::from_log(r.log_bound))).log_abs;
        let mut r = BoundResult::new(method, log_bound);
        if let [single] = parts.as_slice() {
            r.theta_star = single.theta_star;
            r.theta_star_neg = single.theta_star_neg;
        }
        Ok(r)
    }

    /// The factored plain master bound `2(1−δ²)^{−S/2} e^{−δS artanh δ} Σ d_λ`.
    pub fn master_plain_factored(&self, size: u64, delta: f64) -> Result<BoundResult> {
        check_delta(delta)?;
        GateSetKind::Plain.validate_size(size)?;
        let log_bound =
            core::f64::consts::LN_2 + ln_biguint(&self.sum_dims) + master_exponent_artanh(size as f64, delta);
        Ok(BoundResult::new(Method::MasterPlain, log_bound))
    }
}

fn irrep_of(q: &BoundQuery) -> Result<&HighestWeight> {
    match &q.target {
        Target::Irrep(w) => Ok(w),
        Target::Moment(_) => Err(Error::InvalidArgument("query target must be a single irrep")),
    }
}

fn single(q: &BoundQuery, method: Method) -> Result<BoundResult> {
    q.validate(method)?;
    let mut profile = LambdaProfile::new(irrep_of(q)?);
    if matches!(method, Method::MasterSymmetric | Method::MasterSymmetricSimplified) {
        profile.load_symmetric()?;
    }
    profile.bound(method, q.size, q.delta)
}

/// Bernstein bound for one irrep; the symmetric variant is picked from `q.kind`.
pub fn bernstein_bound(q: &BoundQuery) -> Result<BoundResult> {
    let method = match q.kind {
        GateSetKind::Plain => Method::BernsteinPlain,
        GateSetKind::Symmetric => Method::BernsteinSymmetric,
        GateSetKind::BeamsplitterLifted => return Err(Error::IncompatibleMethod),
    };
    single(q, method)
}

/// `2d_λ (1−δ²)^{−S/2} e^{−δS artanh δ}` for one irrep.
pub fn master_bound_plain(q: &BoundQuery) -> Result<BoundResult> {
    single(q, Method::MasterPlain)
}

/// `d_λ [inf_θ e^{−θδ}F(θ) + inf_θ e^{−θδ}F(−θ)]` for one irrep.
pub fn master_bound_symmetric(q: &BoundQuery) -> Result<BoundResult> {
    single(q, Method::MasterSymmetric)
}

/// The symmetric master bound evaluated at `θ₀ = Sδ/√(1−δ²)`.
pub fn master_bound_symmetric_simplified(q: &BoundQuery) -> Result<BoundResult> {
    single(q, Method::MasterSymmetricSimplified)
}

/// Evaluates `method` on a single-irrep or whole-moment query.
pub fn evaluate(q: &BoundQuery, method: Method) -> Result<BoundResult> {
    match q.target {
        Target::Irrep(_) => single(q, method),
        Target::Moment(t) => {
            q.validate(method)?;
            BoundContext::new(q.d, t)?.total(method, q.size, q.delta)
        }
    }
}

/// Union bound `Σ_{λ∈Λ̃_t}` of the per-irrep bound for `method`.
pub fn total_bound(d: usize, t: u32, kind: GateSetKind, size: u64, delta: f64, method: Method) -> Result<BoundResult> {
    evaluate(&BoundQuery::moment(d, t, kind, size, delta), method)
}

fn check_alpha(alpha: f64) -> Result<()> {
    if alpha > 0.0 && alpha.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidArgument("alpha must be positive"))
    }
}

/// `exp(−dSα²/(32t²))`: concentration of `δ(ν_S, t)` around its mean.
pub fn concentration_bound_t(d: usize, t: u32, size: u64, alpha: f64) -> Result<f64> {
    check_alpha(alpha)?;
    let t = f64::from(t);
    Ok((-(d as f64) * size as f64 * alpha * alpha / (32.0 * t * t)).exp())
}

/// `exp(−dSα²/(2π²‖λ‖₁²))`: concentration of a single block.
pub fn concentration_bound_lambda(weight: &HighestWeight, size: u64, alpha: f64) -> Result<f64> {
    check_alpha(alpha)?;
    if weight.is_zero() {
        return Err(Error::InvalidArgument("the trivial label has no concentration bound"));
    }
    let norm = weight.l1_norm() as f64;
    let pi = core::f64::consts::PI;
    Ok((-(weight.d() as f64) * size as f64 * alpha * alpha / (2.0 * pi * pi * norm * norm)).exp())
}

/// `exp(−Sα²/(16t²))` for `S` SU(2) seeds lifted by beamsplitters.
pub fn concentration_bound_beamsplitter(t: u32, size: u64, alpha: f64) -> Result<f64> {
    check_alpha(alpha)?;
    let t = f64::from(t);
    Ok((-(size as f64) * alpha * alpha / (16.0 * t * t)).exp())
}

/// The plain-set size `2S/d` matched by `S` lifted seeds.
pub fn equivalent_plain_size(d: usize, size: u64) -> Result<f64> {
    if d <= 2 {
        return Err(Error::InvalidArgument("beamsplitter lifting needs d > 2"));
    }
    Ok(2.0 * size as f64 / d as f64)
}
