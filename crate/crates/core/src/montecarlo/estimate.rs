//! `δ(ν_S, t) = ‖T_{ν_S,t} − T_{μ,t}‖` by power iteration, and empirical tails.

use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;
#[allow(unused_imports)] // inherent float methods shadow these when std is linked
use num_traits::Float;
use rand::Rng;
use rand_distr::StandardNormal;

use super::haar::{trial_rng, GateSetSample};
use super::moment::MomentOperator;
use super::projector::HaarProjector;
use crate::bounds::GateSetKind;
use crate::error::{Error, Result};

/// Settings for the power iteration on `A†A`, `A = T − Π`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PowerIteration {
    /// Stop once the relative change of `‖Av‖` falls below this.
    pub tolerance: f64,
    pub max_iterations: usize,
    /// Independent random starts; the largest estimate is kept.
    pub restarts: usize,
}

impl Default for PowerIteration {
    fn default() -> Self {
        PowerIteration { tolerance: 1e-8, max_iterations: 100_000, restarts: 3 }
    }
}

/// Result of one norm estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DeltaEstimate {
    pub delta: f64,
    /// Iterations summed over all restarts.
    pub iterations: usize,
}

fn norm(v: &[Complex64]) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

/// Operator norm of `T − Π`.
pub fn estimate_delta_with(
    op: &MomentOperator,
    proj: &HaarProjector,
    config: &PowerIteration,
    start_seed: u64,
) -> Result<DeltaEstimate> {
    if op.dim() != proj.dim() {
        return Err(Error::InvalidArgument("operator and projector dimensions differ"));
    }
    let dim = op.dim();
    let mut rng = trial_rng(start_seed, u64::MAX);
    let mut v = vec![Complex64::new(0.0, 0.0); dim];
    let mut av = vec![Complex64::new(0.0, 0.0); dim];
    let mut tmp = vec![Complex64::new(0.0, 0.0); dim];
    let mut best = 0.0f64;
    let mut total_iterations = 0;

    let apply_a = |x: &[Complex64], out: &mut [Complex64], scratch: &mut [Complex64]| {
        op.apply(x, out);
        proj.apply(x, scratch);
        out.iter_mut().zip(scratch.iter()).for_each(|(o, p)| *o -= p);
    };
    let apply_a_adj = |x: &[Complex64], out: &mut [Complex64], scratch: &mut [Complex64]| {
        op.apply_adjoint(x, out);
        proj.apply(x, scratch);
        out.iter_mut().zip(scratch.iter()).for_each(|(o, p)| *o -= p);
    };

    for _ in 0..config.restarts.max(1) {
        for x in v.iter_mut() {
            let re: f64 = rng.sample(StandardNormal);
            let im: f64 = rng.sample(StandardNormal);
            *x = Complex64::new(re, im);
        }
        let n0 = norm(&v);
        v.iter_mut().for_each(|x| *x /= n0);
        let mut previous = f64::NAN;
        let mut converged = false;
        let mut estimate = 0.0;
        let mut rel_change = f64::INFINITY;
        for _ in 0..config.max_iterations {
            total_iterations += 1;
            apply_a(&v, &mut av, &mut tmp);
            estimate = norm(&av);
            if estimate == 0.0 {
                converged = true;
                break;
            }
            rel_change = ((estimate - previous) / estimate).abs();
            if rel_change <= config.tolerance {
                converged = true;
                break;
            }
            previous = estimate;
            apply_a_adj(&av, &mut v, &mut tmp);
            let n = norm(&v);
            if n == 0.0 {
                converged = true;
                break;
            }
            v.iter_mut().for_each(|x| *x /= n);
        }
        if !converged {
            return Err(Error::NoConvergence { iterations: config.max_iterations, estimate, rel_change });
        }
        best = best.max(estimate);
    }
    Ok(DeltaEstimate { delta: best, iterations: total_iterations })
}

/// `δ(ν_S, t)` for a sampled gate-set with default settings.
pub fn estimate_delta(sample: &GateSetSample, t: u32) -> Result<DeltaEstimate> {
    let op = MomentOperator::new(sample, t)?;
    let proj = HaarProjector::new(op.d(), t)?;
    estimate_delta_with(&op, &proj, &PowerIteration::default(), sample.seed ^ sample.trial.rotate_left(32))
}

/// One Monte Carlo trial, for audit logs.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrialRecord {
    pub trial: u64,
    pub seed: u64,
    pub delta: f64,
    pub iterations: usize,
}

/// Everything fixed across the trials of one run.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrialSpec {
    pub d: usize,
    pub t: u32,
    pub kind: GateSetKind,
    pub size: u64,
    pub seed: u64,
}

impl TrialSpec {
    /// Samples trial `trial` and estimates its `δ(ν_S, t)`.
    pub fn run(&self, trial: u64, proj: &HaarProjector) -> Result<TrialRecord> {
        let sample = GateSetSample::sample(self.d, self.kind, self.size, self.seed, trial)?;
        let op = MomentOperator::new(&sample, self.t)?;
        let est = estimate_delta_with(&op, proj, &PowerIteration::default(), self.seed ^ trial.rotate_left(32))?;
        Ok(TrialRecord { trial, seed: self.seed, delta: est.delta, iterations: est.iterations })
    }
}

/// Fraction of trials with `δ(ν_S, t) ≥ δ` and its binomial standard error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TailEstimate {
    pub fraction: f64,
    pub stderr: f64,
    pub trials: usize,
}

impl TailEstimate {
    pub fn from_records(records: &[TrialRecord], delta: f64) -> Self {
        let n = records.len();
        let hits = records.iter().filter(|r| r.delta >= delta).count();
        let p = if n == 0 { 0.0 } else { hits as f64 / n as f64 };
        let stderr = if n == 0 { 0.0 } else { (p * (1.0 - p) / n as f64).sqrt() };
        TailEstimate { fraction: p, stderr, trials: n }
    }
}

/// Runs `trials` seeded trials in order.
pub fn run_trials(spec: &TrialSpec, trials: u64) -> Result<Vec<TrialRecord>> {
    if trials < 1 {
        return Err(Error::InvalidArgument("need at least one trial"));
    }
    let proj = HaarProjector::new(spec.d, spec.t)?;
    (0..trials).map(|k| spec.run(k, &proj)).collect()
}

/// `P(δ(ν_S, t) ≥ δ)` over `trials` seeded trials.
pub fn empirical_tail(
    d: usize,
    t: u32,
    kind: GateSetKind,
    size: u64,
    delta: f64,
    trials: u64,
    seed: u64,
) -> Result<TailEstimate> {
    let records = run_trials(&TrialSpec { d, t, kind, size, seed }, trials)?;
    Ok(TailEstimate::from_records(&records, delta))
}
