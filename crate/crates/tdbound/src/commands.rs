//! Subcommand bodies. Each returns a [`Table`]; no numerics live here.

use rayon::prelude::*;
use tdbound_core::bounds::{BoundContext, GateSetKind, Method};
use tdbound_core::montecarlo::{TailEstimate, TrialRecord, TrialSpec};
use tdbound_core::rep::{enumerate_lambda_set, fs_indicator_two, DynkinLabel, Irrep};
use tdbound_core::solver::{
    clifford_cardinality, clifford_comparison_size, clifford_comparison_size_exact, clifford_ratio, ln_ratio,
    min_size_closed_form, min_size_search_with, MinSizeResult,
};
use tdbound_core::specfun::ln_biguint;

use crate::error::{CliError, Result};
use crate::output::{Cell, Table};
use crate::parallel;

/// `Λ̃_t` with dimension, norm, zero-weight multiplicity and `δ_λ(2)`.
/// The multiplicity is left empty when `d` exceeds `weyl_cap`.
pub fn lambda_set(d: usize, t: u32, weyl_cap: usize) -> Result<Table> {
    let labels = enumerate_lambda_set(d, t)?;
    let rows: Result<Vec<Vec<Cell>>> = labels
        .par_iter()
        .enumerate()
        .map(|(k, w)| {
            let mut irrep = Irrep::with_weyl_cap(w, weyl_cap);
            let m0 = if d <= weyl_cap { Cell::from(&irrep.zero_weight_multiplicity()?) } else { Cell::Empty };
            Ok(vec![
                Cell::from(k),
                Cell::from(w.to_string()),
                Cell::from(dynkin_text(&w.to_dynkin())),
                Cell::from(w.l1_norm()),
                Cell::from(irrep.dimension()),
                m0,
                Cell::from(fs_indicator_two(w).to_string()),
            ])
        })
        .collect();
    let mut table =
        Table::new(["index", "lambda", "dynkin", "l1_norm", "dimension", "zero_weight_multiplicity", "fs_indicator_2"]);
    rows?.into_iter().for_each(|r| table.push(r));
    Ok(table)
}

fn dynkin_text(label: &DynkinLabel) -> String {
    let parts: Vec<String> = label.entries().iter().map(u64::to_string).collect();
    format!("[{}]", parts.join(","))
}

fn needs_symmetric_data(methods: &[Method]) -> bool {
    methods.iter().any(|m| matches!(m, Method::MasterSymmetric | Method::MasterSymmetricSimplified))
}

/// Raw total bounds (possibly above one) for each method over a grid of `δ`.
/// Cells where a bound is unavailable are left empty.
pub fn bounds_curve(d: usize, t: u32, size: u64, methods: &[Method], deltas: &[f64]) -> Result<Table> {
    if methods.is_empty() {
        return Err(CliError::Usage("no bound methods selected".into()));
    }
    let kinds: Vec<GateSetKind> = methods.iter().map(|m| m.kind()).collect();
    for k in &kinds {
        k.validate_size(size)?;
    }
    if let Some(bad) = deltas.iter().find(|x| !(0.0..1.0).contains(*x)) {
        return Err(CliError::Usage(format!("delta {bad} outside [0, 1)")));
    }
    let mut ctx = BoundContext::new(d, t)?;
    if needs_symmetric_data(methods) {
        parallel::load_symmetric(&mut ctx)?;
    }
    let rows: Result<Vec<Vec<Cell>>> = deltas
        .par_iter()
        .map(|&delta| {
            let mut row = vec![Cell::Float(delta)];
            for &m in methods {
                row.push(match ctx.total_loaded(m, size, delta) {
                    Ok(r) => Cell::Float(r.raw()),
                    Err(tdbound_core::Error::BoundUnavailable) => Cell::Empty,
                    Err(e) => return Err(e.into()),
                });
            }
            Ok(row)
        })
        .collect();
    let mut table =
        Table::new(std::iter::once("delta".to_string()).chain(methods.iter().map(|m| m.name().to_string())));
    rows?.into_iter().for_each(|r| table.push(r));
    Ok(table)
}

/// The objective `log(e^{−θδ} F(±θ, λ, S))` on a grid of `θ` for every label of `Λ̃_t`.
pub fn theta_curve(d: usize, t: u32, size: u64, delta: f64, thetas: &[f64]) -> Result<Table> {
    GateSetKind::Symmetric.validate_size(size)?;
    let mut ctx = BoundContext::new(d, t)?;
    parallel::load_symmetric(&mut ctx)?;
    let mut table = Table::new(["lambda", "theta", "log_objective_plus", "log_objective_minus"]);
    for p in ctx.profiles() {
        for &theta in thetas {
            let plus = p.symmetric_objective(theta, size as f64, delta, false)?;
            let minus = p.symmetric_objective(theta, size as f64, delta, true)?;
            table.push(vec![
                Cell::from(p.weight.to_string()),
                Cell::Float(theta),
                Cell::Float(plus),
                Cell::Float(minus),
            ]);
        }
    }
    Ok(table)
}

/// How a minimal size is obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SizeMethod {
    ClosedForm,
    Search(Method),
}

impl std::str::FromStr for SizeMethod {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self> {
        if s == "closed-form" {
            return Ok(SizeMethod::ClosedForm);
        }
        s.parse::<Method>().map(SizeMethod::Search).map_err(|_| CliError::Usage(format!("unknown method `{s}`")))
    }
}

impl SizeMethod {
    pub fn name(self) -> &'static str {
        match self {
            SizeMethod::ClosedForm => "closed-form",
            SizeMethod::Search(m) => m.name(),
        }
    }
}

const SIZE_COLUMNS: [&str; 9] =
    ["d", "t", "delta", "prob", "method", "size", "reported", "bound_at_size", "bound_below"];

fn size_row(r: &MinSizeResult, name: &str) -> Vec<Cell> {
    vec![
        Cell::from(r.d),
        Cell::from(r.t),
        Cell::Float(r.delta),
        Cell::Float(r.prob),
        Cell::from(name),
        Cell::from(r.size),
        Cell::from(r.reported()),
        Cell::Float(r.log_bound.exp()),
        Cell::float_opt(r.log_bound_below.map(f64::exp)),
    ]
}

fn solve(d: usize, t: u32, delta: f64, prob: f64, method: SizeMethod) -> Result<MinSizeResult> {
    Ok(match method {
        SizeMethod::ClosedForm => min_size_closed_form(d, t, delta, prob)?,
        SizeMethod::Search(m) => {
            let mut ctx = BoundContext::new(d, t)?;
            if needs_symmetric_data(&[m]) {
                parallel::load_symmetric(&mut ctx)?;
            }
            min_size_search_with(&mut ctx, delta, prob, m)?
        }
    })
}

/// One minimal-size cell.
pub fn min_size(d: usize, t: u32, delta: f64, prob: f64, method: SizeMethod) -> Result<Table> {
    let r = solve(d, t, delta, prob, method)?;
    let mut table = Table::new(SIZE_COLUMNS);
    table.push(size_row(&r, method.name()));
    Ok(table)
}

/// A cell of the minimal-size table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SizeCell {
    pub d: usize,
    pub t: u32,
    pub method: Method,
}

/// The standard grid: `d ∈ {2, 4, 8, 16, 32, 64}` with the moments used for
/// each `d`; symmetric master cells only up to `d = 8`.
pub fn table2_cells() -> Vec<SizeCell> {
    let rows: [(usize, &[u32]); 6] = [
        (2, &[2, 3, 4, 5, 20, 500, 5000]),
        (4, &[2, 3, 4, 5, 20]),
        (8, &[2, 3, 4, 5]),
        (16, &[2, 3, 4, 5]),
        (32, &[2, 3, 4, 5]),
        (64, &[2, 3, 4, 5]),
    ];
    let methods = [Method::MasterPlain, Method::MasterSymmetric, Method::BernsteinPlain, Method::BernsteinSymmetric];
    let mut cells = Vec::new();
    for (d, ts) in rows {
        for method in methods {
            if method == Method::MasterSymmetric && d > 8 {
                continue;
            }
            cells.extend(ts.iter().map(|&t| SizeCell { d, t, method }));
        }
    }
    cells
}

/// Minimal sizes for every cell, solved concurrently and listed in cell order.
pub fn table2(cells: &[SizeCell], delta: f64, prob: f64) -> Result<Table> {
    let results: Result<Vec<MinSizeResult>> =
        cells.par_iter().map(|c| solve(c.d, c.t, delta, prob, SizeMethod::Search(c.method))).collect();
    let mut table = Table::new(SIZE_COLUMNS);
    for r in results? {
        table.push(size_row(&r, r.method.name()));
    }
    Ok(table)
}

/// `|C_n|`, the two comparison sizes and the ratio, for `n = 1..=max_qubits`.
pub fn clifford(max_qubits: u32) -> Result<Table> {
    if !(1..=50).contains(&max_qubits) {
        return Err(CliError::Usage("max-qubits must lie in [1, 50]".into()));
    }
    let mut table = Table::new(["n", "cardinality", "size", "size_exact", "ratio", "log10_ratio", "log10_ratio_exact"]);
    let ln10 = std::f64::consts::LN_10;
    for n in 1..=max_qubits {
        let card = clifford_cardinality(n)?;
        let size = clifford_comparison_size(n)?;
        let exact = clifford_comparison_size_exact(n)?;
        let ratio = clifford_ratio(n)?;
        let log_exact = ln_biguint(&card) - ln_biguint(&exact);
        table.push(vec![
            Cell::from(n),
            Cell::from(&card),
            Cell::from(&size),
            Cell::from(&exact),
            Cell::Text(ratio.to_string()),
            Cell::Float(ln_ratio(&ratio) / ln10),
            Cell::Float(log_exact / ln10),
        ]);
    }
    Ok(table)
}

/// Settings for an empirical-tail check.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct McConfig {
    pub d: usize,
    pub t: u32,
    pub size: u64,
    pub kind: GateSetKind,
    pub delta: f64,
    pub trials: u64,
    pub seed: u64,
}

impl Default for McConfig {
    fn default() -> Self {
        McConfig { d: 2, t: 2, size: 10, kind: GateSetKind::Plain, delta: 0.9, trials: 200, seed: 1 }
    }
}

/// Empirical tail against each applicable bound.
#[derive(Debug, Clone)]
pub struct McReport {
    pub table: Table,
    pub records: Vec<TrialRecord>,
    pub tail: TailEstimate,
    pub all_pass: bool,
}

/// Runs the trials and compares `P̂(δ(ν_S,t) ≥ δ)` with every bound for the kind:
/// PASS when the tail is at most the clipped bound plus three standard errors.
pub fn mc_verify(cfg: &McConfig) -> Result<McReport> {
    if !(0.0..1.0).contains(&cfg.delta) {
        return Err(CliError::Usage("delta must lie in [0, 1)".into()));
    }
    cfg.kind.validate_size(cfg.size)?;
    let spec = TrialSpec { d: cfg.d, t: cfg.t, kind: cfg.kind, size: cfg.size, seed: cfg.seed };
    let records = parallel::run_trials(&spec, cfg.trials)?;
    let tail = TailEstimate::from_records(&records, cfg.delta);
    let methods = if cfg.kind == GateSetKind::BeamsplitterLifted { Vec::new() } else { Method::for_kind(cfg.kind) };
    let mut ctx = BoundContext::new(cfg.d, cfg.t)?;
    if needs_symmetric_data(&methods) {
        parallel::load_symmetric(&mut ctx)?;
    }
    let mut table = Table::new([
        "d",
        "t",
        "kind",
        "size",
        "delta",
        "trials",
        "seed",
        "tail",
        "stderr",
        "method",
        "bound_raw",
        "bound",
        "clipped",
        "verdict",
    ]);
    let mut all_pass = true;
    for m in methods {
        let r = ctx.total_loaded(m, cfg.size, cfg.delta)?;
        let pass = tail.fraction <= r.probability() + 3.0 * tail.stderr;
        all_pass &= pass;
        table.push(vec![
            Cell::from(cfg.d),
            Cell::from(cfg.t),
            Cell::from(cfg.kind.name()),
            Cell::from(cfg.size),
            Cell::Float(cfg.delta),
            Cell::from(cfg.trials),
            Cell::from(cfg.seed),
            Cell::Float(tail.fraction),
            Cell::Float(tail.stderr),
            Cell::from(m.name()),
            Cell::Float(r.raw()),
            Cell::Float(r.probability()),
            Cell::Bool(r.clipped),
            Cell::from(if pass { "PASS" } else { "FAIL" }),
        ]);
    }
    Ok(McReport { table, records, tail, all_pass })
}

/// One JSON object per trial, one per line.
pub fn trial_log(records: &[TrialRecord]) -> String {
    let mut out = String::new();
    for r in records {
        let obj = serde_json::json!({
            "trial": r.trial,
            "seed": r.seed,
            "delta": r.delta,
            "iterations": r.iterations,
        });
        out.push_str(&obj.to_string());
        out.push('\n');
    }
    out
}
