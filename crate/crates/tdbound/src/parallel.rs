//! Rayon drivers for the embarrassingly parallel parts.

use rayon::prelude::*;
use tdbound_core::bounds::BoundContext;
use tdbound_core::montecarlo::{HaarProjector, TrialRecord, TrialSpec};

use crate::error::{CliError, Result};

/// Environment variable holding the worker-thread count.
pub const THREADS_ENV: &str = "TDBOUND_THREADS";

/// Sizes the global pool from `TDBOUND_THREADS` when set. Safe to call repeatedly.
pub fn init_thread_pool() -> Result<()> {
    let Ok(raw) = std::env::var(THREADS_ENV) else {
        return Ok(());
    };
    let threads: usize = raw
        .trim()
        .parse()
        .map_err(|_| CliError::Usage(format!("{THREADS_ENV} must be a positive integer, got `{raw}`")))?;
    if threads == 0 {
        return Err(CliError::Usage(format!("{THREADS_ENV} must be positive")));
    }
    // A second build fails once the pool exists; the first setting wins.
    let _ = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global();
    Ok(())
}

/// Loads `m_λ(0)` and `γ_λ(k)` for every label concurrently.
pub fn load_symmetric(ctx: &mut BoundContext) -> Result<()> {
    ctx.profiles_mut().par_iter_mut().try_for_each(|p| p.load_symmetric())?;
    Ok(())
}

/// Runs trials `0..trials` concurrently; records come back in trial order.
pub fn run_trials(spec: &TrialSpec, trials: u64) -> Result<Vec<TrialRecord>> {
    if trials < 1 {
        return Err(CliError::Usage("need at least one trial".into()));
    }
    let proj = HaarProjector::new(spec.d, spec.t)?;
    let records: std::result::Result<Vec<_>, _> = (0..trials).into_par_iter().map(|k| spec.run(k, &proj)).collect();
    Ok(records?)
}
