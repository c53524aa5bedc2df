//! Empirical side: Haar sampling, matrix-free moment operators, the Haar
//! projector, power-iteration estimates of `δ(ν_S, t)` and SU(2) characters.

mod estimate;
mod haar;
mod moment;
mod projector;
mod su2;

pub use estimate::{
    empirical_tail, estimate_delta, estimate_delta_with, run_trials, DeltaEstimate, PowerIteration, TailEstimate,
    TrialRecord, TrialSpec,
};
pub use haar::{beamsplitter_lift, embed_two_mode, sample_haar, trial_rng, CMatrix, GateSetSample};
pub use moment::{tensor_dimension, MomentOperator, DEFAULT_DIMENSION_CAP};
pub use projector::{HaarProjector, MAX_PERMUTATIONS};
pub use su2::{estimate_fs_indicator_mc, su2_irrep_matrix};
