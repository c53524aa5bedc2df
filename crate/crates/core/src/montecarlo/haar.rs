//! Haar-random unitaries and gate-set sampling.

use alloc::vec::Vec;

use nalgebra::DMatrix;
use num_complex::Complex64;
#[allow(unused_imports)] // inherent float methods shadow these when std is linked
use num_traits::Float;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::bounds::GateSetKind;
use crate::error::{Error, Result};

pub type CMatrix = DMatrix<Complex64>;

/// The generator for trial `trial` of a run seeded with `seed`: one ChaCha
/// stream per trial.
pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

/// A Haar-random element of U(d) (Ginibre matrix, QR, phases of `diag R`
/// moved into `Q`). With `special`, the determinant is divided out to land in SU(d).
pub fn sample_haar<R: Rng + ?Sized>(d: usize, rng: &mut R, special: bool) -> CMatrix {
    let scale = core::f64::consts::FRAC_1_SQRT_2;
    let ginibre = CMatrix::from_fn(d, d, |_, _| {
        let re: f64 = rng.sample(StandardNormal);
        let im: f64 = rng.sample(StandardNormal);
        Complex64::new(re * scale, im * scale)
    });
    let qr = ginibre.qr();
    let r = qr.r();
    let mut q = qr.q();
    for j in 0..d {
        let rjj = r[(j, j)];
        let phase = if rjj.norm() > 0.0 { rjj / rjj.norm() } else { Complex64::new(1.0, 0.0) };
        for x in q.column_mut(j).iter_mut() {
            *x *= phase;
        }
    }
    if special {
        let det = q.determinant();
        let root = Complex64::from_polar(1.0, -det.arg() / d as f64);
        q *= root;
    }
    q
}

/// `V ∈ U(2)` acting on modes `i, j` of `C^d` (in that order), identity elsewhere.
pub fn embed_two_mode(d: usize, i: usize, j: usize, v: &CMatrix) -> CMatrix {
    let mut out = CMatrix::identity(d, d);
    let idx = [i, j];
    for (a, &ra) in idx.iter().enumerate() {
        for (b, &cb) in idx.iter().enumerate() {
            out[(ra, cb)] = v[(a, b)];
        }
    }
    out
}

/// The `d(d−1)` embeddings `B^{ij}` (ordered pairs `i ≠ j`) of one SU(2) gate.
pub fn beamsplitter_lift(d: usize, v: &CMatrix) -> Vec<CMatrix> {
    let mut out = Vec::with_capacity(d * (d - 1));
    for i in 0..d {
        for j in 0..d {
            if i != j {
                out.push(embed_two_mode(d, i, j, v));
            }
        }
    }
    out
}

/// A sampled gate-set.
#[derive(Debug, Clone)]
pub struct GateSetSample {
    pub unitaries: Vec<CMatrix>,
    pub kind: GateSetKind,
    pub seed: u64,
    pub trial: u64,
}

impl GateSetSample {
    /// Samples a set of `size` gates (for lifted sets, `size` SU(2) seeds giving
    /// `size·d(d−1)` gates) from the stream of `(seed, trial)`.
    pub fn sample(d: usize, kind: GateSetKind, size: u64, seed: u64, trial: u64) -> Result<Self> {
        if d < 2 {
            return Err(Error::InvalidArgument("d must be at least 2"));
        }
        kind.validate_size(size)?;
        let mut rng = trial_rng(seed, trial);
        let size = size as usize;
        let unitaries = match kind {
            GateSetKind::Plain => (0..size).map(|_| sample_haar(d, &mut rng, false)).collect(),
            GateSetKind::Symmetric => {
                let mut out = Vec::with_capacity(size);
                for _ in 0..size / 2 {
                    let u = sample_haar(d, &mut rng, false);
                    out.push(u.adjoint());
                    out.push(u);
                }
                out
            }
            GateSetKind::BeamsplitterLifted => {
                if d < 3 {
                    return Err(Error::InvalidArgument("beamsplitter lifting needs d > 2"));
                }
                let mut out = Vec::with_capacity(size * d * (d - 1));
                for _ in 0..size {
                    out.extend(beamsplitter_lift(d, &sample_haar(2, &mut rng, true)));
                }
                out
            }
        };
        Ok(GateSetSample { unitaries, kind, seed, trial })
    }

    /// The one-element set `{1_d}`.
    pub fn identity(d: usize) -> Self {
        GateSetSample { unitaries: alloc::vec![CMatrix::identity(d, d)], kind: GateSetKind::Plain, seed: 0, trial: 0 }
    }

    pub fn d(&self) -> usize {
        self.unitaries.first().map_or(0, |u| u.nrows())
    }

    /// Largest `‖U†U − 1‖_max` over the set.
    pub fn unitarity_defect(&self) -> f64 {
        self.unitaries
            .iter()
            .map(|u| {
                let d = u.nrows();
                (u.adjoint() * u - CMatrix::identity(d, d)).iter().map(|z| z.norm()).fold(0.0, f64::max)
            })
            .fold(0.0, f64::max)
    }
}
