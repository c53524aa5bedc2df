//! Matrix-free moment operators `T_{ν_S,t} = (1/S) Σ_U U^{⊗t} ⊗ Ū^{⊗t}`.

use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;

use super::haar::{CMatrix, GateSetSample};
use crate::error::{Error, Result};

/// Default cap on the tensor dimension `d^{2t}`.
pub const DEFAULT_DIMENSION_CAP: usize = 1 << 16;

/// `d^{2t}`, or `None` on overflow.
pub fn tensor_dimension(d: usize, t: u32) -> Option<usize> {
    d.checked_pow(2 * t)
}

pub(crate) fn check_dimension(d: usize, t: u32, cap: usize) -> Result<usize> {
    match tensor_dimension(d, t) {
        Some(dim) if dim <= cap => Ok(dim),
        Some(dim) => Err(Error::DimensionCap { dim, cap }),
        None => Err(Error::DimensionCap { dim: usize::MAX, cap }),
    }
}

/// The moment operator of a gate-set, applied by `2t` mode contractions per gate.
#[derive(Debug, Clone)]
pub struct MomentOperator {
    d: usize,
    t: u32,
    dim: usize,
    /// `(U, Ū)` for each gate.
    factors: Vec<(CMatrix, CMatrix)>,
}

impl MomentOperator {
    pub fn new(sample: &GateSetSample, t: u32) -> Result<Self> {
        Self::with_cap(sample, t, DEFAULT_DIMENSION_CAP)
    }

    pub fn with_cap(sample: &GateSetSample, t: u32, cap: usize) -> Result<Self> {
        if t < 1 {
            return Err(Error::InvalidArgument("t must be at least 1"));
        }
        if sample.unitaries.is_empty() {
            return Err(Error::InvalidArgument("gate-set is empty"));
        }
        let d = sample.d();
        let dim = check_dimension(d, t, cap)?;
        let factors = sample.unitaries.iter().map(|u| (u.clone(), u.conjugate())).collect();
        Ok(MomentOperator { d, t, dim, factors })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn t(&self) -> u32 {
        self.t
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `out = T v`.
    pub fn apply(&self, v: &[Complex64], out: &mut [Complex64]) {
        self.apply_impl(v, out, false);
    }

    /// `out = T† v`.
    pub fn apply_adjoint(&self, v: &[Complex64], out: &mut [Complex64]) {
        self.apply_impl(v, out, true);
    }

    fn apply_impl(&self, v: &[Complex64], out: &mut [Complex64], adjoint: bool) {
        assert_eq!(v.len(), self.dim);
        assert_eq!(out.len(), self.dim);
        out.iter_mut().for_each(|x| *x = Complex64::new(0.0, 0.0));
        let modes = 2 * self.t as usize;
        let mut a = vec![Complex64::new(0.0, 0.0); self.dim];
        let mut b = vec![Complex64::new(0.0, 0.0); self.dim];
        for (u, ubar) in &self.factors {
            let (left, right) = if adjoint { (u.adjoint(), ubar.adjoint()) } else { (u.clone(), ubar.clone()) };
            a.copy_from_slice(v);
            for mode in 0..modes {
                let m = if mode < self.t as usize { &left } else { &right };
                apply_mode(m, mode, self.d, modes, &a, &mut b);
                core::mem::swap(&mut a, &mut b);
            }
            out.iter_mut().zip(&a).for_each(|(o, x)| *o += x);
        }
        let inv = 1.0 / self.factors.len() as f64;
        out.iter_mut().for_each(|x| *x *= inv);
    }
}

/// `dst = (1 ⊗ … ⊗ M ⊗ … ⊗ 1) src` with `M` on `mode` (mode 0 most significant).
fn apply_mode(m: &CMatrix, mode: usize, d: usize, modes: usize, src: &[Complex64], dst: &mut [Complex64]) {
    let inner = d.pow((modes - 1 - mode) as u32);
    let outer = d.pow(mode as u32);
    let block = d * inner;
    for o in 0..outer {
        let base = o * block;
        for i in 0..inner {
            for r in 0..d {
                let mut acc = Complex64::new(0.0, 0.0);
                for c in 0..d {
                    acc += m[(r, c)] * src[base + c * inner + i];
                }
                dst[base + r * inner + i] = acc;
            }
        }
    }
}
