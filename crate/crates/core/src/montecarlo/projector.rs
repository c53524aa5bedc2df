//! The Haar moment operator as the orthogonal projector onto the span of the
//! vectorized permutation operators.

use alloc::vec;
use alloc::vec::Vec;

use nalgebra::{DMatrix, DVector, SymmetricEigen};
use num_complex::Complex64;

use super::moment::{check_dimension, DEFAULT_DIMENSION_CAP};
use crate::error::{Error, Result};
use crate::rep::for_each_permutation;

/// Largest `t!` handled.
pub const MAX_PERMUTATIONS: usize = 720;

/// `Π = Σ_{σ,τ} |P_σ⟩ (G⁺)_{στ} ⟨P_τ|` on `(C^d)^{⊗t} ⊗ (C^d)^{⊗t}`.
#[derive(Debug, Clone)]
pub struct HaarProjector {
    d: usize,
    t: u32,
    dim: usize,
    permutations: Vec<Vec<usize>>,
    /// Positions of the ones in `vec(P_σ)`.
    supports: Vec<Vec<usize>>,
    gram: DMatrix<f64>,
    pinv: DMatrix<f64>,
    rank: usize,
}

fn count_cycles(perm: &[usize]) -> u32 {
    let mut seen = vec![false; perm.len()];
    let mut cycles = 0;
    for start in 0..perm.len() {
        if !seen[start] {
            cycles += 1;
            let mut k = start;
            while !seen[k] {
                seen[k] = true;
                k = perm[k];
            }
        }
    }
    cycles
}

impl HaarProjector {
    pub fn new(d: usize, t: u32) -> Result<Self> {
        Self::with_cap(d, t, DEFAULT_DIMENSION_CAP)
    }

    pub fn with_cap(d: usize, t: u32, cap: usize) -> Result<Self> {
        if d < 1 || t < 1 {
            return Err(Error::InvalidArgument("need d >= 1 and t >= 1"));
        }
        let dim = check_dimension(d, t, cap)?;
        let tu = t as usize;
        let count: usize = (1..=tu).product();
        if count > MAX_PERMUTATIONS {
            return Err(Error::DimensionCap { dim: count, cap: MAX_PERMUTATIONS });
        }
        let mut permutations = Vec::with_capacity(count);
        for_each_permutation(tu, |p, _| permutations.push(p.to_vec()));
        let half = d.pow(t);
        let supports: Vec<Vec<usize>> = permutations
            .iter()
            .map(|sigma| {
                // Entry (i, j) of P_σ is one iff i_k = j_{σ(k)} for all k.
                let mut digits = vec![0usize; tu];
                (0..half)
                    .map(|j| {
                        let mut rest = j;
                        for k in (0..tu).rev() {
                            digits[k] = rest % d;
                            rest /= d;
                        }
                        let i = sigma.iter().fold(0usize, |acc, &s| acc * d + digits[s]);
                        i * half + j
                    })
                    .collect()
            })
            .collect();
        let gram = DMatrix::from_fn(count, count, |a, b| {
            // σ⁻¹τ
            let sigma = &permutations[a];
            let tau = &permutations[b];
            let mut inv = vec![0usize; tu];
            for (k, &s) in sigma.iter().enumerate() {
                inv[s] = k;
            }
            let composed: Vec<usize> = tau.iter().map(|&x| inv[x]).collect();
            (d as f64).powi(count_cycles(&composed) as i32)
        });
        let eig = SymmetricEigen::new(gram.clone());
        let top = eig.eigenvalues.iter().fold(0.0f64, |m, &x| m.max(x.abs()));
        let threshold = 1e-10 * top;
        let mut inv_vals = DVector::zeros(count);
        let mut rank = 0;
        for (k, &lam) in eig.eigenvalues.iter().enumerate() {
            if lam.abs() > threshold {
                inv_vals[k] = 1.0 / lam;
                rank += 1;
            }
        }
        let pinv = &eig.eigenvectors * DMatrix::from_diagonal(&inv_vals) * eig.eigenvectors.transpose();
        Ok(HaarProjector { d, t, dim, permutations, supports, gram, pinv, rank })
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

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn permutations(&self) -> &[Vec<usize>] {
        &self.permutations
    }

    /// `G_{στ} = d^{#cycles(σ⁻¹τ)}`.
    pub fn gram(&self) -> &DMatrix<f64> {
        &self.gram
    }

    /// Positions of the unit entries of `vec(P_σ)` for the `k`-th permutation.
    pub fn support(&self, k: usize) -> &[usize] {
        &self.supports[k]
    }

    /// `out = Π v`.
    pub fn apply(&self, v: &[Complex64], out: &mut [Complex64]) {
        assert_eq!(v.len(), self.dim);
        let n = self.supports.len();
        let overlaps: Vec<Complex64> = self.supports.iter().map(|s| s.iter().map(|&i| v[i]).sum()).collect();
        out.iter_mut().for_each(|x| *x = Complex64::new(0.0, 0.0));
        for a in 0..n {
            let mut coeff = Complex64::new(0.0, 0.0);
            for (b, o) in overlaps.iter().enumerate() {
                coeff += o * self.pinv[(a, b)];
            }
            for &i in &self.supports[a] {
                out[i] += coeff;
            }
        }
    }

    /// `Π` as a dense matrix (small dimensions only).
    pub fn to_dense(&self) -> DMatrix<Complex64> {
        let mut m = DMatrix::zeros(self.dim, self.dim);
        let mut e = vec![Complex64::new(0.0, 0.0); self.dim];
        let mut col = vec![Complex64::new(0.0, 0.0); self.dim];
        for j in 0..self.dim {
            e[j] = Complex64::new(1.0, 0.0);
            self.apply(&e, &mut col);
            for (i, x) in col.iter().enumerate() {
                m[(i, j)] = *x;
            }
            e[j] = Complex64::new(0.0, 0.0);
        }
        m
    }
}
