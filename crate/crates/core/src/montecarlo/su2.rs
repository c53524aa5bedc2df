//! SU(2) irreps as symmetric powers, and a Monte Carlo estimate of `δ_λ(n)`.

use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;
#[allow(unused_imports)] // inherent float methods shadow these when std is linked
use num_traits::Float;

use super::haar::{sample_haar, trial_rng, CMatrix};
use crate::error::{Error, Result};

fn binomials(n: usize) -> Vec<f64> {
    let mut row = vec![1.0f64; n + 1];
    for k in 1..n {
        row[k] = row[k - 1] * (n - k + 1) as f64 / k as f64;
    }
    row
}

/// The spin-`j` irrep (`j_times_2 = 2j`) evaluated at a 2×2 matrix `U`.
///
/// Basis vector `m = 0..=2j` is `√C(2j,m) x^{2j−m} y^m`, so the basis is ordered
/// by weight `2j − 2m`, highest first.
pub fn su2_irrep_matrix(j_times_2: u32, u: &CMatrix) -> Result<CMatrix> {
    if u.nrows() != 2 || u.ncols() != 2 {
        return Err(Error::InvalidArgument("expected a 2x2 matrix"));
    }
    let n = j_times_2 as usize;
    let binom = binomials(n);
    let zero = Complex64::new(0.0, 0.0);
    // Images of x and y as coefficient pairs (x, y).
    let image_x = [u[(0, 0)], u[(1, 0)]];
    let image_y = [u[(0, 1)], u[(1, 1)]];
    let mut out = CMatrix::zeros(n + 1, n + 1);
    for m in 0..=n {
        // poly[k] is the coefficient of x^{n−k} y^k.
        let mut poly = vec![zero; n + 1];
        poly[0] = Complex64::new(1.0, 0.0);
        let factors = core::iter::repeat_n(image_x, n - m).chain(core::iter::repeat_n(image_y, m));
        for (degree, factor) in factors.enumerate() {
            for k in (0..=degree + 1).rev() {
                let keep = if k <= degree { poly[k] * factor[0] } else { zero };
                let shift = if k > 0 { poly[k - 1] * factor[1] } else { zero };
                poly[k] = keep + shift;
            }
        }
        for (k, c) in poly.iter().enumerate() {
            out[(k, m)] = c * (binom[m] / binom[k]).sqrt();
        }
    }
    Ok(out)
}

/// Monte Carlo estimate of `δ(n) = E[tr π(Uⁿ)] / d_π` over Haar-random `U ∈ SU(2)`,
/// with its standard error.
pub fn estimate_fs_indicator_mc(j_times_2: u32, n: i32, trials: u64, seed: u64) -> Result<(f64, f64)> {
    if trials < 2 {
        return Err(Error::InvalidArgument("need at least two trials"));
    }
    let mut rng = trial_rng(seed, 0);
    let dim = f64::from(j_times_2 + 1);
    let mut sum = 0.0;
    let mut sum_sq = 0.0;
    for _ in 0..trials {
        let u = sample_haar(2, &mut rng, true);
        let base = if n < 0 { u.adjoint() } else { u };
        let mut power = CMatrix::identity(2, 2);
        for _ in 0..n.unsigned_abs() {
            power = &power * &base;
        }
        let x = su2_irrep_matrix(j_times_2, &power)?.trace().re / dim;
        sum += x;
        sum_sq += x * x;
    }
    let k = trials as f64;
    let mean = sum / k;
    let var = (sum_sq / k - mean * mean).max(0.0) * k / (k - 1.0);
    Ok((mean, (var / k).sqrt()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_and_defining() {
        let mut rng = trial_rng(1, 0);
        let u = sample_haar(2, &mut rng, true);
        let triv = su2_irrep_matrix(0, &u).unwrap();
        assert!((triv[(0, 0)] - Complex64::new(1.0, 0.0)).norm() < 1e-12);
        let def = su2_irrep_matrix(1, &u).unwrap();
        assert!((def - &u).iter().all(|z| z.norm() < 1e-12));
    }

    #[test]
    fn diagonal_weights() {
        let phi = 0.37f64;
        let u = CMatrix::from_diagonal(&nalgebra::DVector::from_vec(vec![
            Complex64::from_polar(1.0, phi),
            Complex64::from_polar(1.0, -phi),
        ]));
        let p = su2_irrep_matrix(2, &u).unwrap();
        let expected =
            [Complex64::from_polar(1.0, 2.0 * phi), Complex64::new(1.0, 0.0), Complex64::from_polar(1.0, -2.0 * phi)];
        for r in 0..3 {
            for c in 0..3 {
                let e = if r == c { expected[r] } else { Complex64::new(0.0, 0.0) };
                assert!((p[(r, c)] - e).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn homomorphism_and_unitarity() {
        let mut rng = trial_rng(2, 0);
        for j2 in 0..7 {
            let a = sample_haar(2, &mut rng, true);
            let b = sample_haar(2, &mut rng, true);
            let pa = su2_irrep_matrix(j2, &a).unwrap();
            let pb = su2_irrep_matrix(j2, &b).unwrap();
            let pab = su2_irrep_matrix(j2, &(&a * &b)).unwrap();
            assert!((&pa * &pb - pab).iter().all(|z| z.norm() < 1e-10));
            let n = j2 as usize + 1;
            assert!((pa.adjoint() * &pa - CMatrix::identity(n, n)).iter().all(|z| z.norm() < 1e-10));
        }
    }
}
