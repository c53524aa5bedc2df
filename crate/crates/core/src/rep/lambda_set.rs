//! Enumeration of the irrep labels occurring in `U^{⊗t} ⊗ Ū^{⊗t}`.

use alloc::vec::Vec;

use num_bigint::BigUint;

use super::dimension::weyl_dimension;
use super::partition::{partitions_at_most, partitions_exact};
use super::weight::HighestWeight;
use crate::error::{Error, Result};

/// `Λ̃_t`: nonzero, zero-sum, nonincreasing integer `d`-tuples with `Σ(λ₊) ≤ t`.
///
/// Each label is built from a pair of partitions of `k = Σ(λ₊)`: one with exactly
/// `n` parts for the positive entries and one with at most `d − n` parts for the
/// negated negative entries. Output is ordered by `‖λ‖₁`, then lexicographically.
pub fn enumerate_lambda_set(d: usize, t: u32) -> Result<Vec<HighestWeight>> {
    if d < 2 {
        return Err(Error::InvalidArgument("d must be at least 2"));
    }
    if t < 1 {
        return Err(Error::InvalidArgument("t must be at least 1"));
    }
    let mut out = Vec::new();
    for k in 1..=t {
        let mut slice = Vec::new();
        let top = (d as u32 - 1).min(k);
        for n in 1..=top {
            let negatives = partitions_at_most(k, d as u32 - n);
            for eta in partitions_exact(k, n) {
                for zeta in &negatives {
                    let mut entries = Vec::with_capacity(d);
                    entries.extend(eta.iter().map(|&p| i64::from(p)));
                    entries.resize(d - zeta.len(), 0);
                    entries.extend(zeta.iter().rev().map(|&p| -i64::from(p)));
                    slice.push(HighestWeight::new(entries)?);
                }
            }
        }
        slice.sort();
        out.extend(slice);
    }
    Ok(out)
}

/// `Σ_{λ∈Λ̃_t} d_λ` by explicit enumeration.
pub fn sum_of_dimensions(d: usize, t: u32) -> Result<BigUint> {
    Ok(enumerate_lambda_set(d, t)?.iter().map(weyl_dimension).sum())
}
