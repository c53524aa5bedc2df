//! Weight labels for U(d) and SU(d) irreducible representations.

use alloc::vec::Vec;
use core::fmt;

use num_rational::Ratio;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

/// A U(d) highest weight: a nonincreasing integer sequence of length `d >= 2`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HighestWeight {
    entries: Vec<i64>,
}

impl HighestWeight {
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        if entries.len() < 2 {
            return Err(Error::InvalidArgument("highest weight needs d >= 2 entries"));
        }
        if entries.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotDominant);
        }
        Ok(HighestWeight { entries })
    }

    /// The trivial label `(0, ..., 0)`.
    pub fn zero(d: usize) -> Self {
        HighestWeight { entries: alloc::vec![0; d.max(2)] }
    }

    /// `(a, 0, ..., 0, -b)` style labels are common in tests; this builds
    /// `head ++ zeros ++ tail` of total length `d`.
    pub fn padded(d: usize, head: &[i64], tail: &[i64]) -> Result<Self> {
        if head.len() + tail.len() > d {
            return Err(Error::InvalidArgument("head and tail longer than d"));
        }
        let mut entries = Vec::with_capacity(d);
        entries.extend_from_slice(head);
        entries.resize(d - tail.len(), 0);
        entries.extend_from_slice(tail);
        Self::new(entries)
    }

    pub fn d(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn sum(&self) -> i64 {
        self.entries.iter().sum()
    }

    pub fn l1_norm(&self) -> u64 {
        self.entries.iter().map(|e| e.unsigned_abs()).sum()
    }

    /// Sum of the positive entries, `Σ(λ₊)`.
    pub fn positive_sum(&self) -> u64 {
        self.entries.iter().filter(|&&e| e > 0).map(|&e| e as u64).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&e| e == 0)
    }

    /// Membership in `Λ_t`: zero sum and positive part at most `t`.
    pub fn in_lambda_set(&self, t: u32) -> bool {
        self.sum() == 0 && self.positive_sum() <= u64::from(t)
    }

    /// Highest weight of the contragredient representation, `-reverse(λ)`.
    pub fn dual(&self) -> Self {
        HighestWeight { entries: self.entries.iter().rev().map(|e| -e).collect() }
    }

    pub fn to_dynkin(&self) -> DynkinLabel {
        DynkinLabel { entries: self.entries.windows(2).map(|w| (w[0] - w[1]) as u64).collect() }
    }
}

impl fmt::Display for HighestWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str(")")
    }
}

/// An SU(d) highest weight in the fundamental-weight basis, `λ^s_i = λ_i − λ_{i+1}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DynkinLabel {
    entries: Vec<u64>,
}

impl DynkinLabel {
    pub fn new(entries: Vec<u64>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidArgument("Dynkin label needs d - 1 >= 1 entries"));
        }
        Ok(DynkinLabel { entries })
    }

    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    pub fn d(&self) -> usize {
        self.entries.len() + 1
    }

    /// `λ = (m + Σ_{i≥1} λ^s_i, m + Σ_{i≥2} λ^s_i, …, m)`.
    pub fn to_u_weight(&self, m: i64) -> HighestWeight {
        let d = self.d();
        let mut entries = alloc::vec![m; d];
        for i in (0..d - 1).rev() {
            entries[i] = entries[i + 1] + self.entries[i] as i64;
        }
        HighestWeight { entries }
    }

    /// The shift `m = −(1/d) Σ_j j λ^s_j` giving a zero-sum lift, if it is an integer.
    pub fn zero_sum_shift(&self) -> Option<i64> {
        let d = self.d() as i64;
        let weighted: i64 = self.entries.iter().enumerate().map(|(j, &l)| (j as i64 + 1) * l as i64).sum();
        if weighted % d == 0 {
            Some(-weighted / d)
        } else {
            None
        }
    }

    /// The unique U(d) lift with `Σ(λ) = 0`; exists iff the SU(d) irrep has a zero weight.
    pub fn to_zero_sum_weight(&self) -> Result<HighestWeight> {
        self.zero_sum_shift().map(|m| self.to_u_weight(m)).ok_or(Error::NoZeroSumLift)
    }
}

/// A weight with rational coordinates in the `L_i` basis.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeightVector {
    entries: Vec<Ratio<i64>>,
}

impl WeightVector {
    pub fn new(entries: Vec<Ratio<i64>>) -> Self {
        WeightVector { entries }
    }

    pub fn from_ints(entries: &[i64]) -> Self {
        WeightVector { entries: entries.iter().map(|&e| Ratio::from_integer(e)).collect() }
    }

    pub fn zero(d: usize) -> Self {
        WeightVector { entries: alloc::vec![Ratio::zero(); d] }
    }

    pub fn d(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Ratio<i64>] {
        &self.entries
    }

    pub fn sum(&self) -> Ratio<i64> {
        self.entries.iter().fold(Ratio::zero(), |acc, e| acc + e)
    }

    pub fn l1_norm(&self) -> Ratio<i64> {
        self.entries.iter().fold(Ratio::zero(), |acc, e| acc + e.abs())
    }

    /// Integer coordinates, if every entry is integral.
    pub fn to_integers(&self) -> Option<Vec<i64>> {
        self.entries.iter().map(|e| e.is_integer().then(|| e.to_integer())).collect()
    }

    /// Moves a weight of the SU(d) torus into the U(d) coset with coordinate sum `target`,
    /// returning integer coordinates if the shifted weight is integral.
    pub(crate) fn lift_to_sum(&self, target: i64) -> Option<Vec<i64>> {
        let d = self.d() as i64;
        let shift = (Ratio::from_integer(target) - self.sum()) / Ratio::from_integer(d);
        self.entries
            .iter()
            .map(|e| {
                let v = e + shift;
                v.is_integer().then(|| v.to_integer())
            })
            .collect()
    }
}

impl From<&HighestWeight> for WeightVector {
    fn from(w: &HighestWeight) -> Self {
        WeightVector::from_ints(w.entries())
    }
}

/// `(ρ − σ·ρ)/n` in integer-numerator form: entry `i` is `(σ(i) − i)/n`.
pub(crate) fn rho_difference(perm: &[usize], n: i64) -> WeightVector {
    WeightVector::new(perm.iter().enumerate().map(|(i, &s)| Ratio::new(s as i64 - i as i64, n)).collect())
}
