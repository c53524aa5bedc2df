//! Per-irrep engine: multiplicities, Frobenius–Schur indicators `δ_λ(n)` and
//! the `γ_λ(k)` coefficients entering the symmetric master bound.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_rational::{BigRational, Ratio};
use num_traits::{One, Zero};

use super::dimension::weyl_dimension;
use super::freudenthal::FreudenthalTable;
use super::kostant::{kostant_multiplicity, to_multiplicity, KostantTable};
use super::perm::for_each_permutation;
use super::weight::{rho_difference, HighestWeight, WeightVector};
use crate::error::{Error, Result};

/// Default largest `d` for which sums over the Weyl group `S_d` are evaluated.
pub const DEFAULT_WEYL_CAP: usize = 8;

/// Cached representation data for one highest weight.
#[derive(Debug, Clone)]
pub struct Irrep {
    weight: HighestWeight,
    dim: BigUint,
    weyl_cap: usize,
    kostant: KostantTable,
    cache: BTreeMap<Vec<i64>, BigUint>,
}

impl Irrep {
    pub fn new(weight: &HighestWeight) -> Self {
        Self::with_weyl_cap(weight, DEFAULT_WEYL_CAP)
    }

    pub fn with_weyl_cap(weight: &HighestWeight, weyl_cap: usize) -> Self {
        Irrep {
            weight: weight.clone(),
            dim: weyl_dimension(weight),
            weyl_cap,
            kostant: KostantTable::new(weight.d()),
            cache: BTreeMap::new(),
        }
    }

    pub fn weight(&self) -> &HighestWeight {
        &self.weight
    }

    pub fn d(&self) -> usize {
        self.weight.d()
    }

    pub fn dimension(&self) -> &BigUint {
        &self.dim
    }

    fn check_cap(&self) -> Result<()> {
        if self.d() > self.weyl_cap {
            Err(Error::WeylCapExceeded { d: self.d(), cap: self.weyl_cap })
        } else {
            Ok(())
        }
    }

    /// `m_λ(μ)` by the Kostant formula. Zero when `μ` is not integral, when
    /// `Σμ ≠ Σλ` or when `‖μ‖₁ > ‖λ‖₁`.
    pub fn multiplicity(&mut self, mu: &WeightVector) -> Result<BigUint> {
        self.check_cap()?;
        if mu.d() != self.d() {
            return Err(Error::InvalidArgument("weight length differs from d"));
        }
        match mu.to_integers() {
            Some(v) if v.iter().sum::<i64>() == self.weight.sum() => Ok(self.integral_multiplicity(&v)),
            _ => Ok(BigUint::zero()),
        }
    }

    fn integral_multiplicity(&mut self, mu: &[i64]) -> BigUint {
        let l1: u64 = mu.iter().map(|x| x.unsigned_abs()).sum();
        if l1 > self.weight.l1_norm() {
            return BigUint::zero();
        }
        let mut key = mu.to_vec();
        key.sort_unstable_by(|a, b| b.cmp(a));
        if let Some(hit) = self.cache.get(&key) {
            return hit.clone();
        }
        let value = to_multiplicity(kostant_multiplicity(&mut self.kostant, &self.weight, &key));
        self.cache.insert(key, value.clone());
        value
    }

    /// Multiplicity of an SU(d) weight: `μ` is moved along `(1, …, 1)` into the
    /// coset of `λ` and must be integral there.
    pub fn su_multiplicity(&mut self, mu: &WeightVector) -> Result<BigUint> {
        self.check_cap()?;
        match mu.lift_to_sum(self.weight.sum()) {
            Some(v) => Ok(self.integral_multiplicity(&v)),
            None => Ok(BigUint::zero()),
        }
    }

    /// Multiplicity of the zero weight of the SU(d) restriction (`m_λ(0)` when `Σλ = 0`).
    pub fn zero_weight_multiplicity(&mut self) -> Result<BigUint> {
        self.su_multiplicity(&WeightVector::zero(self.d()))
    }

    /// `δ_λ(n) = (1/d_λ) ∫ χ_λ(Uⁿ) dU`.
    pub fn fs_indicator(&mut self, n: i64) -> Result<BigRational> {
        if n == 0 {
            return Ok(BigRational::one());
        }
        if n.unsigned_abs() > self.d() as u64 {
            let m0 = self.zero_weight_multiplicity()?;
            return Ok(self.over_dim(BigInt::from(m0)));
        }
        self.fs_indicator_weyl_sum(n)
    }

    /// The full signed sum `(1/d_λ) Σ_{σ∈S_d} sgn(σ) m_λ((ρ − σ·ρ)/n)` for any `n ≠ 0`,
    /// without the `|n| > d` shortcut.
    pub fn fs_indicator_weyl_sum(&mut self, n: i64) -> Result<BigRational> {
        if n == 0 {
            return Err(Error::InvalidArgument("Weyl sum needs n != 0"));
        }
        let total = self.signed_weyl_sum(n, true)?;
        Ok(self.over_dim(total))
    }

    fn signed_weyl_sum(&mut self, n: i64, include_identity: bool) -> Result<BigInt> {
        self.check_cap()?;
        let d = self.d();
        let target = self.weight.sum();
        let bound = self.weight.l1_norm();
        let mut perms: Vec<(Vec<i64>, bool)> = Vec::new();
        for_each_permutation(d, |perm, odd| {
            if !include_identity && perm.iter().enumerate().all(|(i, &p)| i == p) {
                return;
            }
            // Integrality and norm tests come first; most permutations stop here.
            if let Some(v) = rho_difference(perm, n).lift_to_sum(target) {
                if v.iter().map(|x| x.unsigned_abs()).sum::<u64>() <= bound {
                    perms.push((v, odd));
                }
            }
        });
        let mut total = BigInt::zero();
        for (v, odd) in perms {
            let m = BigInt::from(self.integral_multiplicity(&v));
            if odd {
                total -= m;
            } else {
                total += m;
            }
        }
        Ok(total)
    }

    fn over_dim(&self, numer: BigInt) -> BigRational {
        Ratio::new(numer, BigInt::from(self.dim.clone()))
    }

    /// `γ_λ(k)` for `k ∈ [−d, d]`:
    /// `γ(0) = 1 − m_λ(0)/d_λ`, otherwise `(1/d_λ) Σ_{σ≠id} sgn(σ) m_λ((ρ − σ·ρ)/k)`.
    pub fn gamma_coefficients(&mut self) -> Result<BTreeMap<i64, BigRational>> {
        let d = self.d() as i64;
        let m0 = BigInt::from(self.zero_weight_multiplicity()?);
        let mut out = BTreeMap::new();
        out.insert(0, BigRational::one() - self.over_dim(m0));
        for k in (-d..=d).filter(|&k| k != 0) {
            let sum = self.signed_weyl_sum(k, false)?;
            out.insert(k, self.over_dim(sum));
        }
        Ok(out)
    }
}

/// `m_λ(μ)` via the Kostant formula with the default Weyl-group cap.
pub fn weight_multiplicity(weight: &HighestWeight, mu: &WeightVector) -> Result<BigUint> {
    Irrep::new(weight).multiplicity(mu)
}

/// `m_λ(μ)` via Freudenthal's recursion; same contract as [`weight_multiplicity`].
pub fn freudenthal_multiplicity(weight: &HighestWeight, mu: &WeightVector) -> Result<BigUint> {
    if weight.d() > DEFAULT_WEYL_CAP {
        return Err(Error::WeylCapExceeded { d: weight.d(), cap: DEFAULT_WEYL_CAP });
    }
    if mu.d() != weight.d() {
        return Err(Error::InvalidArgument("weight length differs from d"));
    }
    match mu.to_integers() {
        Some(v) if v.iter().sum::<i64>() == weight.sum() => Ok(FreudenthalTable::new(weight).multiplicity(&v)),
        _ => Ok(BigUint::zero()),
    }
}

/// `δ_λ(n)` with the default Weyl-group cap.
pub fn fs_indicator(weight: &HighestWeight, n: i64) -> Result<BigRational> {
    Irrep::new(weight).fs_indicator(n)
}

/// `γ_λ(k)` for `k ∈ [−d, d]` with the default Weyl-group cap.
pub fn gamma_coefficients(weight: &HighestWeight) -> Result<BTreeMap<i64, BigRational>> {
    Irrep::new(weight).gamma_coefficients()
}

/// Real, complex or quaternionic type of an irrep.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RealityClass {
    Real,
    Complex,
    Quaternionic,
}

impl RealityClass {
    /// The Frobenius–Schur indicator `∫ χ(U²) dU ∈ {1, 0, −1}`.
    pub fn indicator(self) -> i32 {
        match self {
            RealityClass::Real => 1,
            RealityClass::Complex => 0,
            RealityClass::Quaternionic => -1,
        }
    }
}

/// Type of the SU(d) restriction of `π_λ`, in closed form: self-dual iff the
/// Dynkin label is a palindrome; a self-dual irrep is quaternionic iff
/// `Σ_i i(d−i) λ^s_i` is odd. Valid for any `d`.
pub fn reality_class(weight: &HighestWeight) -> RealityClass {
    let label = weight.to_dynkin();
    let s = label.entries();
    if s.iter().ne(s.iter().rev()) {
        return RealityClass::Complex;
    }
    let d = weight.d() as u64;
    let parity =
        s.iter().enumerate().map(|(i, &l)| ((i as u64 + 1) * (d - i as u64 - 1) % 2) * (l % 2)).sum::<u64>() % 2;
    if parity == 0 {
        RealityClass::Real
    } else {
        RealityClass::Quaternionic
    }
}

/// `δ_λ(2) = indicator / d_λ` from [`reality_class`]; no Weyl-group sum.
pub fn fs_indicator_two(weight: &HighestWeight) -> BigRational {
    Ratio::new(BigInt::from(reality_class(weight).indicator()), BigInt::from(weyl_dimension(weight)))
}
