//! Kostant partition function of the `A_{d−1}` root system and the Kostant
//! multiplicity formula.
//!
//! The partition function counts decompositions over *all* positive roots
//! `L_i − L_j` (`i < j`), the standard convention. Counting over simple roots
//! only would give 1 on every point of the cone and break the multiplicity
//! formula for `d ≥ 3`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use super::weight::{HighestWeight, WeightVector};

/// Memoized counter for one rank `d`.
#[derive(Debug, Clone)]
pub struct KostantTable {
    d: usize,
    roots: Vec<(usize, usize)>,
    memo: BTreeMap<(Vec<i64>, usize), BigUint>,
}

impl KostantTable {
    pub fn new(d: usize) -> Self {
        let mut roots = Vec::with_capacity(d * (d - 1) / 2);
        for i in 0..d {
            for j in i + 1..d {
                roots.push((i, j));
            }
        }
        KostantTable { d, roots, memo: BTreeMap::new() }
    }

    /// Number of ways to write `v` as a nonnegative integer combination of positive roots.
    pub fn count(&mut self, v: &[i64]) -> BigUint {
        assert_eq!(v.len(), self.d);
        if !in_root_cone(v) {
            return BigUint::zero();
        }
        let mut work = v.to_vec();
        self.count_from(&mut work, 0)
    }

    fn count_from(&mut self, v: &mut Vec<i64>, r: usize) -> BigUint {
        if r == self.roots.len() {
            return if v.iter().all(|&x| x == 0) { BigUint::one() } else { BigUint::zero() };
        }
        let (i, j) = self.roots[r];
        if v[i] < 0 {
            return BigUint::zero();
        }
        let key = (v[i..].to_vec(), r);
        if let Some(hit) = self.memo.get(&key) {
            return hit.clone();
        }
        let top = v[i];
        let result = if j == self.d - 1 {
            // Last root with first index i: its coefficient is forced.
            v[i] -= top;
            v[j] += top;
            let c = self.count_from(v, r + 1);
            v[i] += top;
            v[j] -= top;
            c
        } else {
            let mut acc = BigUint::zero();
            for c in 0..=top {
                v[i] -= c;
                v[j] += c;
                acc += self.count_from(v, r + 1);
                v[i] += c;
                v[j] -= c;
            }
            acc
        };
        self.memo.insert(key, result.clone());
        result
    }
}

/// Integer vectors in the cone spanned by positive roots: prefix sums nonnegative, total zero.
pub(crate) fn in_root_cone(v: &[i64]) -> bool {
    let mut prefix = 0i64;
    for &x in v {
        prefix += x;
        if prefix < 0 {
            return false;
        }
    }
    prefix == 0
}

/// Kostant partition function `p(μ)`; zero for non-integral or non-zero-sum `μ`.
pub fn kostant_partition(mu: &WeightVector, d: usize) -> BigUint {
    if mu.d() != d {
        return BigUint::zero();
    }
    match mu.to_integers() {
        Some(v) => KostantTable::new(d).count(&v),
        None => BigUint::zero(),
    }
}

/// `Σ_{σ∈S_d} sgn(σ) p(σ·(λ+ρ) − (μ+ρ))` for integer `μ` with `Σμ = Σλ`.
///
/// Permutations are generated position by position; a branch is cut as soon as
/// a prefix sum of the difference vector goes negative, since such vectors lie
/// outside the positive root cone.
pub(crate) fn kostant_multiplicity(table: &mut KostantTable, weight: &HighestWeight, mu: &[i64]) -> BigInt {
    let d = weight.d();
    let lam = weight.entries();
    // ρ shifted to integers; only differences matter.
    let shifted: Vec<i64> = (0..d).map(|i| lam[i] + (d - 1 - i) as i64).collect();
    let target: Vec<i64> = (0..d).map(|i| mu[i] + (d - 1 - i) as i64).collect();
    let mut used = alloc::vec![false; d];
    let mut diff = alloc::vec![0i64; d];
    let mut acc = BigInt::zero();
    search(table, &shifted, &target, 0, 0, false, &mut used, &mut diff, &mut acc);
    acc
}

#[allow(clippy::too_many_arguments)]
fn search(
    table: &mut KostantTable,
    shifted: &[i64],
    target: &[i64],
    pos: usize,
    prefix: i64,
    odd: bool,
    used: &mut [bool],
    diff: &mut [i64],
    acc: &mut BigInt,
) {
    let d = shifted.len();
    if pos == d {
        if prefix != 0 {
            return;
        }
        let count = BigInt::from(table.count(diff));
        if odd {
            *acc -= count;
        } else {
            *acc += count;
        }
        return;
    }
    let mut smaller_unused = 0usize;
    for e in 0..d {
        if used[e] {
            continue;
        }
        let value = shifted[e] - target[pos];
        let next = prefix + value;
        // Inversions added by placing e: unused indices below e end up later.
        let flips = smaller_unused % 2 == 1;
        smaller_unused += 1;
        if next < 0 {
            continue;
        }
        used[e] = true;
        diff[pos] = value;
        search(table, shifted, target, pos + 1, next, odd ^ flips, used, diff, acc);
        used[e] = false;
    }
}

pub(crate) fn to_multiplicity(value: BigInt) -> BigUint {
    assert!(!value.is_negative(), "Kostant sum produced a negative multiplicity");
    value.to_biguint().unwrap_or_default()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use num_rational::Ratio;

    /// Exhaustive scan over coefficient vectors with each coefficient at most `bound`.
    fn brute(v: &[i64], bound: i64) -> u64 {
        let d = v.len();
        let mut roots = Vec::new();
        for i in 0..d {
            for j in i + 1..d {
                roots.push((i, j));
            }
        }
        let span = (bound + 1) as usize;
        let mut count = 0;
        for code in 0..span.pow(roots.len() as u32) {
            let mut c = code;
            let mut acc = vec![0i64; d];
            for &(i, j) in &roots {
                let k = (c % span) as i64;
                c /= span;
                acc[i] += k;
                acc[j] -= k;
            }
            if acc == v {
                count += 1;
            }
        }
        count
    }

    #[test]
    fn zero_has_one_decomposition() {
        assert_eq!(kostant_partition(&WeightVector::zero(4), 4), BigUint::one());
    }

    #[test]
    fn su2_single_root() {
        for m in -5..6i64 {
            let p = kostant_partition(&WeightVector::from_ints(&[m, -m]), 2);
            assert_eq!(p, BigUint::from(u32::from(m >= 0)));
        }
    }

    #[test]
    fn d3_adjoint_direction_has_two() {
        let p = kostant_partition(&WeightVector::from_ints(&[1, 0, -1]), 3);
        assert_eq!(p, BigUint::from(2u32));
        assert_eq!(brute(&[1, 0, -1], 2), 2);
    }

    #[test]
    fn rejects_non_integral_and_nonzero_sum() {
        let half = WeightVector::new(vec![Ratio::new(1, 2), Ratio::new(-1, 2)]);
        assert_eq!(kostant_partition(&half, 2), BigUint::zero());
        assert_eq!(kostant_partition(&WeightVector::from_ints(&[1, 0]), 2), BigUint::zero());
    }

    #[test]
    fn matches_exhaustive_scan() {
        let cases: &[&[i64]] = &[
            &[2, 0, -2],
            &[1, 1, -2],
            &[2, -1, -1],
            &[3, -1, -1, -1],
            &[2, 1, -1, -2],
            &[1, 0, 0, -1],
            &[0, 2, -1, -1],
            &[-1, 1, 0, 0],
        ];
        for v in cases {
            let l1: i64 = v.iter().map(|x| x.abs()).sum();
            let got = kostant_partition(&WeightVector::from_ints(v), v.len());
            assert_eq!(got, BigUint::from(brute(v, l1)), "v={v:?}");
        }
    }
}
