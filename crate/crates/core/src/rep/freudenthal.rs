//! Freudenthal's recursion for weight multiplicities, used as an independent
//! check on the Kostant route.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use super::weight::HighestWeight;

/// Multiplicities of the dominant weights of `π_λ`, filled from the top down.
#[derive(Debug, Clone)]
pub struct FreudenthalTable {
    weight: HighestWeight,
    rho: Vec<i64>,
    top_norm: i64,
    memo: BTreeMap<Vec<i64>, BigUint>,
}

impl FreudenthalTable {
    pub fn new(weight: &HighestWeight) -> Self {
        let d = weight.d();
        let rho: Vec<i64> = (0..d).map(|i| (d - 1 - i) as i64).collect();
        let top_norm = norm_sq_shifted(weight.entries(), &rho);
        FreudenthalTable { weight: weight.clone(), rho, top_norm, memo: BTreeMap::new() }
    }

    /// `m_λ(μ)` for integer `μ`; zero unless `Σμ = Σλ` and `μ` lies in the weight polytope.
    pub fn multiplicity(&mut self, mu: &[i64]) -> BigUint {
        let mut dominant = mu.to_vec();
        dominant.sort_unstable_by(|a, b| b.cmp(a));
        self.dominant_multiplicity(&dominant)
    }

    fn is_weight(&self, dominant: &[i64]) -> bool {
        let lam = self.weight.entries();
        let mut a = 0i64;
        let mut b = 0i64;
        for (x, y) in dominant.iter().zip(lam) {
            a += x;
            b += y;
            if a > b {
                return false;
            }
        }
        a == b
    }

    fn dominant_multiplicity(&mut self, dominant: &[i64]) -> BigUint {
        if !self.is_weight(dominant) {
            return BigUint::zero();
        }
        if dominant == self.weight.entries() {
            return BigUint::one();
        }
        if let Some(hit) = self.memo.get(dominant) {
            return hit.clone();
        }
        let d = dominant.len();
        let mut acc = BigInt::zero();
        let mut shifted = dominant.to_vec();
        for i in 0..d {
            for j in i + 1..d {
                // α = L_i − L_j; walk the α-string upward until it leaves the weight set.
                let mut k = 1i64;
                loop {
                    shifted[i] = dominant[i] + k;
                    shifted[j] = dominant[j] - k;
                    let mut key = shifted.clone();
                    key.sort_unstable_by(|a, b| b.cmp(a));
                    if !self.is_weight(&key) {
                        break;
                    }
                    let m = self.dominant_multiplicity(&key);
                    let pairing = shifted[i] - shifted[j];
                    acc += BigInt::from(m) * pairing;
                    k += 1;
                }
                shifted[i] = dominant[i];
                shifted[j] = dominant[j];
            }
        }
        let gap = self.top_norm - norm_sq_shifted(dominant, &self.rho);
        assert!(gap > 0, "Freudenthal denominator vanished below the highest weight");
        let numer: BigInt = acc * 2;
        let value: BigInt = numer / BigInt::from(gap);
        let value = value.to_biguint().expect("Freudenthal recursion produced a negative value");
        self.memo.insert(dominant.to_vec(), value.clone());
        value
    }

    /// All dominant weights with nonzero multiplicity, with those multiplicities.
    pub fn dominant_weights(&mut self) -> Vec<(Vec<i64>, BigUint)> {
        let lam = self.weight.entries().to_vec();
        let mut found = BTreeMap::new();
        let mut stack = alloc::vec![lam];
        while let Some(w) = stack.pop() {
            if found.contains_key(&w) {
                continue;
            }
            let m = self.dominant_multiplicity(&w);
            if m.is_zero() {
                continue;
            }
            let d = w.len();
            for i in 0..d {
                for j in i + 1..d {
                    let mut next = w.clone();
                    next[i] -= 1;
                    next[j] += 1;
                    next.sort_unstable_by(|a, b| b.cmp(a));
                    if self.is_weight(&next) && !found.contains_key(&next) {
                        stack.push(next);
                    }
                }
            }
            found.insert(w, m);
        }
        found.into_iter().collect()
    }
}

fn norm_sq_shifted(v: &[i64], rho: &[i64]) -> i64 {
    v.iter().zip(rho).map(|(a, b)| (a + b) * (a + b)).sum()
}
