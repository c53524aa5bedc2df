//! Integer partitions: generation with part-count constraints and exact counts.

use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::Zero;

/// Partitions of `k` into exactly `n` positive parts, parts nonincreasing.
pub fn partitions_exact(k: u32, n: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    if n == 0 {
        if k == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    if n > k {
        return out;
    }
    let mut buf = Vec::with_capacity(n as usize);
    fill_exact(k, n, k, &mut buf, &mut out);
    out
}

fn fill_exact(rest: u32, parts: u32, max: u32, buf: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if parts == 0 {
        if rest == 0 {
            out.push(buf.clone());
        }
        return;
    }
    // Largest part must leave at least one unit per remaining part and
    // cannot exceed `max`; it must also be at least ceil(rest / parts).
    let hi = max.min(rest - (parts - 1));
    let lo = rest.div_ceil(parts);
    for p in (lo..=hi).rev() {
        buf.push(p);
        fill_exact(rest - p, parts - 1, p, buf, out);
        buf.pop();
    }
}

/// Partitions of `k` into at most `m` positive parts.
pub fn partitions_at_most(k: u32, m: u32) -> Vec<Vec<u32>> {
    (0..=m.min(k)).flat_map(|n| partitions_exact(k, n)).collect()
}

/// Table of `p_n(j)` (partitions of `j` into exactly `n` parts) for `j <= k`, `n <= k`.
fn exact_count_table(k: usize) -> Vec<Vec<BigUint>> {
    let mut table = alloc::vec![alloc::vec![BigUint::zero(); k + 1]; k + 1];
    table[0][0] = BigUint::from(1u32);
    for j in 1..=k {
        for n in 1..=j {
            // p_n(j) = p_{n-1}(j-1) + p_n(j-n)
            let a = table[j - 1][n - 1].clone();
            let b = table[j - n][n].clone();
            table[j][n] = a + b;
        }
    }
    table
}

/// Number of partitions of `k` into exactly `n` parts.
pub fn count_exact(k: u32, n: u32) -> BigUint {
    if n > k {
        return BigUint::zero();
    }
    exact_count_table(k as usize)[k as usize][n as usize].clone()
}

/// Number of partitions of `k` into at most `m` parts.
pub fn count_at_most(k: u32, m: u32) -> BigUint {
    let table = exact_count_table(k as usize);
    (0..=m.min(k) as usize).map(|n| table[k as usize][n].clone()).sum()
}

/// The partition number `p(k)`.
pub fn partition_number(k: u32) -> BigUint {
    count_at_most(k, k)
}

/// `α_{2k} = Σ_{1≤n≤d−1} p_n(k)·p̃_{d−n}(k)`: the number of labels in `Λ̃_t` with `‖λ‖₁ = 2k`.
pub fn count_irreps_by_norm(d: usize, k: u32) -> BigUint {
    assert!(d >= 2 && k >= 1, "count_irreps_by_norm requires d >= 2 and k >= 1");
    let table = exact_count_table(k as usize);
    let at_most = |m: usize| -> BigUint { (0..=m.min(k as usize)).map(|n| table[k as usize][n].clone()).sum() };
    let top = (d - 1).min(k as usize);
    (1..=top).map(|n| &table[k as usize][n] * at_most(d - n)).sum()
}
