//! Permutation enumeration with parity.

use alloc::vec::Vec;

/// Calls `visit(perm, odd)` for every permutation of `0..n` (Heap's algorithm).
pub fn for_each_permutation(n: usize, mut visit: impl FnMut(&[usize], bool)) {
    let mut perm: Vec<usize> = (0..n).collect();
    let mut counters = alloc::vec![0usize; n];
    let mut odd = false;
    visit(&perm, odd);
    let mut i = 1;
    while i < n {
        if counters[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(counters[i], i);
            }
            odd = !odd;
            visit(&perm, odd);
            counters[i] += 1;
            i = 1;
        } else {
            counters[i] = 0;
            i += 1;
        }
    }
}
