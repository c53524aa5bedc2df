//! Weyl dimension formula.

use num_bigint::BigUint;
use num_traits::One;

use super::weight::HighestWeight;

/// `d_λ = Π_{i<j} (λ_i − λ_j + j − i)/(j − i)`, evaluated exactly.
pub fn weyl_dimension(weight: &HighestWeight) -> BigUint {
    let e = weight.entries();
    let d = e.len();
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 0..d {
        for j in i + 1..d {
            let gap = (j - i) as u64;
            num *= (e[i] - e[j]) as u64 + gap;
            den *= gap;
        }
    }
    debug_assert!((&num % &den) == BigUint::from(0u32));
    num / den
}
