//! Exact arithmetic: rational scalars, big-integer combinatorics, row
//! reduction over Q, and truncated multivariate power series.

pub mod matrix;
pub mod scalar;
pub mod series;

use num_bigint::BigUint;
use num_traits::{One, Zero};

/// `n!` as an arbitrary-precision integer.
pub fn factorial(n: u64) -> BigUint {
    let mut acc = BigUint::one();
    for i in 2..=n {
        acc *= BigUint::from(i);
    }
    acc
}

/// Binomial coefficient `C(n, k)` over arbitrary-precision integers.
/// Returns 0 when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= BigUint::from(n - i);
        acc /= BigUint::from(i + 1);
    }
    acc
}

/// Number of ways to write `s` as an ordered sum of `parts` nonnegative
/// integers: `C(s + parts - 1, s)` for `parts >= 1`, and `[s == 0]` for
/// `parts == 0` (the empty sum represents 0 and nothing else).
pub fn compositions_count(s: u64, parts: u64) -> BigUint {
    if parts == 0 {
        if s == 0 {
            BigUint::one()
        } else {
            BigUint::zero()
        }
    } else {
        binomial(s + parts - 1, s)
    }
}
