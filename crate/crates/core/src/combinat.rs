//! Exact binomial coefficients and small counting helpers.

use num_bigint::BigUint;
use num_traits::{One, Zero};

/// Binomial coefficient `C(n, k)` with the summation convention
/// `C(n, k) = 0` for `n < 0`, `k < 0` or `k > n`.
pub fn binomial(n: i64, k: i64) -> BigUint {
    if n < 0 || k < 0 || k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k) as u64;
    let n = n as u64;
    let mut acc = BigUint::one();
    for i in 1..=k {
        acc = acc * BigUint::from(n - k + i) / BigUint::from(i);
    }
    acc
}

/// Number of unordered pairs from `m` objects: `m(m-1)/2`.
pub fn pairs(m: &BigUint) -> BigUint {
    if m.is_zero() {
        return BigUint::zero();
    }
    (m * (m - 1u8)) >> 1
}

/// Number of unordered pairs with repetition: `m(m+1)/2`.
pub fn pairs_with_repetition(m: &BigUint) -> BigUint {
    (m * (m + 1u8)) >> 1
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_small() {
        assert_eq!(binomial(5, 2), BigUint::from(10u32));
        assert_eq!(binomial(11, 5), BigUint::from(462u32));
        assert_eq!(binomial(0, 0), BigUint::one());
        assert_eq!(binomial(17, 5), BigUint::from(6188u32));
    }

    #[test]
    fn binomial_out_of_range_is_zero() {
        assert_eq!(binomial(-1, 0), BigUint::zero());
        assert_eq!(binomial(3, 5), BigUint::zero());
        assert_eq!(binomial(3, -2), BigUint::zero());
    }

    #[test]
    fn binomial_symmetry() {
        for n in 0..20i64 {
            for k in 0..=n {
                assert_eq!(binomial(n, k), binomial(n, n - k));
            }
        }
    }

    #[test]
    fn pair_counts() {
        assert_eq!(pairs(&BigUint::zero()), BigUint::zero());
        assert_eq!(pairs(&BigUint::from(1u8)), BigUint::zero());
        assert_eq!(pairs(&BigUint::from(426u32)), BigUint::from(90525u32));
        assert_eq!(
            pairs_with_repetition(&BigUint::from(3u8)),
            BigUint::from(6u8)
        );
    }
}
