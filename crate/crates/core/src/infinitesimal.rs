//! Infinitesimal Hodge numbers `h_inf^k = dim g^{-k,k}` of the adjoint
//! decomposition, the level, and the period-domain dimension.
//!
//! For a canonical signature the graded piece `g^{-k,k}` of the derived
//! algebra decomposes into one block per unordered pair of Hodge blocks
//! `(a, b)` with `a - b = k`. A pair with `a + b > w` contributes the full
//! product `h^a h^b` (its mirror pair is then determined by the pairing); a
//! self-mirror pair with `a + b = w` contributes the (anti)symmetric part of
//! `Hom`: `h(h-1)/2` in even weight, `h(h+1)/2` in odd weight. Summing the
//! resulting `h_inf^k` over all of `Z` recovers `D(D-1)/2` resp. `d(2d+1)`,
//! which the test suite checks on random signatures.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::combinat::{pairs, pairs_with_repetition};
use crate::signature::{NormalizedSignature, Parity};

/// The map `k -> h_inf^k` for `k >= 0`; negative indices follow by the
/// symmetry `h_inf^k = h_inf^{-k}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InfinitesimalNumbers {
    parity: Parity,
    dim_v: BigUint,
    /// Nonzero values only, keyed by `k >= 0`.
    values: BTreeMap<i64, BigUint>,
}

impl InfinitesimalNumbers {
    /// `h_inf^k`; symmetric in the sign of `k`.
    pub fn get(&self, k: i64) -> BigUint {
        self.values
            .get(&k.abs())
            .cloned()
            .unwrap_or_else(BigUint::zero)
    }

    /// Nonzero `(k, h_inf^k)` for `k >= 0`, ascending.
    pub fn iter(&self) -> impl Iterator<Item = (i64, &BigUint)> {
        self.values.iter().map(|(&k, v)| (k, v))
    }

    /// Largest `k >= 0` with `h_inf^k != 0`.
    pub fn level(&self) -> i64 {
        self.values.keys().next_back().copied().unwrap_or(0)
    }

    /// Complex dimension of the period domain: the sum over `k >= 1`.
    pub fn domain_dimension(&self) -> BigUint {
        self.values
            .iter()
            .filter(|(&k, _)| k >= 1)
            .map(|(_, v)| v)
            .sum()
    }

    /// `Sigma_{k in Z} h_inf^k = h_inf^0 + 2 Sigma_{k >= 1} h_inf^k`.
    pub fn total(&self) -> BigUint {
        self.get(0) + (self.domain_dimension() << 1)
    }

    /// Dimension of the derived algebra predicted by the parity class:
    /// `D(D-1)/2` on `D = dim V` for orthogonal signatures, `d(2d+1)` with
    /// `2d = dim V` for symplectic ones.
    pub fn expected_algebra_dimension(&self) -> BigUint {
        match self.parity {
            Parity::Orthogonal => pairs(&self.dim_v),
            Parity::Symplectic => {
                let d = &self.dim_v >> 1;
                &d * ((&d << 1) + 1u8)
            }
        }
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn dim_v(&self) -> &BigUint {
        &self.dim_v
    }
}

/// Which clause of the level criterion fired; see
/// [`NormalizedSignature::level_at_least_three`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LevelCase {
    /// Odd weight `>= 3`.
    OddWeight,
    /// Even weight: some `h^{n+k,n-k} > 1` with `k >= 2`.
    RepeatedHighBlock { k: i64 },
    /// Even weight: a nonzero product `h^{2n-j,j} h^{2n-j-2k,j+2k}`, `k >= 2`.
    EvenSeparatedPair { k: i64, j: i64 },
    /// Even weight: a nonzero product `h^{2n-j,j} h^{2n-j-2k-1,j+2k+1}`,
    /// `1 <= k <= n-1`.
    OddSeparatedPair { k: i64, j: i64 },
}

impl LevelCase {
    pub fn label(&self) -> &'static str {
        match self {
            LevelCase::OddWeight => "1",
            LevelCase::RepeatedHighBlock { .. } => "2.a",
            LevelCase::EvenSeparatedPair { .. } => "2.b",
            LevelCase::OddSeparatedPair { .. } => "2.c",
        }
    }
}

impl NormalizedSignature {
    /// Compute every nonzero `h_inf^k`.
    pub fn infinitesimal_numbers(&self) -> InfinitesimalNumbers {
        let parity = self.parity();
        let w = self.weight();
        let support: Vec<(i64, &BigUint)> = self.support().collect();
        let mut values: BTreeMap<i64, BigUint> = BTreeMap::new();
        for &(a, ha) in &support {
            for &(b, hb) in &support {
                if b > a {
                    break;
                }
                let k = a - b;
                if a + b > w {
                    *values.entry(k).or_default() += ha * hb;
                } else if a + b == w {
                    // self-mirror pair: only the (anti)symmetric part survives
                    let part = match parity {
                        Parity::Orthogonal => pairs(ha),
                        Parity::Symplectic => pairs_with_repetition(ha),
                    };
                    *values.entry(k).or_default() += part;
                }
            }
        }
        values.retain(|_, v| !v.is_zero());
        InfinitesimalNumbers {
            parity,
            dim_v: self.dim_v().clone(),
            values,
        }
    }

    /// Largest `k` with `g^{-k,k}` nonzero; at most the weight.
    pub fn level(&self) -> i64 {
        self.infinitesimal_numbers().level()
    }

    /// Case analysis deciding `level >= 3` without computing the
    /// infinitesimal numbers; the label of the first matching clause is
    /// returned. Kept independent of [`Self::infinitesimal_numbers`] so the
    /// two routes can be checked against each other.
    pub fn level_at_least_three(&self) -> Option<LevelCase> {
        let w = self.weight();
        if w % 2 != 0 {
            return (w >= 3).then_some(LevelCase::OddWeight);
        }
        let n = w / 2;
        let support: Vec<(i64, BigUint)> = self.support().map(|(p, v)| (p, v.clone())).collect();

        // (2.a) minimal k >= 2 with h^{n+k,n-k} > 1
        let mut case_a: Option<i64> = None;
        for (p, value) in &support {
            let k = p - n;
            if k >= 2 && *value > BigUint::from(1u8) {
                case_a = Some(case_a.map_or(k, |best: i64| best.min(k)));
            }
        }
        if let Some(k) = case_a {
            return Some(LevelCase::RepeatedHighBlock { k });
        }

        // (2.b)/(2.c): support pairs a >= b with a + b > w; the separation
        // a - b >= 4 even gives k = (a-b)/2, odd >= 3 gives k = (a-b-1)/2,
        // and j = 2n - a in both clauses.
        let mut case_b: Option<(i64, i64)> = None;
        let mut case_c: Option<(i64, i64)> = None;
        for (a, _) in &support {
            for (b, _) in &support {
                if b > a || a + b <= w {
                    continue;
                }
                let m = a - b;
                let j = 2 * n - a;
                if m >= 4 && m % 2 == 0 {
                    let key = (m / 2, j);
                    case_b = Some(case_b.map_or(key, |best| best.min(key)));
                } else if m >= 3 {
                    let key = ((m - 1) / 2, j);
                    case_c = Some(case_c.map_or(key, |best| best.min(key)));
                }
            }
        }
        if let Some((k, j)) = case_b {
            return Some(LevelCase::EvenSeparatedPair { k, j });
        }
        if let Some((k, j)) = case_c {
            return Some(LevelCase::OddSeparatedPair { k, j });
        }
        None
    }

    /// Complex dimension of the period domain, `Sigma_{k >= 1} h_inf^k`.
    pub fn domain_dimension(&self) -> BigUint {
        self.infinitesimal_numbers().domain_dimension()
    }
}
