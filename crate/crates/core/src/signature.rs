//! Hodge-number signatures: validation, the Tate-twist normal form, and the
//! orthogonal `(r, s)` split.
//!
//! A signature is a weight `w >= 1` together with a finitely supported map
//! `p -> h^{p, w-p}` of nonnegative integers. The canonical form enforced by
//! [`HodgeSignature::normalize`] has `min{p : h^p != 0} = 0`, which forces
//! `h^{w,0} > 0` and kills all negative indices. Downstream computations only
//! accept the canonical form ([`NormalizedSignature`]), so there is never any
//! ambiguity about which weight a derived quantity refers to.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::Zero;
use thiserror::Error;

/// Parity class of the polarization, determined by the weight.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    /// Even weight: the polarization is symmetric.
    Orthogonal,
    /// Odd weight: the polarization is alternating and `dim V` is even.
    Symplectic,
}

impl Parity {
    pub fn of_weight(weight: i64) -> Self {
        if weight.rem_euclid(2) == 0 {
            Parity::Orthogonal
        } else {
            Parity::Symplectic
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Parity::Orthogonal => "orthogonal",
            Parity::Symplectic => "symplectic",
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// A raw signature as supplied by a caller. May violate the support
/// convention (`h^{w,0} > 0`, no negative indices); see [`Self::validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HodgeSignature {
    weight: i64,
    /// Nonzero entries only, keyed by `p` (so `q = weight - p`).
    numbers: BTreeMap<i64, BigUint>,
}

/// One named invariant violation found by [`HodgeSignature::validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ValidationIssue {
    /// `h^{p,q} != h^{q,p}`.
    AsymmetricNumbers {
        p: i64,
        q: i64,
        left: BigUint,
        right: BigUint,
    },
    /// All Hodge numbers vanish.
    EmptySupport,
    /// `h^{w,0} = 0`: the support does not reach the stated weight.
    TopNumberZero { weight: i64 },
    /// Support at an index with `p < 0` or `q < 0`.
    IndexOutOfRange { p: i64, q: i64 },
    /// All support sits in a single block, so normalization would produce
    /// weight zero.
    ZeroWeight,
}

impl ValidationIssue {
    pub fn name(&self) -> &'static str {
        match self {
            ValidationIssue::AsymmetricNumbers { .. } => "asymmetric-numbers",
            ValidationIssue::EmptySupport => "empty-support",
            ValidationIssue::TopNumberZero { .. } => "convention-top-number-zero",
            ValidationIssue::IndexOutOfRange { .. } => "convention-index-out-of-range",
            ValidationIssue::ZeroWeight => "zero-weight",
        }
    }
}

impl fmt::Display for ValidationIssue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ValidationIssue::AsymmetricNumbers { p, q, left, right } => write!(
                f,
                "h^{{{p},{q}}} = {left} but h^{{{q},{p}}} = {right}; Hodge symmetry fails"
            ),
            ValidationIssue::EmptySupport => write!(f, "all Hodge numbers are zero"),
            ValidationIssue::TopNumberZero { weight } => {
                write!(f, "h^{{{weight},0}} = 0; a Tate twist is required")
            }
            ValidationIssue::IndexOutOfRange { p, q } => {
                write!(f, "support at h^{{{p},{q}}} lies outside 0..=weight")
            }
            ValidationIssue::ZeroWeight => {
                write!(f, "all support in one block; normalized weight would be 0")
            }
        }
    }
}

/// Outcome of [`HodgeSignature::validate`]: every violated invariant, split
/// into hard errors and twist-repairable warnings.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub errors: Vec<ValidationIssue>,
    pub warnings: Vec<ValidationIssue>,
}

impl ValidationReport {
    /// All invariants hold as stated.
    pub fn accepted(&self) -> bool {
        self.errors.is_empty() && self.warnings.is_empty()
    }

    /// No hard errors; [`HodgeSignature::normalize`] will succeed.
    pub fn normalizable(&self) -> bool {
        self.errors.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SignatureError {
    #[error("hodge numbers are not symmetric: h^{{{p},{q}}} = {left}, h^{{{q},{p}}} = {right}")]
    AsymmetricNumbers {
        p: i64,
        q: i64,
        left: BigUint,
        right: BigUint,
    },
    #[error("signature has empty support")]
    EmptySupport,
    #[error("all support in one block; normalized weight would be 0")]
    ZeroWeight,
    #[error("operation requires a {expected} signature, got weight {weight}")]
    WrongParity { expected: Parity, weight: i64 },
}

impl HodgeSignature {
    /// Build a raw signature from `(p, h^{p, weight-p})` entries. Zero values
    /// are dropped; a repeated index keeps the last value.
    pub fn new(weight: i64, entries: impl IntoIterator<Item = (i64, BigUint)>) -> Self {
        let mut numbers = BTreeMap::new();
        for (p, value) in entries {
            if value.is_zero() {
                numbers.remove(&p);
            } else {
                numbers.insert(p, value);
            }
        }
        HodgeSignature { weight, numbers }
    }

    pub fn from_counts(weight: i64, entries: &[(i64, u64)]) -> Self {
        Self::new(weight, entries.iter().map(|&(p, v)| (p, BigUint::from(v))))
    }

    /// Dense constructor: values listed from `h^{w,0}` down to `h^{0,w}`.
    pub fn dense(weight: i64, top_down: &[u64]) -> Self {
        Self::new(
            weight,
            top_down
                .iter()
                .enumerate()
                .map(|(i, &v)| (weight - i as i64, BigUint::from(v))),
        )
    }

    pub fn weight(&self) -> i64 {
        self.weight
    }

    /// `h^{p, w-p}`, zero off the support.
    pub fn hodge(&self, p: i64) -> BigUint {
        self.numbers.get(&p).cloned().unwrap_or_else(BigUint::zero)
    }

    /// Nonzero entries in ascending `p` order.
    pub fn support(&self) -> impl Iterator<Item = (i64, &BigUint)> {
        self.numbers.iter().map(|(&p, v)| (p, v))
    }

    pub fn dim_v(&self) -> BigUint {
        self.numbers.values().sum()
    }

    /// Check every invariant and report each violation by name.
    pub fn validate(&self) -> ValidationReport {
        let mut errors = Vec::new();
        let mut convention = Vec::new();

        if self.numbers.is_empty() {
            errors.push(ValidationIssue::EmptySupport);
            return ValidationReport {
                errors,
                warnings: Vec::new(),
            };
        }

        for (&p, value) in &self.numbers {
            let q = self.weight - p;
            if p <= q {
                let mirror = self.hodge(q);
                if *value != mirror {
                    errors.push(ValidationIssue::AsymmetricNumbers {
                        p,
                        q,
                        left: value.clone(),
                        right: mirror,
                    });
                }
            }
            if p < 0 || q < 0 {
                convention.push(ValidationIssue::IndexOutOfRange { p, q });
            }
        }
        if self.hodge(self.weight).is_zero() {
            convention.push(ValidationIssue::TopNumberZero {
                weight: self.weight,
            });
        }

        let p_min = *self.numbers.keys().next().expect("nonempty");
        let p_max = *self.numbers.keys().next_back().expect("nonempty");
        if p_min == p_max {
            errors.push(ValidationIssue::ZeroWeight);
        }

        if errors.is_empty() {
            ValidationReport {
                errors,
                warnings: convention,
            }
        } else {
            // nothing is repairable once a hard error is present
            errors.extend(convention);
            ValidationReport {
                errors,
                warnings: Vec::new(),
            }
        }
    }

    /// Shift indices so the lowest supported `p` becomes 0 and set the weight
    /// to the support diameter. Idempotent; preserves the multiset of nonzero
    /// values and every derived invariant.
    pub fn normalize(&self) -> Result<NormalizedSignature, SignatureError> {
        if self.numbers.is_empty() {
            return Err(SignatureError::EmptySupport);
        }
        for (&p, value) in &self.numbers {
            let q = self.weight - p;
            if p <= q {
                let mirror = self.hodge(q);
                if *value != mirror {
                    return Err(SignatureError::AsymmetricNumbers {
                        p,
                        q,
                        left: value.clone(),
                        right: mirror,
                    });
                }
            }
        }
        let p_min = *self.numbers.keys().next().expect("nonempty");
        let p_max = *self.numbers.keys().next_back().expect("nonempty");
        if p_min == p_max {
            return Err(SignatureError::ZeroWeight);
        }
        let numbers: BTreeMap<i64, BigUint> = self
            .numbers
            .iter()
            .map(|(&p, v)| (p - p_min, v.clone()))
            .collect();
        let dim_v = numbers.values().sum();
        Ok(NormalizedSignature {
            weight: p_max - p_min,
            numbers,
            dim_v,
        })
    }
}

fn fmt_entries(
    weight: i64,
    numbers: &BTreeMap<i64, BigUint>,
    f: &mut fmt::Formatter<'_>,
) -> fmt::Result {
    write!(f, "w={weight}:")?;
    for (&p, value) in numbers.iter().rev() {
        write!(f, " h^{{{},{}}}={}", p, weight - p, value)?;
    }
    Ok(())
}

impl fmt::Display for HodgeSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_entries(self.weight, &self.numbers, f)
    }
}

/// A validated signature in canonical form: weight `>= 1`, support inside
/// `0..=weight`, `h^{w,0} = h^{0,w} >= 1`, Hodge symmetry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalizedSignature {
    weight: i64,
    numbers: BTreeMap<i64, BigUint>,
    dim_v: BigUint,
}

impl NormalizedSignature {
    pub fn weight(&self) -> i64 {
        self.weight
    }

    pub fn parity(&self) -> Parity {
        Parity::of_weight(self.weight)
    }

    /// `h^{p, w-p}`, zero off the support.
    pub fn hodge(&self, p: i64) -> BigUint {
        self.numbers.get(&p).cloned().unwrap_or_else(BigUint::zero)
    }

    /// Nonzero entries in ascending `p` order.
    pub fn support(&self) -> impl Iterator<Item = (i64, &BigUint)> {
        self.numbers.iter().map(|(&p, v)| (p, v))
    }

    pub fn dim_v(&self) -> &BigUint {
        &self.dim_v
    }

    /// The raw form of this signature (already canonical).
    pub fn to_raw(&self) -> HodgeSignature {
        HodgeSignature {
            weight: self.weight,
            numbers: self.numbers.clone(),
        }
    }

    /// Index shift by `m`: support moves to `p + m`, weight to `w + 2m`.
    /// Normalizing the result recovers `self`.
    pub fn tate_twist(&self, m: i64) -> HodgeSignature {
        HodgeSignature {
            weight: self.weight + 2 * m,
            numbers: self
                .numbers
                .iter()
                .map(|(&p, v)| (p + m, v.clone()))
                .collect(),
        }
    }

    /// The split `dim V = r + s` of an even-weight signature, `s` collecting
    /// the blocks with `p` congruent to `w/2` mod 2 and `r` the rest.
    pub fn orthogonal_signature_pair(&self) -> Result<OrthogonalSignaturePair, SignatureError> {
        if self.parity() != Parity::Orthogonal {
            return Err(SignatureError::WrongParity {
                expected: Parity::Orthogonal,
                weight: self.weight,
            });
        }
        let n = self.weight / 2;
        let mut r = BigUint::zero();
        let mut s = BigUint::zero();
        for (p, value) in &self.numbers {
            if (p - n).rem_euclid(2) == 0 {
                s += value;
            } else {
                r += value;
            }
        }
        Ok(OrthogonalSignaturePair { r, s })
    }
}

impl fmt::Display for NormalizedSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_entries(self.weight, &self.numbers, f)
    }
}

/// The `(r, s)` of the real orthogonal group attached to an even-weight
/// signature; `r + s = dim V`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrthogonalSignaturePair {
    pub r: BigUint,
    pub s: BigUint,
}
