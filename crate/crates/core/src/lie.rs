//! Real dimensions of the classical groups entering the dimension counts,
//! and the homogeneous-space route `dim D = (dim G - dim K)/2` used to
//! cross-check the infinitesimal route.

use num_bigint::BigUint;
use num_traits::{CheckedSub, Zero};
use thiserror::Error;

use crate::combinat::pairs;
use crate::signature::{NormalizedSignature, Parity, SignatureError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LieError {
    #[error("symplectic groups need an even rank argument, got {0}")]
    OddInput(BigUint),
    #[error("dimension chain produced an odd or negative difference; this is a bug")]
    ParityBug,
    #[error(transparent)]
    Signature(#[from] SignatureError),
    #[error("required isotropy factor h^{{{p},{q}}} is zero")]
    ZeroFactor { p: i64, q: i64 },
}

/// `dim_R SO(r, s) = (r+s)(r+s-1)/2`; depends only on `r + s`.
pub fn dim_so(r: &BigUint, s: &BigUint) -> BigUint {
    pairs(&(r + s))
}

/// `dim_R U(m) = m^2`.
pub fn dim_u(m: &BigUint) -> BigUint {
    m * m
}

/// `dim_R Sp_{2d}(R) = d(2d+1)`; the argument is `2d`.
pub fn dim_sp(two_d: &BigUint) -> Result<BigUint, LieError> {
    if (two_d % 2u8) != BigUint::zero() {
        return Err(LieError::OddInput(two_d.clone()));
    }
    let d = two_d >> 1;
    Ok(&d * ((&d << 1) + 1u8))
}

/// Compact isotropy group of the period domain at a point, as a product of
/// unitary factors and (in even weight) one special orthogonal factor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsotropyDescription {
    pub parity: Parity,
    /// Sizes of the unitary factors, one per block pair, ordered from the
    /// middle outwards; zero factors are dropped.
    pub unitary_factors: Vec<BigUint>,
    /// Size of the special orthogonal factor `SO(h^{n,n})`; present exactly
    /// for orthogonal signatures.
    pub so_factor: Option<BigUint>,
}

impl IsotropyDescription {
    /// Real dimension of the whole compact factor.
    pub fn dimension(&self) -> BigUint {
        let mut dim = self
            .so_factor
            .as_ref()
            .map(pairs)
            .unwrap_or_else(BigUint::zero);
        for m in &self.unitary_factors {
            dim += dim_u(m);
        }
        dim
    }
}

/// Extract the isotropy factor sizes from a canonical signature:
/// `SO(h^{n,n}) x prod U(h^{n-i,n+i})` in weight `2n`, `prod
/// U(h^{n+i+1,n-i})` in weight `2n+1`.
pub fn isotropy(sig: &NormalizedSignature) -> IsotropyDescription {
    let parity = sig.parity();
    match parity {
        Parity::Orthogonal => {
            let n = sig.weight() / 2;
            let mut unitary_factors: Vec<BigUint> = sig
                .support()
                .filter(|&(p, _)| p < n)
                .map(|(_, v)| v.clone())
                .collect();
            unitary_factors.reverse();
            IsotropyDescription {
                parity,
                unitary_factors,
                so_factor: Some(sig.hodge(n)),
            }
        }
        Parity::Symplectic => {
            let n = (sig.weight() - 1) / 2;
            let unitary_factors = sig
                .support()
                .filter(|&(p, _)| p > n)
                .map(|(_, v)| v.clone())
                .collect();
            IsotropyDescription {
                parity,
                unitary_factors,
                so_factor: None,
            }
        }
    }
}

fn half_difference(total: BigUint, compact: BigUint) -> Result<BigUint, LieError> {
    let diff = total.checked_sub(&compact).ok_or(LieError::ParityBug)?;
    if (&diff % 2u8) != BigUint::zero() {
        return Err(LieError::ParityBug);
    }
    Ok(diff >> 1)
}

fn derived_group_dimension(sig: &NormalizedSignature) -> Result<BigUint, LieError> {
    match sig.parity() {
        Parity::Orthogonal => {
            let pair = sig.orthogonal_signature_pair()?;
            Ok(dim_so(&pair.r, &pair.s))
        }
        Parity::Symplectic => dim_sp(sig.dim_v()),
    }
}

/// Second route to the period-domain dimension:
/// `(dim_R G^der - dim_R K)/2` from [`dim_so`]/[`dim_sp`] and [`isotropy`].
/// Must agree with [`NormalizedSignature::domain_dimension`] everywhere.
pub fn cross_check_domain_dim(sig: &NormalizedSignature) -> Result<BigUint, LieError> {
    half_difference(derived_group_dimension(sig)?, isotropy(sig).dimension())
}

/// Codimension of the vector-stabilizer subdatum of an even-weight signature
/// computed purely through the group-dimension chain: the ambient chain uses
/// `SO(r, s)` with isotropy `SO(h^{n,n}) x prod U`, the subdatum chain
/// `SO(r, s-1)` with isotropy `SO(h^{n,n}-1) x prod U`.
pub fn orthogonal_codim_via_chain(sig: &NormalizedSignature) -> Result<BigUint, LieError> {
    if sig.parity() != Parity::Orthogonal {
        return Err(SignatureError::WrongParity {
            expected: Parity::Orthogonal,
            weight: sig.weight(),
        }
        .into());
    }
    let n = sig.weight() / 2;
    let middle = sig.hodge(n);
    if middle.is_zero() {
        return Err(LieError::ZeroFactor { p: n, q: n });
    }
    let iso = isotropy(sig);
    let unitary_dim: BigUint = iso.unitary_factors.iter().map(dim_u).sum();

    let ambient = half_difference(derived_group_dimension(sig)?, pairs(&middle) + &unitary_dim)?;
    let one = BigUint::from(1u8);
    let sub_group = pairs(&(sig.dim_v() - &one));
    let sub_iso = pairs(&(&middle - &one)) + &unitary_dim;
    let sub = half_difference(sub_group, sub_iso)?;
    ambient.checked_sub(&sub).ok_or(LieError::ParityBug)
}

/// Codimension of the plane-splitting subdatum of an odd-weight signature
/// through the group-dimension chain: `Sp_{2d}` against
/// `Sp_{2d-2} x Sp_2`, with the unitary factor at the chosen block replaced
/// by `U(1) x U(h-1)`. `p` may be either member of the chosen block pair.
pub fn symplectic_codim_via_chain(sig: &NormalizedSignature, p: i64) -> Result<BigUint, LieError> {
    if sig.parity() != Parity::Symplectic {
        return Err(SignatureError::WrongParity {
            expected: Parity::Symplectic,
            weight: sig.weight(),
        }
        .into());
    }
    let upper = p.max(sig.weight() - p);
    let chosen = sig.hodge(upper);
    if chosen.is_zero() {
        return Err(LieError::ZeroFactor {
            p: upper,
            q: sig.weight() - upper,
        });
    }
    let iso = isotropy(sig);
    let ambient = half_difference(dim_sp(sig.dim_v())?, iso.dimension())?;

    let one = BigUint::from(1u8);
    let two = BigUint::from(2u8);
    let sub_group = dim_sp(&(sig.dim_v() - &two))? + dim_sp(&two)?;
    // replace U(h^{r,s}) by U(1) x U(h^{r,s} - 1), keep the other factors
    let sub_iso = iso.dimension() - dim_u(&chosen) + dim_u(&one) + dim_u(&(&chosen - &one));
    let sub = half_difference(sub_group, sub_iso)?;
    ambient.checked_sub(&sub).ok_or(LieError::ParityBug)
}
