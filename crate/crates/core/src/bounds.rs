//! Upper bounds on the dimension of period images, assembled into a report.
//!
//! Three bounds enter:
//!
//! * the transversality bound `h_inf^1` (always valid);
//! * the Hodge-locus bound, reported as an upper estimate `codim - 1`
//!   derived from an explicitly constructed subdatum witness, valid only in
//!   level `>= 3` with a simple derived group;
//! * the Carlson-Toledo bound, the maximal dimension of an abelian subspace
//!   of `g^{-1,1}`. In weight 4 a closed form evaluates it exactly; in every
//!   other weight only a single-block lower estimate is computed, which is
//!   reported for information but never used as an upper bound.
//!
//! The final bound is the minimum of the applicable upper bounds, annotated
//! with the statements that justify it.

use std::fmt;

use num_bigint::BigUint;
use num_traits::Zero;
use thiserror::Error;

use crate::combinat::pairs_with_repetition;
use crate::infinitesimal::{InfinitesimalNumbers, LevelCase};
use crate::signature::{NormalizedSignature, Parity};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundsError {
    #[error("middle Hodge number h^{{{n},{n}}} is zero; the vector-stabilizer subdatum needs it")]
    MiddleNumberZero { n: i64 },
    #[error("even weight {weight} is too small; the construction needs weight >= 4")]
    WeightTooSmall { weight: i64 },
    #[error("operation requires a {expected} signature, got weight {weight}")]
    WrongParity { expected: Parity, weight: i64 },
    #[error("dim V = {dim} is too small; the plane-splitting subdatum needs dim V > 2")]
    TooSmall { dim: BigUint },
    #[error("chosen Hodge number h^{{{r},{s}}} is zero")]
    ZeroHodgeNumber { r: i64, s: i64 },
    #[error("subdatum dimension {subdatum} must be strictly below the domain dimension {domain}")]
    DimensionOrder { domain: BigUint, subdatum: BigUint },
}

/// Which construction produced a subdatum witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WitnessKind {
    /// Stabilizer of a rational vector in the middle block (even weight).
    OrthogonalVectorStabilizer,
    /// Splitting off a rational symplectic plane through the block pair
    /// `(r, s)` (odd weight); `value` is the chosen Hodge number.
    SymplecticPlaneSplitting { r: i64, s: i64, value: BigUint },
}

impl WitnessKind {
    pub fn label(&self) -> &'static str {
        match self {
            WitnessKind::OrthogonalVectorStabilizer => "orthogonal-vector-stabilizer",
            WitnessKind::SymplecticPlaneSplitting { .. } => "symplectic-plane-splitting",
        }
    }
}

/// A constructed strict subdatum together with its codimension in the
/// ambient period domain; `bound = codim - 1` is the resulting upper
/// estimate for the Hodge-locus bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubdatumWitness {
    pub kind: WitnessKind,
    pub codim: BigUint,
    pub bound: BigUint,
}

impl SubdatumWitness {
    pub fn describe(&self) -> String {
        match &self.kind {
            WitnessKind::OrthogonalVectorStabilizer => format!(
                "stabilizer of a rational middle-block Hodge vector; codimension {}",
                self.codim
            ),
            WitnessKind::SymplecticPlaneSplitting { r, s, value } => format!(
                "splitting along a rational symplectic plane through the h^{{{r},{s}}} block \
                 (value {value}); codimension {}",
                self.codim
            ),
        }
    }
}

/// Vector-stabilizer witness for an even-weight signature with nonzero
/// middle number: `codim = sum_{i>=1} h^{n-i,n+i}`, equivalently
/// `(dim V - h^{n,n})/2`.
pub fn mhl_upper_orthogonal(sig: &NormalizedSignature) -> Result<SubdatumWitness, BoundsError> {
    if sig.parity() != Parity::Orthogonal {
        return Err(BoundsError::WrongParity {
            expected: Parity::Orthogonal,
            weight: sig.weight(),
        });
    }
    if sig.weight() < 4 {
        return Err(BoundsError::WeightTooSmall {
            weight: sig.weight(),
        });
    }
    let n = sig.weight() / 2;
    let middle = sig.hodge(n);
    if middle.is_zero() {
        return Err(BoundsError::MiddleNumberZero { n });
    }
    let codim: BigUint = sig.support().filter(|&(p, _)| p < n).map(|(_, v)| v).sum();
    debug_assert_eq!(
        &codim << 1,
        sig.dim_v() - &middle,
        "codim != (dim V - h^{{n,n}})/2"
    );
    let bound = &codim - 1u8;
    Ok(SubdatumWitness {
        kind: WitnessKind::OrthogonalVectorStabilizer,
        codim,
        bound,
    })
}

/// Plane-splitting witness for an odd-weight signature with `dim V > 2`:
/// `codim = dim V - h^{r,s} - 1` for the chosen nonzero Hodge number. When
/// no block is specified the largest Hodge number is taken (smallest `r` on
/// ties), which minimizes the resulting bound.
pub fn mhl_upper_symplectic(
    sig: &NormalizedSignature,
    rs: Option<(i64, i64)>,
) -> Result<SubdatumWitness, BoundsError> {
    if sig.parity() != Parity::Symplectic {
        return Err(BoundsError::WrongParity {
            expected: Parity::Symplectic,
            weight: sig.weight(),
        });
    }
    if *sig.dim_v() <= BigUint::from(2u8) {
        return Err(BoundsError::TooSmall {
            dim: sig.dim_v().clone(),
        });
    }
    let (r, s, value) = match rs {
        Some((r, s)) => {
            let value = if r + s == sig.weight() {
                sig.hodge(r)
            } else {
                BigUint::zero()
            };
            if value.is_zero() {
                return Err(BoundsError::ZeroHodgeNumber { r, s });
            }
            (r, s, value)
        }
        None => {
            let (p, value) = sig
                .support()
                .max_by(|(pa, va), (pb, vb)| va.cmp(vb).then(pb.cmp(pa)))
                .expect("canonical signatures have nonempty support");
            (p, sig.weight() - p, value.clone())
        }
    };
    let codim = sig.dim_v() - &value - 1u8;
    let bound = &codim - 1u8;
    Ok(SubdatumWitness {
        kind: WitnessKind::SymplecticPlaneSplitting { r, s, value },
        codim,
        bound,
    })
}

/// How the Carlson-Toledo figure was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CtMethod {
    /// Weight 4: `max{h^{3,1} h^{4,0}, floor(h^{3,1} h^{2,2} / 2)}`, the
    /// exact value of the bound.
    Weight4ClosedForm,
    /// Any other weight: the best single-block abelian subspace of
    /// `g^{-1,1}`, a lower estimate for the true bound.
    BlockLowerBound,
}

impl CtMethod {
    pub fn label(self) -> &'static str {
        match self {
            CtMethod::Weight4ClosedForm => "weight4-closed-form",
            CtMethod::BlockLowerBound => "block-lower-bound",
        }
    }
}

/// Carlson-Toledo figure with its provenance. Only the weight-4 closed form
/// may enter the final bound; the block estimate is informational.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CarlsonToledo {
    pub value: BigUint,
    pub method: CtMethod,
    /// A half-integer product was rounded down.
    pub floored: bool,
}

/// Maximal dimension of an abelian subspace of `g^{-1,1}` that a single
/// transition block realizes. In weight 4 this coincides with the closed
/// form; elsewhere it is a lower estimate. Never exceeds `h_inf^1`.
pub fn carlson_toledo(sig: &NormalizedSignature) -> CarlsonToledo {
    if sig.weight() == 4 {
        let direct = sig.hodge(4) * sig.hodge(3);
        let product = sig.hodge(3) * sig.hodge(2);
        let odd = product.bit(0);
        let halved = product >> 1;
        return CarlsonToledo {
            floored: odd && halved >= direct,
            value: direct.max(halved),
            method: CtMethod::Weight4ClosedForm,
        };
    }

    let w = sig.weight();
    let mut best = BigUint::zero();
    let mut best_floored = false;
    let mut consider = |candidate: BigUint, floored: bool| {
        if candidate > best {
            best = candidate;
            best_floored = floored;
        }
    };

    match sig.parity() {
        Parity::Orthogonal => {
            let n = w / 2;
            // transition blocks V^p -> V^{p-1} whose mirror block is not
            // adjacent: p outside {n, n+1}
            for (p, value) in sig.support() {
                if p == n || p == n + 1 {
                    continue;
                }
                consider(value * sig.hodge(p - 1), false);
            }
            // the adjacent middle transitions contribute half their product
            let middle_product = sig.hodge(n + 1) * sig.hodge(n);
            let floored = middle_product.bit(0);
            consider(middle_product >> 1, floored);
        }
        Parity::Symplectic => {
            let n = (w - 1) / 2;
            for (p, value) in sig.support() {
                if p == n + 1 {
                    continue;
                }
                consider(value * sig.hodge(p - 1), false);
            }
            // the self-mirror middle block carries its symmetric square
            consider(pairs_with_repetition(&sig.hodge(n + 1)), false);
        }
    }

    CarlsonToledo {
        value: best,
        method: CtMethod::BlockLowerBound,
        floored: best_floored,
    }
}

/// Three-way verdict on a subdatum against an ambient variation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AdmissibilityVerdict {
    /// Admissible in level `<= 2`: the transverse locus is dense.
    TransverseLocusDense,
    /// Admissible in level `>= 3`: contradiction, no such Hodge-generic
    /// variation exists.
    NoHodgeGenericVariation,
    /// Not admissible: the transverse locus is empty.
    TransverseLocusEmpty,
}

impl AdmissibilityVerdict {
    pub fn label(self) -> &'static str {
        match self {
            AdmissibilityVerdict::TransverseLocusDense => "transverse-locus-dense",
            AdmissibilityVerdict::NoHodgeGenericVariation => "no-hodge-generic-variation",
            AdmissibilityVerdict::TransverseLocusEmpty => "transverse-locus-empty",
        }
    }

    pub fn text(self) -> &'static str {
        match self {
            AdmissibilityVerdict::TransverseLocusDense => {
                "admissible: transverse locus is analytically dense"
            }
            AdmissibilityVerdict::NoHodgeGenericVariation => {
                "contradiction: no Hodge-generic variation with these dimensions exists in level >= 3"
            }
            AdmissibilityVerdict::TransverseLocusEmpty => {
                "not admissible: transverse locus is empty"
            }
        }
    }
}

impl fmt::Display for AdmissibilityVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.text())
    }
}

/// Decide admissibility of a subdatum of dimension `subdatum_dim` against a
/// variation with image dimension `image_dim` in a domain of dimension
/// `domain_dim`: admissible iff `subdatum_dim + image_dim - domain_dim >= 0`,
/// with the interpretation switching at level 3.
pub fn admissibility(
    domain_dim: &BigUint,
    subdatum_dim: &BigUint,
    image_dim: &BigUint,
    level: i64,
) -> Result<AdmissibilityVerdict, BoundsError> {
    if subdatum_dim >= domain_dim {
        return Err(BoundsError::DimensionOrder {
            domain: domain_dim.clone(),
            subdatum: subdatum_dim.clone(),
        });
    }
    if subdatum_dim + image_dim >= *domain_dim {
        if level >= 3 {
            Ok(AdmissibilityVerdict::NoHodgeGenericVariation)
        } else {
            Ok(AdmissibilityVerdict::TransverseLocusDense)
        }
    } else {
        Ok(AdmissibilityVerdict::TransverseLocusEmpty)
    }
}

/// Simplicity of the derived group, decided purely from parity and `dim V`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SimplicityStatus {
    Simple,
    NotSimple,
    Unknown,
}

impl SimplicityStatus {
    pub fn label(self) -> &'static str {
        match self {
            SimplicityStatus::Simple => "simple",
            SimplicityStatus::NotSimple => "not-simple",
            SimplicityStatus::Unknown => "unknown",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicityGuard {
    pub status: SimplicityStatus,
    pub reason: String,
}

/// Guard policy: orthogonal groups are simple from `dim V >= 5` on and fail
/// exactly at `dim V = 4`; symplectic groups are simple from `dim V >= 4`.
/// Smaller dimensions are degenerate and left undecided.
pub fn simplicity_guard(sig: &NormalizedSignature) -> SimplicityGuard {
    let dim = sig.dim_v();
    match sig.parity() {
        Parity::Orthogonal => {
            if *dim >= BigUint::from(5u8) {
                SimplicityGuard {
                    status: SimplicityStatus::Simple,
                    reason: format!("orthogonal derived group on dim V = {dim} >= 5 is simple"),
                }
            } else if *dim == BigUint::from(4u8) {
                SimplicityGuard {
                    status: SimplicityStatus::NotSimple,
                    reason: "orthogonal derived group on dim V = 4 is not simple".into(),
                }
            } else {
                SimplicityGuard {
                    status: SimplicityStatus::Unknown,
                    reason: format!(
                        "orthogonal signature with dim V = {dim} <= 3 is degenerate; simplicity not decided"
                    ),
                }
            }
        }
        Parity::Symplectic => {
            if *dim >= BigUint::from(4u8) {
                SimplicityGuard {
                    status: SimplicityStatus::Simple,
                    reason: format!("symplectic derived group on dim V = {dim} >= 4 is simple"),
                }
            } else {
                SimplicityGuard {
                    status: SimplicityStatus::Unknown,
                    reason:
                        "symplectic signature with dim V = 2 is degenerate; simplicity not decided"
                            .into(),
                }
            }
        }
    }
}

/// Why the Hodge-locus route was not used in a report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MhlSuppression {
    /// The emptiness theorem needs level at least 3.
    LevelBelowThree { level: i64 },
    /// The theorem needs a simple derived group.
    SimplicityNotEstablished {
        status: SimplicityStatus,
        reason: String,
    },
    /// Neither subdatum construction applies to this signature.
    ConstructionUnavailable { reason: BoundsError },
}

impl MhlSuppression {
    pub fn code(&self) -> &'static str {
        match self {
            MhlSuppression::LevelBelowThree { .. } => "mhl-suppressed-level",
            MhlSuppression::SimplicityNotEstablished { .. } => "mhl-suppressed-simplicity",
            MhlSuppression::ConstructionUnavailable { .. } => "mhl-unavailable-construction",
        }
    }

    pub fn message(&self) -> String {
        match self {
            MhlSuppression::LevelBelowThree { level } => {
                format!("level {level} < 3: the Hodge-locus bound does not apply")
            }
            MhlSuppression::SimplicityNotEstablished { status, reason } => {
                format!("derived group {}: {reason}", status.label())
            }
            MhlSuppression::ConstructionUnavailable { reason } => {
                format!("no subdatum witness: {reason}")
            }
        }
    }
}

/// Which statement justifies (a share of) the final bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundSource {
    HodgeLocus,
    CarlsonToledo,
    Griffiths,
}

impl BoundSource {
    pub fn label(self) -> &'static str {
        match self {
            BoundSource::HodgeLocus => "hodge-locus",
            BoundSource::CarlsonToledo => "carlson-toledo",
            BoundSource::Griffiths => "griffiths",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MaximalityStatus {
    /// The supplied image dimension equals the final bound.
    Maximal,
    /// Strictly below the final bound.
    WithinBound,
    /// Above the final bound: inconsistent input.
    ExceedsBound,
}

impl MaximalityStatus {
    pub fn label(self) -> &'static str {
        match self {
            MaximalityStatus::Maximal => "maximal",
            MaximalityStatus::WithinBound => "within-bound",
            MaximalityStatus::ExceedsBound => "exceeds-bound",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Maximality {
    pub image_dim: BigUint,
    pub status: MaximalityStatus,
}

/// Everything the bound analysis produces for one signature.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundsReport {
    pub signature: NormalizedSignature,
    pub infinitesimal: InfinitesimalNumbers,
    pub level: i64,
    pub level_case: Option<LevelCase>,
    pub domain_dimension: BigUint,
    pub griffiths_bound: BigUint,
    pub simplicity: SimplicityGuard,
    pub mhl_upper: Option<SubdatumWitness>,
    pub mhl_suppressions: Vec<MhlSuppression>,
    pub carlson_toledo: CarlsonToledo,
    /// Whether the Hodge-locus estimate beats the Carlson-Toledo figure;
    /// present when the witness is.
    pub mhl_lt_ct: Option<bool>,
    pub final_bound: BigUint,
    pub legal_basis: Vec<BoundSource>,
    pub maximality: Option<Maximality>,
}

/// Assemble the full report. Never fails on a canonical signature.
pub fn report(sig: &NormalizedSignature, image_dim: Option<&BigUint>) -> BoundsReport {
    let infinitesimal = sig.infinitesimal_numbers();
    let level = infinitesimal.level();
    let level_case = sig.level_at_least_three();
    debug_assert_eq!(level >= 3, level_case.is_some());

    let domain_dimension = infinitesimal.domain_dimension();
    let griffiths_bound = infinitesimal.get(1);
    let simplicity = simplicity_guard(sig);
    let ct = carlson_toledo(sig);
    debug_assert!(ct.value <= griffiths_bound);

    let mut suppressions = Vec::new();
    if level < 3 {
        suppressions.push(MhlSuppression::LevelBelowThree { level });
    }
    if simplicity.status != SimplicityStatus::Simple {
        suppressions.push(MhlSuppression::SimplicityNotEstablished {
            status: simplicity.status,
            reason: simplicity.reason.clone(),
        });
    }
    let witness = match sig.parity() {
        Parity::Orthogonal => mhl_upper_orthogonal(sig),
        Parity::Symplectic => mhl_upper_symplectic(sig, None),
    };
    let witness = match witness {
        Ok(w) => Some(w),
        Err(reason) => {
            suppressions.push(MhlSuppression::ConstructionUnavailable { reason });
            None
        }
    };
    let mhl_upper = if suppressions.is_empty() {
        witness
    } else {
        None
    };

    let mhl_lt_ct = mhl_upper.as_ref().map(|witness| witness.bound < ct.value);

    let mut applicable: Vec<(BoundSource, BigUint)> =
        vec![(BoundSource::Griffiths, griffiths_bound.clone())];
    if let Some(witness) = &mhl_upper {
        applicable.push((BoundSource::HodgeLocus, witness.bound.clone()));
    }
    if ct.method == CtMethod::Weight4ClosedForm {
        applicable.push((BoundSource::CarlsonToledo, ct.value.clone()));
    }
    let final_bound = applicable
        .iter()
        .map(|(_, v)| v)
        .min()
        .expect("at least the transversality bound applies")
        .clone();
    let legal_basis: Vec<BoundSource> = [
        BoundSource::HodgeLocus,
        BoundSource::CarlsonToledo,
        BoundSource::Griffiths,
    ]
    .into_iter()
    .filter(|source| {
        applicable
            .iter()
            .any(|(s, v)| s == source && *v == final_bound)
    })
    .collect();

    let maximality = image_dim.map(|image| Maximality {
        image_dim: image.clone(),
        status: if *image == final_bound {
            MaximalityStatus::Maximal
        } else if *image < final_bound {
            MaximalityStatus::WithinBound
        } else {
            MaximalityStatus::ExceedsBound
        },
    });

    BoundsReport {
        signature: sig.clone(),
        infinitesimal,
        level,
        level_case,
        domain_dimension,
        griffiths_bound,
        simplicity,
        mhl_upper,
        mhl_suppressions: suppressions,
        carlson_toledo: ct,
        mhl_lt_ct,
        final_bound,
        legal_basis,
        maximality,
    }
}
