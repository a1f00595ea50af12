//! The structured report document: a schema-versioned, deterministic
//! rendering of one analysis. Every integer is serialized as a decimal
//! string so consumers with 64-bit number types cannot truncate anything.

use hodge_locus::bounds::{BoundsReport, CtMethod, MaximalityStatus, WitnessKind};
use hodge_locus::hypersurface::HypersurfaceReport;
use hodge_locus::signature::{HodgeSignature, NormalizedSignature};
use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: &str = "1";

fn dec(value: &BigUint) -> String {
    value.to_string()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub schema_version: String,
    pub command: String,
    pub input: InputEcho,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hypersurface: Option<HypersurfaceSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub signature: Option<SignatureSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub invariants: Option<InvariantsSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bounds: Option<BoundsSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub maximality: Option<MaximalitySection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub admissibility: Option<AdmissibilitySection>,
    pub warnings: Vec<WarningEntry>,
}

impl ReportDocument {
    pub fn new(command: &str, input: InputEcho) -> Self {
        ReportDocument {
            schema_version: SCHEMA_VERSION.to_string(),
            command: command.to_string(),
            input,
            hypersurface: None,
            signature: None,
            invariants: None,
            bounds: None,
            maximality: None,
            admissibility: None,
            warnings: Vec::new(),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputEcho {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub weight: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hodge_numbers: Option<Vec<HodgeEntry>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub image_dim: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dim: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degree: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_total: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub predicate: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub limit: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub domain_dim: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub subdatum_dim: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub level: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HodgeEntry {
    pub p: String,
    pub q: String,
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignatureSection {
    pub weight: String,
    pub parity: String,
    pub dim_v: String,
    /// Nonzero entries, `p` descending.
    pub hodge_numbers: Vec<HodgeEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantsSection {
    pub level: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub level_case: Option<LevelCaseDoc>,
    pub domain_dimension: String,
    /// Nonzero `h_inf^k` for `k >= 0`, ascending in `k`.
    pub infinitesimal: Vec<InfinitesimalEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelCaseDoc {
    pub case: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub j: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InfinitesimalEntry {
    pub k: String,
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsSection {
    pub griffiths: String,
    pub simplicity: SimplicityDoc,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hodge_locus: Option<HodgeLocusDoc>,
    pub carlson_toledo: CarlsonToledoDoc,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mhl_lt_ct: Option<bool>,
    pub final_bound: String,
    pub legal_basis: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimplicityDoc {
    pub status: String,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HodgeLocusDoc {
    pub bound: String,
    pub witnesses: Vec<WitnessDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessDoc {
    pub kind: String,
    pub codim: String,
    pub bound: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub block: Option<BlockRef>,
    pub description: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockRef {
    pub r: String,
    pub s: String,
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CarlsonToledoDoc {
    pub value: String,
    pub method: String,
    /// The figure is a lower estimate only and excluded from the final bound.
    pub informational: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MaximalitySection {
    pub image_dim: String,
    pub status: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypersurfaceSection {
    pub n: String,
    pub d: String,
    /// Primitive numbers of the raw weight-`n` signature, `p` descending.
    pub primitive_hodge_numbers: Vec<HodgeEntry>,
    pub moduli_dimension: String,
    pub h_n_minus_one_one: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub image_dim: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sharpness: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdmissibilitySection {
    pub verdict: String,
    pub text: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WarningEntry {
    pub code: String,
    pub message: String,
}

impl WarningEntry {
    pub fn new(code: &str, message: impl Into<String>) -> Self {
        WarningEntry {
            code: code.to_string(),
            message: message.into(),
        }
    }
}

// ---------------------------------------------------------------------------
// section builders
// ---------------------------------------------------------------------------

fn entries_descending(weight: i64, support: Vec<(i64, BigUint)>) -> Vec<HodgeEntry> {
    let mut entries: Vec<HodgeEntry> = support
        .into_iter()
        .map(|(p, value)| HodgeEntry {
            p: p.to_string(),
            q: (weight - p).to_string(),
            value: dec(&value),
        })
        .collect();
    entries.reverse();
    entries
}

pub fn raw_signature_entries(sig: &HodgeSignature) -> Vec<HodgeEntry> {
    entries_descending(
        sig.weight(),
        sig.support().map(|(p, v)| (p, v.clone())).collect(),
    )
}

pub fn signature_section(sig: &NormalizedSignature) -> SignatureSection {
    SignatureSection {
        weight: sig.weight().to_string(),
        parity: sig.parity().label().to_string(),
        dim_v: dec(sig.dim_v()),
        hodge_numbers: entries_descending(
            sig.weight(),
            sig.support().map(|(p, v)| (p, v.clone())).collect(),
        ),
    }
}

pub fn invariants_section(report: &BoundsReport) -> InvariantsSection {
    use hodge_locus::infinitesimal::LevelCase;
    let level_case = report.level_case.map(|case| {
        let (k, j) = match case {
            LevelCase::OddWeight => (None, None),
            LevelCase::RepeatedHighBlock { k } => (Some(k.to_string()), None),
            LevelCase::EvenSeparatedPair { k, j } | LevelCase::OddSeparatedPair { k, j } => {
                (Some(k.to_string()), Some(j.to_string()))
            }
        };
        LevelCaseDoc {
            case: case.label().to_string(),
            k,
            j,
        }
    });
    InvariantsSection {
        level: report.level.to_string(),
        level_case,
        domain_dimension: dec(&report.domain_dimension),
        infinitesimal: report
            .infinitesimal
            .iter()
            .map(|(k, value)| InfinitesimalEntry {
                k: k.to_string(),
                value: dec(value),
            })
            .collect(),
    }
}

pub fn bounds_section(report: &BoundsReport) -> BoundsSection {
    let hodge_locus = report.mhl_upper.as_ref().map(|witness| HodgeLocusDoc {
        bound: dec(&witness.bound),
        witnesses: vec![WitnessDoc {
            kind: witness.kind.label().to_string(),
            codim: dec(&witness.codim),
            bound: dec(&witness.bound),
            block: match &witness.kind {
                WitnessKind::OrthogonalVectorStabilizer => None,
                WitnessKind::SymplecticPlaneSplitting { r, s, value } => Some(BlockRef {
                    r: r.to_string(),
                    s: s.to_string(),
                    value: dec(value),
                }),
            },
            description: witness.describe(),
        }],
    });
    BoundsSection {
        griffiths: dec(&report.griffiths_bound),
        simplicity: SimplicityDoc {
            status: report.simplicity.status.label().to_string(),
            reason: report.simplicity.reason.clone(),
        },
        hodge_locus,
        carlson_toledo: CarlsonToledoDoc {
            value: dec(&report.carlson_toledo.value),
            method: report.carlson_toledo.method.label().to_string(),
            informational: report.carlson_toledo.method == CtMethod::BlockLowerBound,
        },
        mhl_lt_ct: report.mhl_lt_ct,
        final_bound: dec(&report.final_bound),
        legal_basis: report
            .legal_basis
            .iter()
            .map(|source| source.label().to_string())
            .collect(),
    }
}

pub fn maximality_section(report: &BoundsReport) -> Option<MaximalitySection> {
    report.maximality.as_ref().map(|m| MaximalitySection {
        image_dim: dec(&m.image_dim),
        status: m.status.label().to_string(),
    })
}

/// Warnings carried by the bound analysis itself, in a fixed order.
pub fn bounds_warnings(report: &BoundsReport) -> Vec<WarningEntry> {
    let mut warnings = Vec::new();
    for suppression in &report.mhl_suppressions {
        warnings.push(WarningEntry::new(suppression.code(), suppression.message()));
    }
    if report.carlson_toledo.method == CtMethod::BlockLowerBound {
        warnings.push(WarningEntry::new(
            "ct-informational",
            "carlson-toledo figure is a single-block lower estimate; excluded from the final bound",
        ));
    }
    if report.carlson_toledo.floored {
        warnings.push(WarningEntry::new(
            "ct-floor-applied",
            "a half-integer product in the carlson-toledo formula was rounded down",
        ));
    }
    if let Some(m) = &report.maximality {
        if m.status == MaximalityStatus::ExceedsBound {
            warnings.push(WarningEntry::new(
                "image-dim-exceeds-bound",
                format!(
                    "image dimension {} exceeds the final bound {}: inconsistent input",
                    m.image_dim, report.final_bound
                ),
            ));
        }
    }
    warnings
}

pub fn hypersurface_section(report: &HypersurfaceReport) -> HypersurfaceSection {
    HypersurfaceSection {
        n: report.n.to_string(),
        d: report.d.to_string(),
        primitive_hodge_numbers: raw_signature_entries(&report.primitive),
        moduli_dimension: dec(&report.moduli_dim),
        h_n_minus_one_one: dec(&report.h_n_minus_one_one),
        image_dim: report.image_dim.as_ref().map(dec),
        sharpness: report.sharpness.map(|s| s.label().to_string()),
    }
}
