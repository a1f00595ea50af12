//! Command implementations behind the `hodge-locus` binary: input parsing,
//! report assembly, and rendering. Everything is a pure function from
//! arguments to an output string plus an exit code, so the whole surface is
//! testable without spawning processes.
//!
//! Exit codes: 0 success, 2 parse or validation failure, 3 image dimension
//! inconsistent with the final bound, 4 search cap exceeded.

pub mod document;
pub mod render;
pub mod search;

use std::str::FromStr;

use num_bigint::BigUint;
use thiserror::Error;

use hodge_locus::bounds::{self, MaximalityStatus};
use hodge_locus::hypersurface::{self, HypersurfaceReport};
use hodge_locus::signature::HodgeSignature;

use document::{
    bounds_section, bounds_warnings, hypersurface_section, invariants_section, maximality_section,
    raw_signature_entries, signature_section, InputEcho, ReportDocument, WarningEntry,
};
use search::Predicate;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID_INPUT: i32 = 2;
pub const EXIT_INCONSISTENT_IMAGE: i32 = 3;
pub const EXIT_CAP_EXCEEDED: i32 = 4;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid hodge number list at entry {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("invalid argument: {0}")]
    Argument(String),
    #[error("signature rejected:\n{0}")]
    Validation(String),
    #[error("search cap exceeded: {0}")]
    CapExceeded(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::CapExceeded(_) => EXIT_CAP_EXCEEDED,
            _ => EXIT_INVALID_INPUT,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

fn parse_big(text: &str, what: &str) -> Result<BigUint, CliError> {
    BigUint::from_str(text.trim()).map_err(|e| {
        CliError::Argument(format!("{what} {text:?} is not a nonnegative integer: {e}"))
    })
}

/// Parse `--hodge`: either a dense comma list ordered `h^{w,0}` first, or
/// sparse `p:value` entries. Sparse entries fill their mirror index
/// automatically; conflicting duplicates are rejected.
pub fn parse_hodge_list(weight: i64, text: &str) -> Result<HodgeSignature, CliError> {
    let items: Vec<&str> = text.split(',').map(str::trim).collect();
    if text.contains(':') {
        let mut entries: Vec<(i64, BigUint)> = Vec::new();
        for (position, item) in items.iter().enumerate() {
            let (p_text, v_text) = item.split_once(':').ok_or_else(|| CliError::Parse {
                position,
                message: format!("sparse entry {item:?} is not of the form p:value"),
            })?;
            let p = i64::from_str(p_text.trim()).map_err(|e| CliError::Parse {
                position,
                message: format!("index {p_text:?} is not an integer: {e}"),
            })?;
            let value = BigUint::from_str(v_text.trim()).map_err(|e| CliError::Parse {
                position,
                message: format!("value {v_text:?} is not a nonnegative integer: {e}"),
            })?;
            if let Some((_, existing)) = entries.iter().find(|(q, _)| *q == p) {
                if *existing != value {
                    return Err(CliError::Parse {
                        position,
                        message: format!("index {p} given twice with conflicting values"),
                    });
                }
                continue;
            }
            entries.push((p, value));
        }
        // mirror completion
        let given = entries.clone();
        for (p, value) in given {
            let mirror = weight - p;
            match entries.iter().find(|(q, _)| *q == mirror) {
                None => entries.push((mirror, value)),
                Some((_, existing)) if *existing != value => {
                    return Err(CliError::Parse {
                        position: 0,
                        message: format!(
                            "h^{{{p},{mirror}}} conflicts with its mirror h^{{{mirror},{p}}}"
                        ),
                    });
                }
                Some(_) => {}
            }
        }
        Ok(HodgeSignature::new(weight, entries))
    } else {
        let expected = usize::try_from(weight + 1)
            .map_err(|_| CliError::Argument(format!("weight {weight} must be nonnegative")))?;
        if items.len() != expected {
            return Err(CliError::Parse {
                position: items.len().saturating_sub(1),
                message: format!(
                    "dense list for weight {weight} needs {expected} values (h^{{{weight},0}} down to h^{{0,{weight}}}), got {}",
                    items.len()
                ),
            });
        }
        let mut entries = Vec::new();
        for (position, item) in items.iter().enumerate() {
            let value = BigUint::from_str(item).map_err(|e| CliError::Parse {
                position,
                message: format!("value {item:?} is not a nonnegative integer: {e}"),
            })?;
            entries.push((weight - position as i64, value));
        }
        Ok(HodgeSignature::new(weight, entries))
    }
}

fn render(doc: &ReportDocument, format: Format) -> String {
    match format {
        Format::Text => render::render_text(doc),
        Format::Json => render::render_json(doc),
    }
}

fn exit_for(report: &bounds::BoundsReport) -> i32 {
    match &report.maximality {
        Some(m) if m.status == MaximalityStatus::ExceedsBound => EXIT_INCONSISTENT_IMAGE,
        _ => EXIT_OK,
    }
}

/// Validate, normalize and analyze one signature.
pub fn run_analyze(
    weight: i64,
    hodge: &str,
    image_dim: Option<&str>,
    format: Format,
) -> Result<(String, i32), CliError> {
    let raw = parse_hodge_list(weight, hodge)?;
    let image = image_dim
        .map(|text| parse_big(text, "image dimension"))
        .transpose()?;

    let validation = raw.validate();
    if !validation.normalizable() {
        let lines: Vec<String> = validation
            .errors
            .iter()
            .map(|issue| format!("  - [{}] {}", issue.name(), issue))
            .collect();
        return Err(CliError::Validation(lines.join("\n")));
    }
    let mut warnings: Vec<WarningEntry> = validation
        .warnings
        .iter()
        .map(|issue| WarningEntry::new(issue.name(), issue.to_string()))
        .collect();

    let normalized = raw.normalize().expect("validation said normalizable");
    if normalized.to_raw() != raw {
        warnings.push(WarningEntry::new(
            "normalized",
            format!(
                "input normalized by a Tate twist: weight {} -> {}",
                raw.weight(),
                normalized.weight()
            ),
        ));
    }

    let report = bounds::report(&normalized, image.as_ref());

    let mut doc = ReportDocument::new(
        "analyze",
        InputEcho {
            weight: Some(weight.to_string()),
            hodge_numbers: Some(raw_signature_entries(&raw)),
            image_dim: image.as_ref().map(|v| v.to_string()),
            ..InputEcho::default()
        },
    );
    doc.signature = Some(signature_section(&normalized));
    doc.invariants = Some(invariants_section(&report));
    doc.bounds = Some(bounds_section(&report));
    doc.maximality = maximality_section(&report);
    warnings.extend(bounds_warnings(&report));
    doc.warnings = warnings;

    Ok((render(&doc, format), exit_for(&report)))
}

fn hypersurface_document(report: &HypersurfaceReport) -> ReportDocument {
    let mut doc = ReportDocument::new(
        "hypersurface",
        InputEcho {
            dim: Some(report.n.to_string()),
            degree: Some(report.d.to_string()),
            ..InputEcho::default()
        },
    );
    doc.hypersurface = Some(hypersurface_section(report));
    doc.signature = Some(signature_section(report.signature()));
    doc.invariants = Some(invariants_section(&report.bounds));
    doc.bounds = Some(bounds_section(&report.bounds));
    doc.maximality = maximality_section(&report.bounds);
    let mut warnings: Vec<WarningEntry> = report
        .notes
        .iter()
        .map(|note| WarningEntry::new(note.code(), note.message()))
        .collect();
    warnings.extend(bounds_warnings(&report.bounds));
    doc.warnings = warnings;
    doc
}

/// Hodge numbers, moduli count and bound analysis of one hypersurface family.
pub fn run_hypersurface(dim: u32, degree: u32, format: Format) -> Result<(String, i32), CliError> {
    let report = hypersurface::hypersurface_report(dim, degree)
        .map_err(|e| CliError::Argument(e.to_string()))?;
    let doc = hypersurface_document(&report);
    Ok((render(&doc, format), exit_for(&report.bounds)))
}

/// Enumerate signatures of one weight and report those satisfying the
/// predicate; one document per match, in a fixed lexicographic order.
pub fn run_search(
    weight: i64,
    max_total: u64,
    predicate: Predicate,
    limit: Option<u64>,
    format: Format,
) -> Result<(String, i32), CliError> {
    if weight < 1 {
        return Err(CliError::Argument(format!(
            "search weight must be at least 1, got {weight}"
        )));
    }
    if max_total > search::MAX_SEARCH_TOTAL {
        return Err(CliError::CapExceeded(format!(
            "requested total dimension {max_total} exceeds the configured cap {}",
            search::MAX_SEARCH_TOTAL
        )));
    }
    if weight > search::MAX_SEARCH_WEIGHT {
        return Err(CliError::CapExceeded(format!(
            "requested weight {weight} exceeds the configured cap {}",
            search::MAX_SEARCH_WEIGHT
        )));
    }

    let matches = search::run_search(weight, max_total, predicate, limit);
    let mut out = String::new();
    for report in &matches {
        let mut doc = ReportDocument::new(
            "search",
            InputEcho {
                weight: Some(weight.to_string()),
                max_total: Some(max_total.to_string()),
                predicate: Some(predicate.label().to_string()),
                limit: limit.map(|l| l.to_string()),
                ..InputEcho::default()
            },
        );
        doc.signature = Some(signature_section(&report.signature));
        doc.invariants = Some(invariants_section(report));
        doc.bounds = Some(bounds_section(report));
        doc.warnings = bounds_warnings(report);
        match format {
            Format::Text => {
                out.push_str(&render::render_text(&doc));
                out.push('\n');
            }
            Format::Json => out.push_str(&render::render_json_line(&doc)),
        }
    }
    Ok((out, EXIT_OK))
}

/// Thin wrapper over the admissibility check.
pub fn run_admissible(
    domain_dim: &str,
    subdatum_dim: &str,
    image_dim: &str,
    level: i64,
    format: Format,
) -> Result<(String, i32), CliError> {
    let domain = parse_big(domain_dim, "domain dimension")?;
    let subdatum = parse_big(subdatum_dim, "subdatum dimension")?;
    let image = parse_big(image_dim, "image dimension")?;
    let verdict = bounds::admissibility(&domain, &subdatum, &image, level)
        .map_err(|e| CliError::Argument(e.to_string()))?;

    let mut doc = ReportDocument::new(
        "admissible",
        InputEcho {
            domain_dim: Some(domain.to_string()),
            subdatum_dim: Some(subdatum.to_string()),
            image_dim: Some(image.to_string()),
            level: Some(level.to_string()),
            ..InputEcho::default()
        },
    );
    doc.admissibility = Some(document::AdmissibilitySection {
        verdict: verdict.label().to_string(),
        text: verdict.text().to_string(),
    });
    Ok((render(&doc, format), EXIT_OK))
}
