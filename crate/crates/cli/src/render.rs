//! Plain-text rendering of report documents.

use std::fmt::Write as _;

use crate::document::ReportDocument;

fn hodge_line(entries: &[crate::document::HodgeEntry]) -> String {
    entries
        .iter()
        .map(|e| format!("h^{{{},{}}}={}", e.p, e.q, e.value))
        .collect::<Vec<_>>()
        .join("  ")
}

pub fn render_text(doc: &ReportDocument) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "command          {}", doc.command);

    if let Some(h) = &doc.hypersurface {
        let _ = writeln!(out, "hypersurface     dimension {}, degree {}", h.n, h.d);
        let _ = writeln!(
            out,
            "primitive hodge  {}",
            hodge_line(&h.primitive_hodge_numbers)
        );
        let _ = writeln!(out, "moduli dim       {}", h.moduli_dimension);
        let _ = writeln!(out, "h^{{n-1,1}}        {}", h.h_n_minus_one_one);
        if let Some(image) = &h.image_dim {
            let _ = writeln!(out, "image dim        {}", image);
        }
        if let Some(sharpness) = &h.sharpness {
            let _ = writeln!(out, "sharpness        {}", sharpness);
        }
    }

    if let Some(sig) = &doc.signature {
        let _ = writeln!(
            out,
            "signature        weight {} ({}), dim V = {}",
            sig.weight, sig.parity, sig.dim_v
        );
        let _ = writeln!(out, "hodge numbers    {}", hodge_line(&sig.hodge_numbers));
    }

    if let Some(inv) = &doc.invariants {
        match &inv.level_case {
            Some(case) => {
                let mut label = format!("case {}", case.case);
                if let Some(k) = &case.k {
                    let _ = write!(label, ", k={k}");
                }
                if let Some(j) = &case.j {
                    let _ = write!(label, ", j={j}");
                }
                let _ = writeln!(out, "level            {} ({})", inv.level, label);
            }
            None => {
                let _ = writeln!(out, "level            {}", inv.level);
            }
        }
        let _ = writeln!(out, "domain dim       {}", inv.domain_dimension);
        let inf = inv
            .infinitesimal
            .iter()
            .map(|e| format!("h_inf^{}={}", e.k, e.value))
            .collect::<Vec<_>>()
            .join("  ");
        let _ = writeln!(out, "infinitesimal    {}", inf);
    }

    if let Some(bounds) = &doc.bounds {
        let _ = writeln!(out, "bounds");
        let _ = writeln!(out, "  griffiths      {}", bounds.griffiths);
        match &bounds.hodge_locus {
            Some(hl) => {
                let _ = writeln!(out, "  hodge-locus    {}", hl.bound);
                for witness in &hl.witnesses {
                    let _ = writeln!(
                        out,
                        "                 witness [{}] {}",
                        witness.kind, witness.description
                    );
                }
            }
            None => {
                let _ = writeln!(out, "  hodge-locus    (not applicable)");
            }
        }
        let tag = if bounds.carlson_toledo.informational {
            " (informational lower estimate)"
        } else {
            ""
        };
        let _ = writeln!(
            out,
            "  carlson-toledo {} [{}]{}",
            bounds.carlson_toledo.value, bounds.carlson_toledo.method, tag
        );
        if let Some(flag) = bounds.mhl_lt_ct {
            let _ = writeln!(out, "  mhl < ct       {}", if flag { "yes" } else { "no" });
        }
        let _ = writeln!(
            out,
            "  final bound    {} [{}]",
            bounds.final_bound,
            bounds.legal_basis.join(", ")
        );
        let _ = writeln!(
            out,
            "  simplicity     {} ({})",
            bounds.simplicity.status, bounds.simplicity.reason
        );
    }

    if let Some(max) = &doc.maximality {
        let _ = writeln!(
            out,
            "maximality       image dim {}: {}",
            max.image_dim, max.status
        );
    }

    if let Some(adm) = &doc.admissibility {
        let _ = writeln!(out, "verdict          {} ({})", adm.verdict, adm.text);
    }

    if !doc.warnings.is_empty() {
        let _ = writeln!(out, "warnings");
        for warning in &doc.warnings {
            let _ = writeln!(out, "  - [{}] {}", warning.code, warning.message);
        }
    }

    out
}

/// Pretty JSON with a trailing newline; the deterministic machine format.
pub fn render_json(doc: &ReportDocument) -> String {
    let mut out = serde_json::to_string_pretty(doc).expect("documents always serialize");
    out.push('\n');
    out
}

/// Compact one-line JSON used for streamed search results.
pub fn render_json_line(doc: &ReportDocument) -> String {
    let mut out = serde_json::to_string(doc).expect("documents always serialize");
    out.push('\n');
    out
}
