//! Signature-space search: enumerate canonical signatures of a fixed weight
//! in lexicographic order and keep those satisfying a predicate.
//!
//! Enumeration is over the dense tuple `(h^{w,0}, h^{w-1,1}, ..., h^{0,w})`;
//! only the upper half is free, the rest follows by symmetry. Each signature
//! appears exactly once because only canonical forms (`h^{w,0} >= 1`) are
//! generated. Candidate evaluation fans out over a thread pool in chunks;
//! results are emitted in enumeration order regardless.

use hodge_locus::bounds::{self, BoundsReport, CtMethod};
use hodge_locus::signature::{HodgeSignature, NormalizedSignature};
use rayon::prelude::*;

/// Hard caps keeping the enumeration tractable.
pub const MAX_SEARCH_TOTAL: u64 = 64;
pub const MAX_SEARCH_WEIGHT: i64 = 64;

const CHUNK: usize = 1024;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Predicate {
    /// The Hodge-locus estimate exists and beats the Carlson-Toledo figure.
    MhlLtCt,
    /// Level at least 3.
    LevelGe3,
    /// The Hodge-locus estimate exists and is strictly the best bound, so a
    /// variation attaining it would be maximal.
    SharpCandidates,
}

impl Predicate {
    pub fn label(self) -> &'static str {
        match self {
            Predicate::MhlLtCt => "mhl-lt-ct",
            Predicate::LevelGe3 => "level-ge-3",
            Predicate::SharpCandidates => "sharp-candidates",
        }
    }

    pub fn holds(self, report: &BoundsReport) -> bool {
        match self {
            Predicate::LevelGe3 => report.level >= 3,
            Predicate::MhlLtCt => report.mhl_lt_ct == Some(true),
            Predicate::SharpCandidates => match &report.mhl_upper {
                None => false,
                Some(witness) => {
                    witness.bound < report.griffiths_bound
                        && (report.carlson_toledo.method != CtMethod::Weight4ClosedForm
                            || witness.bound < report.carlson_toledo.value)
                }
            },
        }
    }
}

/// All canonical signatures of the given weight with total dimension at most
/// `max_total`, in lexicographic order of the dense tuple.
pub fn enumerate_signatures(weight: i64, max_total: u64) -> Vec<NormalizedSignature> {
    // free positions in dense order: p = w, w-1, ..., down to the middle
    let mut positions: Vec<(i64, u64)> = Vec::new(); // (p, dimension cost)
    for p in ((weight / 2 + 1)..=weight).rev() {
        positions.push((p, 2));
    }
    if weight % 2 == 0 {
        positions.push((weight / 2, 1));
    }

    let mut out = Vec::new();
    let mut current: Vec<(i64, u64)> = Vec::new();
    fn recurse(
        positions: &[(i64, u64)],
        index: usize,
        budget: u64,
        weight: i64,
        current: &mut Vec<(i64, u64)>,
        out: &mut Vec<NormalizedSignature>,
    ) {
        if index == positions.len() {
            let entries: Vec<(i64, u64)> = current
                .iter()
                .flat_map(|&(p, v)| [(p, v), (weight - p, v)])
                .collect();
            let sig = HodgeSignature::from_counts(weight, &entries)
                .normalize()
                .expect("enumerated signatures are canonical");
            out.push(sig);
            return;
        }
        let (p, cost) = positions[index];
        let start = u64::from(index == 0); // h^{w,0} >= 1
        let mut value = start;
        while value * cost <= budget {
            current.push((p, value));
            recurse(
                positions,
                index + 1,
                budget - value * cost,
                weight,
                current,
                out,
            );
            current.pop();
            value += 1;
        }
    }
    recurse(&positions, 0, max_total, weight, &mut current, &mut out);
    out
}

/// Reports for all signatures matching the predicate, in enumeration order,
/// truncated to `limit` when given.
pub fn run_search(
    weight: i64,
    max_total: u64,
    predicate: Predicate,
    limit: Option<u64>,
) -> Vec<BoundsReport> {
    let candidates = enumerate_signatures(weight, max_total);
    let mut matches = Vec::new();
    let limit = limit.map(|l| l as usize);
    for chunk in candidates.chunks(CHUNK) {
        let reports: Vec<Option<BoundsReport>> = chunk
            .par_iter()
            .map(|sig| {
                let report = bounds::report(sig, None);
                predicate.holds(&report).then_some(report)
            })
            .collect();
        for report in reports.into_iter().flatten() {
            if let Some(l) = limit {
                if matches.len() >= l {
                    return matches;
                }
            }
            matches.push(report);
        }
        if let Some(l) = limit {
            if matches.len() >= l {
                break;
            }
        }
    }
    matches
}
