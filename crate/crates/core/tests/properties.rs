//! Property tests over random canonical signatures: the dimension sum rule,
//! agreement of the two level routes, the two domain-dimension routes, the
//! two codimension routes, and the report gates.

use hodge_locus::bounds::{
    carlson_toledo, mhl_upper_orthogonal, mhl_upper_symplectic, report, CtMethod, SimplicityStatus,
};
use hodge_locus::lie::{
    cross_check_domain_dim, isotropy, orthogonal_codim_via_chain, symplectic_codim_via_chain,
};
use hodge_locus::signature::{HodgeSignature, NormalizedSignature, Parity};
use num_bigint::BigUint;
use proptest::prelude::*;

fn build_signature(w: i64, top: u64, rest: &[u64]) -> NormalizedSignature {
    let mut entries: Vec<(i64, u64)> = vec![(w, top), (0, top)];
    let mut ps: Vec<i64> = ((w / 2 + 1)..w).rev().collect();
    if w % 2 == 0 {
        ps.push(w / 2);
    }
    assert_eq!(ps.len(), rest.len());
    for (&p, &v) in ps.iter().zip(rest) {
        entries.push((p, v));
        entries.push((w - p, v));
    }
    HodgeSignature::from_counts(w, &entries)
        .normalize()
        .expect("constructed signatures are canonical")
}

fn rest_len(w: i64) -> usize {
    (w - 1 - w / 2).max(0) as usize + usize::from(w % 2 == 0)
}

/// Any canonical signature of weight 1..=8 with dim V <= 54.
fn arb_signature() -> impl Strategy<Value = NormalizedSignature> {
    (1i64..=8).prop_flat_map(|w| {
        (1u64..=6, proptest::collection::vec(0u64..=6, rest_len(w)))
            .prop_map(move |(top, rest)| build_signature(w, top, &rest))
    })
}

/// Even weight >= 4 with a nonzero middle number.
fn arb_orthogonal_with_middle() -> impl Strategy<Value = NormalizedSignature> {
    (2i64..=4).prop_flat_map(|n| {
        let w = 2 * n;
        (
            1u64..=6,
            proptest::collection::vec(0u64..=6, rest_len(w) - 1),
            1u64..=6,
        )
            .prop_map(move |(top, mut rest, middle)| {
                rest.push(middle);
                build_signature(w, top, &rest)
            })
    })
}

/// Odd weight with dim V > 2.
fn arb_symplectic_large() -> impl Strategy<Value = NormalizedSignature> {
    prop_oneof![
        (2u64..=6).prop_map(|top| build_signature(1, top, &[])),
        (1i64..=3).prop_flat_map(|n| {
            let w = 2 * n + 1;
            (1u64..=6, proptest::collection::vec(0u64..=6, rest_len(w)))
                .prop_map(move |(top, rest)| build_signature(w, top, &rest))
                .prop_filter("need dim V > 2", |sig| *sig.dim_v() > BigUint::from(2u8))
        }),
    ]
}

proptest! {
    #[test]
    fn infinitesimal_numbers_sum_to_the_algebra_dimension(sig in arb_signature()) {
        let inf = sig.infinitesimal_numbers();
        prop_assert_eq!(inf.total(), inf.expected_algebra_dimension());
    }

    #[test]
    fn infinitesimal_numbers_are_symmetric(sig in arb_signature()) {
        let inf = sig.infinitesimal_numbers();
        for k in 0..=(sig.weight() + 1) {
            prop_assert_eq!(inf.get(k), inf.get(-k));
        }
    }

    #[test]
    fn level_criterion_agrees_with_level(sig in arb_signature()) {
        let level = sig.level();
        prop_assert_eq!(
            level >= 3,
            sig.level_at_least_three().is_some(),
            "level {} of {}",
            level,
            sig
        );
        prop_assert!(level <= sig.weight());
        if sig.parity() == Parity::Symplectic {
            prop_assert_eq!(level, sig.weight());
        }
    }

    #[test]
    fn domain_dimension_routes_agree(sig in arb_signature()) {
        prop_assert_eq!(
            cross_check_domain_dim(&sig).unwrap(),
            sig.domain_dimension(),
            "{}", sig
        );
    }

    #[test]
    fn isotropy_factors_cover_the_space(sig in arb_signature()) {
        let iso = isotropy(&sig);
        let u_sum: BigUint = iso.unitary_factors.iter().sum();
        match sig.parity() {
            Parity::Orthogonal => {
                let so = iso.so_factor.clone().unwrap();
                prop_assert_eq!(so + (&u_sum << 1), sig.dim_v().clone());
            }
            Parity::Symplectic => {
                prop_assert!(iso.so_factor.is_none());
                prop_assert_eq!(&u_sum << 1, sig.dim_v().clone());
            }
        }
    }

    #[test]
    fn normalization_is_twist_invariant(sig in arb_signature(), m in -5i64..=5) {
        let twisted = sig.tate_twist(m);
        let back = twisted.normalize().unwrap();
        prop_assert_eq!(&back, &sig);
        prop_assert_eq!(twisted.dim_v(), sig.dim_v().clone());
        // multiset of nonzero values is preserved by the shift
        let mut before: Vec<BigUint> = twisted.support().map(|(_, v)| v.clone()).collect();
        let mut after: Vec<BigUint> = back.support().map(|(_, v)| v.clone()).collect();
        before.sort();
        after.sort();
        prop_assert_eq!(before, after);
    }

    #[test]
    fn orthogonal_codim_routes_agree(sig in arb_orthogonal_with_middle()) {
        let witness = mhl_upper_orthogonal(&sig).unwrap();
        let n = sig.weight() / 2;
        // closed form, halved-dimension form, and the group-dimension chain
        let below_middle: BigUint = sig
            .support()
            .filter(|&(p, _)| p < n)
            .map(|(_, v)| v)
            .sum();
        prop_assert_eq!(&witness.codim, &below_middle);
        prop_assert_eq!(&witness.codim << 1, sig.dim_v() - sig.hodge(n));
        prop_assert_eq!(
            orthogonal_codim_via_chain(&sig).unwrap(),
            witness.codim.clone(),
            "{}", sig
        );
        prop_assert_eq!(witness.bound + 1u8, witness.codim);
    }

    #[test]
    fn symplectic_codim_routes_agree(sig in arb_symplectic_large()) {
        // the default block and every explicitly chosen block
        let default = mhl_upper_symplectic(&sig, None).unwrap();
        prop_assert!(default.codim >= BigUint::from(1u8));
        let support: Vec<i64> = sig.support().map(|(p, _)| p).collect();
        for p in support {
            let witness = mhl_upper_symplectic(&sig, Some((p, sig.weight() - p))).unwrap();
            prop_assert_eq!(
                &witness.codim,
                &(sig.dim_v() - sig.hodge(p) - 1u8)
            );
            prop_assert_eq!(
                symplectic_codim_via_chain(&sig, p).unwrap(),
                witness.codim.clone(),
                "block {} of {}", p, sig
            );
            prop_assert!(witness.bound >= default.bound.clone());
        }
    }

    #[test]
    fn carlson_toledo_stays_within_transversality(sig in arb_signature()) {
        let ct = carlson_toledo(&sig);
        prop_assert!(ct.value <= sig.infinitesimal_numbers().get(1));
        if sig.weight() == 4 {
            prop_assert_eq!(ct.method, CtMethod::Weight4ClosedForm);
        } else {
            prop_assert_eq!(ct.method, CtMethod::BlockLowerBound);
        }
    }

    #[test]
    fn report_final_bound_is_the_minimum_of_applicable_bounds(sig in arb_signature()) {
        let rep = report(&sig, None);
        let mut expected = rep.griffiths_bound.clone();
        if let Some(witness) = &rep.mhl_upper {
            expected = expected.min(witness.bound.clone());
            prop_assert!(rep.level >= 3);
            prop_assert!(sig.level_at_least_three().is_some());
            prop_assert_eq!(rep.simplicity.status, SimplicityStatus::Simple);
            prop_assert!(rep.mhl_suppressions.is_empty());
        } else {
            prop_assert!(!rep.mhl_suppressions.is_empty());
        }
        if rep.carlson_toledo.method == CtMethod::Weight4ClosedForm {
            expected = expected.min(rep.carlson_toledo.value.clone());
        }
        prop_assert_eq!(rep.final_bound.clone(), expected);
        prop_assert!(!rep.legal_basis.is_empty());
        // weight 2 never carries a Hodge-locus figure
        if sig.weight() == 2 {
            prop_assert!(rep.mhl_upper.is_none());
        }
    }
}
