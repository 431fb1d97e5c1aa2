//! The combinatorial module rules frozen in the convention ledger must agree
//! with a from-scratch matrix-representation oracle.

mod common;

use common::{
    all_intervals, compose_maps, endomorphism_oracle, hom_basis, hom_dim_rep, interval_rep,
    map_is_zero, tau_oracle,
};
use silted::modules::{
    composite_nonzero, enumerate_stt, hom_dim, tau, IntervalModule, ModuleCollection,
};

#[test]
fn hom_dimensions_agree_up_to_rank_eight() {
    for n in 1..=8 {
        for a in all_intervals(n) {
            for b in all_intervals(n) {
                let expected = hom_dim_rep(&interval_rep(&a), &interval_rep(&b));
                assert_eq!(
                    hom_dim(a, b),
                    expected,
                    "Hom({a:?}, {b:?}) over rank {n}"
                );
            }
        }
    }
}

#[test]
fn specific_hom_values_from_the_oracle() {
    let m = |lo, hi| IntervalModule::new(lo, hi, 2).unwrap();
    assert_eq!(hom_dim_rep(&interval_rep(&m(1, 2)), &interval_rep(&m(1, 1))), 1);
    assert_eq!(hom_dim_rep(&interval_rep(&m(1, 1)), &interval_rep(&m(2, 2))), 0);
    assert_eq!(hom_dim_rep(&interval_rep(&m(2, 2)), &interval_rep(&m(1, 2))), 1);
}

#[test]
fn tau_agrees_with_nakayama_kernel_up_to_rank_eight() {
    for n in 1..=8 {
        for m in all_intervals(n) {
            assert_eq!(tau(m), tau_oracle(&m), "τ({m:?}) over rank {n}");
        }
    }
}

#[test]
fn composites_agree_up_to_rank_six() {
    for n in 1..=6 {
        let intervals = all_intervals(n);
        for &a in &intervals {
            for &b in &intervals {
                if hom_dim(a, b) == 0 {
                    continue;
                }
                for &c in &intervals {
                    if hom_dim(b, c) == 0 {
                        continue;
                    }
                    let f = hom_basis(&interval_rep(&a), &interval_rep(&b)).pop().unwrap();
                    let g = hom_basis(&interval_rep(&b), &interval_rep(&c)).pop().unwrap();
                    let nonzero = !map_is_zero(&compose_maps(&g, &f));
                    assert_eq!(
                        composite_nonzero(a, b, c),
                        nonzero,
                        "composite {a:?} -> {b:?} -> {c:?}"
                    );
                }
            }
        }
    }
}

#[test]
fn endomorphism_quivers_agree_up_to_rank_five() {
    for n in 1..=5 {
        for pair in enumerate_stt(n).unwrap() {
            let items: Vec<IntervalModule> = pair.modules.summands().collect();
            if items.is_empty() {
                continue;
            }
            let production =
                ModuleCollection::new(n, items.clone()).unwrap().endomorphism_algebra();
            let oracle = endomorphism_oracle(&items);
            assert_eq!(
                production.canonical_form(),
                oracle.canonical_form(),
                "End quiver of {items:?}"
            );
        }
    }
}

#[test]
fn tau_rigidity_matches_oracle_up_to_rank_five() {
    for n in 1..=5 {
        let intervals = all_intervals(n);
        for &a in &intervals {
            for &b in &intervals {
                let collection = ModuleCollection::new(n, [a, b]).unwrap();
                let mut oracle_rigid = true;
                for &x in &[a, b] {
                    for &y in &[a, b] {
                        if let Some(t) = tau_oracle(&y) {
                            oracle_rigid &=
                                hom_dim_rep(&interval_rep(&x), &interval_rep(&t)) == 0;
                        }
                    }
                }
                assert_eq!(collection.is_tau_rigid(), oracle_rigid, "pair {a:?}, {b:?}");
            }
        }
    }
}
