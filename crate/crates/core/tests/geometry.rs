//! Module-side geometry: counts, the endomorphism equivalence, injectivity on
//! the non-hereditary locus, and the golden rank-4 catalog.

use silted::classify::catalan;
use silted::modules::enumerate_stt;
use silted::quiver::BoundQuiverAlgebra;
use silted::surface::{
    enumerate_triangulations, enumerate_triangulations_with, Chord, Triangulation,
    TriangulationClass,
};
use std::collections::BTreeSet;

fn tri(n: usize, chords: &[(usize, usize)]) -> Triangulation {
    Triangulation::new(n, chords.iter().map(|&(a, b)| Chord::new(a, b, n).unwrap())).unwrap()
}

#[test]
fn triangulation_counts_to_rank_ten() {
    for n in 1..=10 {
        let mut total = 0u128;
        let mut with_extras = 0u128;
        let mut hereditary = 0u128;
        enumerate_triangulations_with(n, |t| {
            total += 1;
            if t.contains_extras_chord() {
                with_extras += 1;
                if t.complete_tile_count() == 0 {
                    hereditary += 1;
                }
            }
        })
        .unwrap();
        assert_eq!(total, catalan(n + 1), "all triangulations at rank {n}");
        assert_eq!(with_extras, catalan(n), "triangulations through the extras chord at rank {n}");
        assert_eq!(hereditary, 1 << (n - 1), "hereditary triangulations at rank {n}");
    }
}

#[test]
fn stt_counts_to_rank_ten() {
    for n in 1..=10 {
        let mut total = 0u128;
        let mut full_support = 0u128;
        silted::modules::enumerate_stt_with(n, |pair| {
            total += 1;
            if pair.support.len() == n {
                full_support += 1;
            }
        })
        .unwrap();
        assert_eq!(total, catalan(n + 1), "support τ-tilting pairs at rank {n}");
        assert_eq!(full_support, catalan(n), "τ-tilting modules at rank {n}");
    }
}

#[test]
fn every_tau_tilting_module_keeps_the_extremal_interval_to_rank_eight() {
    for n in 1..=8 {
        for pair in enumerate_stt(n).unwrap() {
            if pair.support.len() == n {
                assert!(
                    pair.modules.summands().any(|m| m.lo() == 1 && m.hi() == n),
                    "rank {n}: {pair:?}"
                );
            }
        }
    }
}

#[test]
fn triangulations_biject_with_stt_to_rank_eight() {
    for n in 1..=8 {
        let pairs: BTreeSet<_> = enumerate_stt(n).unwrap().into_iter().collect();
        let mut images = BTreeSet::new();
        enumerate_triangulations_with(n, |t| {
            images.insert(t.module_pair());
        })
        .unwrap();
        assert_eq!(images, pairs, "rank {n}");
    }
}

#[test]
fn induced_equals_endomorphism_to_rank_seven() {
    for n in 1..=7 {
        for t in enumerate_triangulations(n).unwrap() {
            if !t.contains_extras_chord() {
                continue;
            }
            let alg = t.induced_algebra().unwrap();
            let end = t.module_pair().modules.endomorphism_algebra();
            assert_eq!(alg.canonical_form(), end.canonical_form(), "rank {n}, {t:?}");
        }
    }
}

#[test]
fn non_hereditary_injectivity_to_rank_seven() {
    for n in 1..=7 {
        let mut forms = BTreeSet::new();
        let mut count = 0usize;
        for t in enumerate_triangulations(n).unwrap() {
            if t.contains_extras_chord() && t.complete_tile_count() > 0 {
                count += 1;
                forms.insert(t.induced_algebra().unwrap().canonical_form());
            }
        }
        assert_eq!(forms.len(), count, "rank {n}: distinct algebras per triangulation");
    }
}

#[test]
fn induced_algebras_are_gentle_forests_to_rank_six() {
    for n in 1..=6 {
        for t in enumerate_triangulations(n).unwrap() {
            if !t.contains_extras_chord() {
                continue;
            }
            let alg = t.induced_algebra().unwrap();
            assert!(alg.is_gentle(), "rank {n}");
            assert!(alg.is_forest(), "rank {n}");
            assert!(alg.is_connected(), "rank {n}");
            let gd = alg.global_dimension().unwrap();
            match t.classify().unwrap() {
                TriangulationClass::Hereditary => assert!(gd <= 1),
                TriangulationClass::NonHereditary => assert!(gd == 2),
            }
        }
    }
}

#[test]
fn hereditary_means_no_relations_on_connected_outputs() {
    for n in 1..=6 {
        for t in enumerate_triangulations(n).unwrap() {
            if !t.contains_extras_chord() {
                continue;
            }
            let alg = t.induced_algebra().unwrap();
            let gd = alg.global_dimension().unwrap();
            if alg.arrow_count() == 0 {
                assert_eq!(gd, 0);
            } else {
                assert_eq!(gd == 1, alg.relations().is_empty(), "rank {n}");
            }
        }
    }
}

#[test]
fn rank_three_has_one_non_hereditary_class() {
    let mut forms = BTreeSet::new();
    for t in enumerate_triangulations(3).unwrap() {
        if t.contains_extras_chord() && t.classify().unwrap() == TriangulationClass::NonHereditary {
            forms.insert(t.induced_algebra().unwrap().canonical_form());
        }
    }
    assert_eq!(forms.len(), 1);
}

/// The ten rank-4 tilting triangulations with their hereditary verdicts, as
/// chord data on positions 0..=6 (extras at 1 and 6).
fn rank_four_catalog() -> Vec<(Triangulation, TriangulationClass)> {
    use TriangulationClass::{Hereditary, NonHereditary};
    vec![
        (tri(4, &[(1, 6), (2, 6), (3, 6), (4, 6)]), Hereditary),
        (tri(4, &[(1, 6), (2, 6), (3, 6), (3, 5)]), Hereditary),
        (tri(4, &[(1, 6), (1, 5), (2, 5), (2, 4)]), Hereditary),
        (tri(4, &[(1, 6), (1, 5), (2, 5), (3, 5)]), Hereditary),
        (tri(4, &[(1, 6), (1, 3), (3, 6), (4, 6)]), NonHereditary),
        (tri(4, &[(1, 6), (1, 4), (4, 6), (1, 3)]), NonHereditary),
        (tri(4, &[(1, 6), (1, 3), (3, 6), (3, 5)]), NonHereditary),
        (tri(4, &[(1, 6), (1, 4), (4, 6), (2, 4)]), NonHereditary),
        (tri(4, &[(1, 6), (2, 6), (2, 4), (4, 6)]), NonHereditary),
        (tri(4, &[(1, 6), (1, 5), (3, 5), (1, 3)]), NonHereditary),
    ]
}

#[test]
fn rank_four_golden_catalog() {
    let catalog = rank_four_catalog();
    // classifications match the listed verdicts
    for (t, class) in &catalog {
        assert_eq!(t.classify().unwrap(), *class, "{t:?}");
    }
    // the ten algebras are pairwise non-isomorphic: 4 hereditary + 6 not
    let forms: BTreeSet<Vec<u8>> = catalog
        .iter()
        .map(|(t, _)| t.induced_algebra().unwrap().canonical_form())
        .collect();
    assert_eq!(forms.len(), 10);
    // and they exhaust the deduplicated catalog of all 14 tilting triangulations
    let mut enumerated = BTreeSet::new();
    for t in enumerate_triangulations(4).unwrap() {
        if t.contains_extras_chord() {
            enumerated.insert(t.induced_algebra().unwrap().canonical_form());
        }
    }
    assert_eq!(forms, enumerated);
}

#[test]
fn rank_four_complete_tile_examples() {
    // one complete tile away from the extras chord...
    let away = tri(4, &[(1, 6), (2, 6), (2, 4), (4, 6)]);
    assert_eq!(away.complete_tile_count(), 1);
    let tile = away.tiles().into_iter().find(|t| t.is_complete()).unwrap();
    assert!(!tile.corners.contains(&1) || !tile.corners.contains(&6));
    // ...and one with the extras chord as an edge
    let through = tri(4, &[(1, 6), (1, 3), (3, 6), (4, 6)]);
    let tile = through.tiles().into_iter().find(|t| t.is_complete()).unwrap();
    assert_eq!(tile.corners, [1, 3, 6]);
    // the induced algebra of the first contains the length-two zero path
    let alg = away.induced_algebra().unwrap();
    assert_eq!(alg.relations().len(), 1);
    assert_eq!(alg.global_dimension().unwrap(), 2);
}

#[test]
fn canonical_form_is_relabeling_invariant_on_outputs() {
    // a deterministic linear-congruential shuffle of vertex labels
    let mut state = 0x2545F4914F6CDD1Du64;
    let mut next = move |k: usize| {
        state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        (state >> 33) as usize % k
    };
    for t in enumerate_triangulations(4).unwrap() {
        if !t.contains_extras_chord() {
            continue;
        }
        let alg = t.induced_algebra().unwrap();
        let k = alg.vertex_count();
        let mut perm: Vec<usize> = (0..k).collect();
        for i in (1..k).rev() {
            perm.swap(i, next(i + 1));
        }
        let labels: Vec<String> = (0..k).map(|i| format!("w{i}")).collect();
        let arrows: Vec<(usize, usize, i64)> = alg
            .quiver()
            .arrows()
            .iter()
            .map(|a| (perm[a.src], perm[a.tgt], a.grade))
            .collect();
        // shuffle the arrow list order as well, remapping the relation indices
        let mut order: Vec<usize> = (0..arrows.len()).collect();
        order.sort_by_key(|&i| arrows[i]);
        let rank_of: Vec<usize> = {
            let mut r = vec![0; arrows.len()];
            for (pos, &i) in order.iter().enumerate() {
                r[i] = pos;
            }
            r
        };
        let sorted_arrows: Vec<(usize, usize, i64)> = order.iter().map(|&i| arrows[i]).collect();
        let relations: Vec<(usize, usize)> = alg
            .relations()
            .iter()
            .map(|&(a, b)| (rank_of[a], rank_of[b]))
            .collect();
        let relabeled: BoundQuiverAlgebra =
            silted::quiver::build_algebra(labels, sorted_arrows, relations).unwrap();
        assert_eq!(alg.canonical_form(), relabeled.canonical_form());
        assert!(alg.is_isomorphic(&relabeled));
    }
}
