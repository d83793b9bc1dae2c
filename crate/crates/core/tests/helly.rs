mod common;

use ghm_core::fixtures;
use ghm_core::helly::{
    helly_diametral_pair, helly_radius, small_eccentricities, small_eccentricities_trace, SampleParams,
};
use ghm_core::metric::distance_matrix;
use ghm_core::oracles::generate::random_tree;
use ghm_core::{bfs, eccentricities_bruteforce, Graph};
use proptest::prelude::*;

/// `{ b : A ⊆ N^k[b] }` from the distance matrix.
fn covering(d: &[Vec<u32>], a: &[usize], k: u32) -> Vec<usize> {
    (0..d.len()).filter(|&b| a.iter().all(|&x| d[b][x] <= k)).collect()
}

#[test]
fn corpus_radius_and_diameter() {
    for inst in common::helly_corpus(40, 300) {
        let truth = eccentricities_bruteforce(&inst.g).unwrap();
        let params = SampleParams::with_seed(11);
        let r = helly_radius(&inst.g, &params).unwrap();
        assert_eq!(r.radius, truth.radius, "{}", inst.name);
        let p = helly_diametral_pair(&inst.g, &params).unwrap();
        assert_eq!(p.d, truth.diameter, "{}", inst.name);
        assert_eq!(bfs(&inst.g, &[p.x]).unwrap().get(p.y), p.d);
    }
}

#[test]
fn small_eccentricities_levels_on_king() {
    let g = fixtures::king(5, 6);
    let d = distance_matrix(&g);
    let a = [0, 5, 29];
    for state in small_eccentricities_trace(&g, &a, 6).unwrap() {
        let mut members: Vec<usize> = state.groups.iter().flat_map(|x| x.members.clone()).collect();
        members.sort_unstable();
        assert_eq!(members, a);
        for group in &state.groups {
            assert_eq!(group.witness, covering(&d, &group.members, state.level));
        }
    }
}

fn tree_strategy() -> impl Strategy<Value = Graph> {
    (2usize..60, any::<u64>()).prop_map(|(n, seed)| random_tree(n, seed))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn radius_is_half_the_diameter_on_trees(g in tree_strategy(), seed in any::<u64>()) {
        let truth = eccentricities_bruteforce(&g).unwrap();
        let r = helly_radius(&g, &SampleParams::with_seed(seed)).unwrap();
        prop_assert_eq!(r.radius, truth.radius);
        prop_assert_eq!(truth.radius, truth.diameter.div_ceil(2));
    }

    #[test]
    fn covering_sets_match_and_grow(g in tree_strategy(), picks in prop::collection::vec(any::<prop::sample::Index>(), 1..6)) {
        let d = distance_matrix(&g);
        let a: Vec<usize> = picks.iter().map(|i| i.index(g.n())).collect();
        let mut prev: Vec<usize> = Vec::new();
        for k in 0..=eccentricities_bruteforce(&g).unwrap().diameter {
            let (b, _) = small_eccentricities(&g, &a, k).unwrap();
            let got = b.to_sorted_vec();
            prop_assert_eq!(&got, &covering(&d, &a, k));
            prop_assert!(prev.iter().all(|v| got.contains(v)));
            prev = got;
        }
    }

    #[test]
    fn king_diameter(rows in 1usize..12, cols in 2usize..12, seed in any::<u64>()) {
        let g = fixtures::king(rows, cols);
        let p = helly_diametral_pair(&g, &SampleParams::with_seed(seed)).unwrap();
        prop_assert_eq!(p.d, eccentricities_bruteforce(&g).unwrap().diameter);
    }
}
