use ghm_core::oracles::{generate, GraphKind};
use ghm_core::split::*;
use ghm_core::{eccentricities_bruteforce, Error};
use proptest::prelude::*;

/// Running intersection of the neighborhoods of the first `i` stable
/// vertices by label, as clique labels.
fn running_intersection(h: &SparseSplit, steps: usize) -> Vec<usize> {
    let mut order: Vec<usize> = (0..h.stable.len()).collect();
    order.sort_by_key(|&s| h.stable[s]);
    let mut alive: Vec<bool> = vec![true; h.clique.len()];
    for &s in &order[..steps] {
        for (c, a) in alive.iter_mut().enumerate() {
            *a &= h.nbrs[s].contains(&c);
        }
    }
    let mut out: Vec<usize> = (0..h.clique.len()).filter(|&c| alive[c]).map(|c| h.clique[c]).collect();
    out.sort_unstable();
    out
}

#[test]
fn split_helly_pairs_match_bruteforce() {
    for seed in 0..150u64 {
        let g = generate(&GraphKind::RandomSplitHelly { n: 4 + seed as usize % 40, seed }).unwrap();
        let h = SparseSplit::from_graph(&g).unwrap();
        let truth = eccentricities_bruteforce(&g).unwrap().diameter;
        let (pair, trace) = split_helly_diametral_pair_traced(&h).unwrap();
        assert_eq!(pair.d, truth, "seed {seed}");
        if pair.d > 0 {
            assert_ne!(pair.x, pair.y);
        }
        for (i, group) in trace.iter().enumerate() {
            assert_eq!(group, &running_intersection(&h, i + 1), "seed {seed} step {i}");
        }
        for kernel in [Kernel::Naive, Kernel::Packed] {
            assert_eq!(split_diameter(&h, kernel).unwrap(), truth);
        }
    }
}

#[test]
fn text_format_errors() {
    assert!(matches!(SparseSplit::parse(""), Err(Error::Parse { .. })));
    assert!(matches!(SparseSplit::parse("1 1\n0\n1: 0\n2: 0\n"), Err(Error::Parse { .. })));
    assert!(matches!(SparseSplit::parse("x 1\n"), Err(Error::Parse { line: 1, .. })));
}

fn family() -> impl Strategy<Value = SetFamily> {
    (1usize..150).prop_flat_map(|ground| {
        prop::collection::vec(prop::collection::btree_set(0..ground, 0..8), 0..30)
            .prop_map(move |sets| SetFamily::new(ground, sets.into_iter().map(|s| s.into_iter().collect()).collect()))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn kernels_agree(f in family()) {
        let naive = disjoint_set_naive(&f);
        let packed = disjoint_set_bitpacked(&f);
        prop_assert_eq!(naive.is_some(), packed.is_some());
        for (i, j) in naive.into_iter().chain(packed) {
            prop_assert!(i < j);
            prop_assert!(f.sets[i].iter().all(|x| !f.sets[j].contains(x)));
        }
    }

    #[test]
    fn text_roundtrip(f in family(), labels in any::<u64>()) {
        prop_assume!(f.ground > 0 && f.sets.iter().all(|s| !s.is_empty()));
        let shift = (labels % 1000) as usize;
        let clique: Vec<usize> = (0..f.ground).map(|c| c * 2 + shift).collect();
        let stable: Vec<usize> = (0..f.sets.len()).map(|s| s * 2 + 1 + shift).collect();
        let h = SparseSplit::new(clique, stable, f.sets.clone()).unwrap();
        prop_assert_eq!(SparseSplit::parse(&h.to_text()).unwrap(), h.clone());
        let truth = eccentricities_bruteforce(&h.to_graph()).unwrap().diameter;
        prop_assert_eq!(split_diameter(&h, Kernel::Packed).unwrap(), truth);
    }
}
