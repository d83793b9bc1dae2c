mod common;

use std::collections::BTreeMap;

use ghm_core::chordal::*;
use ghm_core::fixtures;
use ghm_core::gates::compute_gates;
use ghm_core::helly::SampleParams;
use ghm_core::metric::{distance_matrix, is_connected};
use ghm_core::oracles::generate::random_chordal;
use ghm_core::split::{split_diameter, Kernel};
use ghm_core::{eccentricities_bruteforce, Graph};
use proptest::prelude::*;

/// Connected components of `g` induced on `keep`, as sorted lists sorted
/// by first vertex.
fn components(g: &Graph, keep: &[usize]) -> Vec<Vec<usize>> {
    let mut inside = vec![false; g.n()];
    for &v in keep {
        inside[v] = true;
    }
    let mut out = Vec::new();
    for &s in keep {
        if !inside[s] {
            continue;
        }
        inside[s] = false;
        let mut comp = vec![s];
        let mut i = 0;
        while i < comp.len() {
            for &w in g.neighbors(comp[i]) {
                if inside[w] {
                    inside[w] = false;
                    comp.push(w);
                }
            }
            i += 1;
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out.sort();
    out
}

fn check_steps(g: &Graph, steps: &[CentroidStep]) {
    let d = distance_matrix(g);
    let t = build_clique_tree(g).unwrap();
    let mut per_level: BTreeMap<u32, usize> = BTreeMap::new();
    for step in steps {
        let dist_s = |v: usize| step.separator.iter().map(|&s| d[v][s]).min().unwrap();
        let mut all: Vec<usize> = step.components.concat();
        let mut theirs = step.components.clone();
        theirs.sort();
        assert_eq!(components(g, &all), theirs, "separator property");
        all.extend(&step.separator);
        for (c, vs) in step.components.iter().enumerate() {
            assert_eq!(vs.iter().map(|&v| dist_s(v)).max().unwrap(), step.depths[c]);
        }
        assert!(step.depths.windows(2).all(|w| w[0] >= w[1]));
        if step.components.len() < 2 {
            continue;
        }
        let mut d_s = 0;
        for (i, a) in step.components.iter().enumerate() {
            for b in &step.components[i + 1..] {
                for &x in a {
                    for &y in b {
                        d_s = d_s.max(d[x][y]);
                    }
                }
            }
        }
        let base = step.depths[0] + step.depths[1];
        assert!(base <= d_s && d_s <= base + 1, "sandwich");
        let cross = step.cross.unwrap();
        assert!(cross <= d_s);
        assert!(d[step.witness.0][step.witness.1] >= step.value);
        for inst in &step.instances {
            if inst.diameter == 3 {
                assert_eq!(d_s, base + 1, "soundness");
            }
            assert_eq!(split_diameter(&inst.h, Kernel::Naive).unwrap(), inst.diameter);
        }
        if let Some(first) = step.instances.first() {
            *per_level.entry(step.depth).or_insert(0) += first.h.ell();
        }
    }
    for (&depth, &ell) in &per_level {
        assert!(ell <= t.total_weight(), "level {depth}: ℓ = {ell} > w(T) = {}", t.total_weight());
    }
}

#[test]
fn fixture_examples() {
    let p5 = fixtures::path(5);
    let t = build_clique_tree(&p5).unwrap();
    assert_eq!(t.cliques[weighted_centroid(&t)], vec![1, 2]);
    let gm = gates_via_incidence(&p5, &t, &[1, 2]).unwrap();
    assert_eq!((gm.dist[4], gm.gate[4], gm.proj[4]), (2, 3, 1));
    assert_eq!(chordal_diameter(&fixtures::sun3(), &SampleParams::with_seed(7)).unwrap().d, 2);
}

#[test]
fn sun3_never_reports_three() {
    let sun = fixtures::sun3();
    for seed in 0..64 {
        let params = SampleParams { seed, repeats: Some(1), ..SampleParams::default() };
        let (d, steps) = chordal_diameter_traced(&sun, &params, Kernel::Packed).unwrap();
        assert_eq!(d.d, 2);
        assert!(steps.iter().flat_map(|s| &s.instances).all(|i| i.diameter < 3));
    }
}

#[test]
fn corpus_steps_and_results() {
    for inst in common::chordal_corpus(80, 256, 900) {
        let g = &inst.g;
        let truth = eccentricities_bruteforce(g).unwrap();
        let (res, steps) = chordal_diameter_traced(g, &SampleParams::with_seed(5), Kernel::Packed).unwrap();
        assert_eq!(res.d, truth.diameter, "{}", inst.name);
        let w = build_clique_tree(g).unwrap().total_weight();
        assert!(res.depth <= (w as f64).log2().ceil() as u32 + 1, "{}: depth {}", inst.name, res.depth);
        check_steps(g, &steps);
        let est = chordal_ecc_plus_one(g).unwrap().ecc;
        for v in g.vertices() {
            assert!(est[v] <= truth.ecc[v] && truth.ecc[v] <= est[v] + 1, "{} vertex {v}", inst.name);
        }
    }
}

#[test]
fn incidence_gates_match_bfs_gates() {
    for inst in common::chordal_corpus(40, 200, 70) {
        let t = build_clique_tree(&inst.g).unwrap();
        for node in [0, t.len() / 2, t.len() - 1] {
            let sep = &t.cliques[node];
            assert_eq!(gates_via_incidence(&inst.g, &t, sep).unwrap(), compute_gates(&inst.g, sep).unwrap());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn clique_trees_are_valid(n in 1usize..90, seed in any::<u64>(), attach in 1usize..6) {
        let g = random_chordal(n, seed, attach, 0.5);
        prop_assume!(is_connected(&g));
        let t = build_clique_tree(&g).unwrap();
        prop_assert!(t.validate(&g).is_ok());
        let c = weighted_centroid(&t);
        prop_assert!(2 * t.weight(c) <= 2 * t.total_weight());
    }

    #[test]
    fn diameter_and_sandwich(n in 1usize..90, seed in any::<u64>(), attach in 1usize..6) {
        let g = random_chordal(n, seed, attach, 0.4);
        let truth = eccentricities_bruteforce(&g).unwrap();
        let d = chordal_diameter(&g, &SampleParams::with_seed(seed)).unwrap();
        prop_assert_eq!(d.d, truth.diameter);
        let est = chordal_ecc_plus_one(&g).unwrap().ecc;
        for v in g.vertices() {
            prop_assert!(est[v] <= truth.ecc[v] && truth.ecc[v] <= est[v] + 1);
        }
    }
}
