//! Seeded generators of certified instances.
//!
//! Trees, king graphs and block graphs are Helly by construction (trees
//! and block graphs are chordal with clique intersections of size at most
//! one; king graphs are strong products of paths). The random chordal and
//! split families are rejection-sampled against the Helly oracle.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::fixtures;
use crate::graph::{Graph, Vertex};
use crate::oracles::helly::is_helly_ballfamily;

pub const REJECTION_BUDGET: usize = 10_000;

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum GraphKind {
    Path {
        n: usize,
    },
    Star {
        n: usize,
    },
    RandomTree {
        n: usize,
        seed: u64,
    },
    King {
        rows: usize,
        cols: usize,
    },
    /// Every vertex joins an existing block or starts a new block at a
    /// cut vertex.
    BlockGraph {
        n: usize,
        seed: u64,
    },
    RandomChordal {
        n: usize,
        seed: u64,
    },
    /// Random chordal graph accepted by the Helly oracle.
    RandomChordalHelly {
        n: usize,
        seed: u64,
    },
    RandomSplitHelly {
        n: usize,
        seed: u64,
    },
    Fixture {
        name: String,
    },
}

pub fn generate(kind: &GraphKind) -> Result<Graph> {
    let need = |n: usize| if n == 0 { Err(Error::BadParams("size must be at least 1".into())) } else { Ok(()) };
    match *kind {
        GraphKind::Path { n } => need(n).map(|_| fixtures::path(n)),
        GraphKind::Star { n } => need(n).map(|_| fixtures::star(n - 1)),
        GraphKind::RandomTree { n, seed } => need(n).map(|_| random_tree(n, seed)),
        GraphKind::King { rows, cols } => need(rows * cols).map(|_| fixtures::king(rows, cols)),
        GraphKind::BlockGraph { n, seed } => need(n).map(|_| block_graph(n, seed)),
        GraphKind::RandomChordal { n, seed } => need(n).map(|_| random_chordal(n, seed, 4, 0.5)),
        GraphKind::RandomChordalHelly { n, seed } => {
            need(n)?;
            rejection(seed, |s| random_chordal(n, s, 3, 0.7))
        }
        GraphKind::RandomSplitHelly { n, seed } => {
            need(n)?;
            rejection(seed, |s| random_split(n, s))
        }
        GraphKind::Fixture { ref name } => {
            fixtures::by_name(name).ok_or_else(|| Error::BadParams(format!("unknown fixture {name}")))
        }
    }
}

fn rejection(seed: u64, mut sample: impl FnMut(u64) -> Graph) -> Result<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..REJECTION_BUDGET {
        let g = sample(rng.gen());
        if is_helly_ballfamily(&g, usize::MAX)?.member {
            return Ok(g);
        }
    }
    Err(Error::GenerationFailed { attempts: REJECTION_BUDGET })
}

/// Uniform random recursive tree: vertex `i` hangs below a uniform earlier vertex.
pub fn random_tree(n: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let edges: Vec<_> = (1..n).map(|i| (rng.gen_range(0..i), i)).collect();
    Graph::from_edges(n, &edges).unwrap()
}

pub fn block_graph(n: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut blocks: Vec<Vec<Vertex>> = Vec::new();
    let mut edges = Vec::new();
    for v in 1..n {
        if !blocks.is_empty() && rng.gen_bool(0.4) {
            let b = rng.gen_range(0..blocks.len());
            edges.extend(blocks[b].iter().map(|&u| (u, v)));
            blocks[b].push(v);
        } else {
            let cut = rng.gen_range(v.saturating_sub(8)..v);
            edges.push((cut, v));
            blocks.push(vec![cut, v]);
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// Random chordal graph grown along a perfect elimination order: each new
/// vertex attaches to a nonempty subset of the clique some earlier vertex
/// was attached with, so its earlier neighborhood is a clique.
///
/// `locality` is the probability of attaching near the most recent vertices,
/// which stretches the diameter.
pub fn random_chordal(n: usize, seed: u64, max_attach: usize, locality: f64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut home: Vec<Vec<Vertex>> = vec![vec![0]];
    let mut edges = Vec::new();
    for v in 1..n {
        let x = if rng.gen_bool(locality) { rng.gen_range(v.saturating_sub(3)..v) } else { rng.gen_range(0..v) };
        let mut base = home[x].clone();
        base.shuffle(&mut rng);
        let k = rng.gen_range(1..=base.len().min(max_attach));
        // keep x so the attachment clique is anchored at x
        let pos = base.iter().position(|&w| w == x).unwrap();
        base.swap(0, pos);
        base.truncate(k);
        edges.extend(base.iter().map(|&u| (u, v)));
        base.push(v);
        home.push(base);
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// Split graph on a clique of roughly `n/2` vertices; stable vertices see
/// random intervals of a shuffled clique order, occasionally a random set.
pub fn random_split(n: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let nc = rng.gen_range(1..=n.div_ceil(2).max(1));
    let mut order: Vec<Vertex> = (0..nc).collect();
    order.shuffle(&mut rng);
    let mut edges = Vec::new();
    for a in 0..nc {
        for b in a + 1..nc {
            edges.push((a, b));
        }
    }
    for s in nc..n {
        let nbrs: Vec<Vertex> = if rng.gen_bool(0.15) {
            let k = rng.gen_range(1..=nc);
            order.choose_multiple(&mut rng, k).copied().collect()
        } else {
            let lo = rng.gen_range(0..nc);
            let hi = rng.gen_range(lo..nc.min(lo + 3));
            order[lo..=hi].to_vec()
        };
        edges.extend(nbrs.iter().map(|&c| (c, s)));
    }
    Graph::from_edges(n, &edges).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracles::recognize::{is_chordal, is_split};

    #[test]
    fn king_and_path_kinds() {
        let k = generate(&GraphKind::King { rows: 3, cols: 3 }).unwrap();
        assert_eq!(k, fixtures::king(3, 3));
        assert!(is_helly_ballfamily(&k, 512).unwrap().member);
        assert_eq!(generate(&GraphKind::Path { n: 5 }).unwrap(), fixtures::path(5));
    }

    #[test]
    fn random_chordal_passes_recognizer() {
        let g = generate(&GraphKind::RandomChordal { n: 20, seed: 1 }).unwrap();
        let c = is_chordal(&g);
        assert!(c.member && c.replay(&g));
    }

    #[test]
    fn rejection_sampled_kinds_are_certified() {
        for seed in 0..5 {
            let g = generate(&GraphKind::RandomSplitHelly { n: 12, seed }).unwrap();
            assert!(is_split(&g).member);
            assert!(is_helly_ballfamily(&g, 512).unwrap().member);
            let g = generate(&GraphKind::RandomChordalHelly { n: 20, seed }).unwrap();
            assert!(is_chordal(&g).member);
            assert!(is_helly_ballfamily(&g, 512).unwrap().member);
        }
    }

    #[test]
    fn deterministic_per_seed() {
        let a = generate(&GraphKind::RandomChordal { n: 50, seed: 9 }).unwrap();
        let b = generate(&GraphKind::RandomChordal { n: 50, seed: 9 }).unwrap();
        assert_eq!(a, b);
        assert!(generate(&GraphKind::Path { n: 0 }).is_err());
    }
}
