#![allow(dead_code)]

use ghm_core::oracles::generate::{block_graph, random_chordal, random_tree};
use ghm_core::oracles::{generate, GraphKind};
use ghm_core::Graph;

pub struct Instance {
    pub name: String,
    pub g: Graph,
    /// Certified C4-free as well as Helly.
    pub c4_free: bool,
}

fn inst(name: String, g: Graph, c4_free: bool) -> Instance {
    Instance { name, g, c4_free }
}

/// Certified Helly graphs: trees, king graphs and block graphs by
/// construction, chordal and split graphs through the Helly oracle.
/// Sizes are spread over `[lo, hi]` for the constructive families.
pub fn helly_corpus(count: usize, hi: usize) -> Vec<Instance> {
    let per = count / 5;
    let ladder = |i: usize| 4 + (hi - 4) * i * i / (per * per).max(1);
    let mut out = Vec::new();
    for i in 0..per {
        let n = ladder(i + 1);
        out.push(inst(format!("tree-{n}-{i}"), random_tree(n, 100 + i as u64), true));
    }
    for i in 0..per {
        let n = ladder(i + 1);
        let rows = 1 + i % 7;
        let cols = (n / rows).max(2);
        out.push(inst(format!("king-{rows}x{cols}"), generate(&GraphKind::King { rows, cols }).unwrap(), false));
    }
    for i in 0..per {
        let n = ladder(i + 1);
        out.push(inst(format!("block-{n}-{i}"), block_graph(n, 200 + i as u64), true));
    }
    for i in 0..per {
        let n = 8 + i % 40;
        let g = generate(&GraphKind::RandomChordalHelly { n, seed: 300 + i as u64 }).unwrap();
        out.push(inst(format!("chordal-helly-{n}-{i}"), g, true));
    }
    for i in 0..count - 4 * per {
        let n = 6 + i % 30;
        let g = generate(&GraphKind::RandomSplitHelly { n, seed: 400 + i as u64 }).unwrap();
        out.push(inst(format!("split-helly-{n}-{i}"), g, true));
    }
    out
}

/// Random chordal graphs, not necessarily Helly.
pub fn chordal_corpus(count: usize, hi: usize, seed: u64) -> Vec<Instance> {
    (0..count)
        .map(|i| {
            let n = 4 + (hi - 4) * (i + 1) * (i + 1) / (count * count);
            let attach = 1 + i % 5;
            let locality = [0.2, 0.5, 0.8][i % 3];
            let g = random_chordal(n, seed + i as u64, attach, locality);
            inst(format!("chordal-{n}-{i}"), g, true)
        })
        .collect()
}
