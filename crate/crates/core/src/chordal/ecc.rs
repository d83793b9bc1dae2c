use serde::Serialize;

use crate::chordal::clique_tree::build_clique_tree;
use crate::chordal::incidence::Work;
use crate::chordal::reduction::partition;
use crate::error::Result;
use crate::graph::Graph;
use crate::metric::require_connected;

/// Per-step record of the approximation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EccLevel {
    pub depth: u32,
    pub node: usize,
    pub depths: Vec<u32>,
    /// `e_i = max_{j != i} d_j` per component, 0 for a lone component.
    pub outer: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EccApprox {
    /// `ê(v) <= e(v) <= ê(v) + 1`.
    pub ecc: Vec<u32>,
    pub levels: Vec<EccLevel>,
}

/// Additive +1 approximation of every eccentricity of a chordal graph,
/// deterministic, `O(m log n)`.
///
/// At a separator `S`, a vertex `v` of component `V_i` gets the lower
/// estimate `dist(v, S) + max(e_i, 1)` for vertices outside `V_i` and
/// recurses into `G_i`; a vertex of `S` gets `max_i d_i`.
pub fn chordal_ecc_plus_one(g: &Graph) -> Result<EccApprox> {
    require_connected(g)?;
    let t = build_clique_tree(g)?;
    let n = g.n();
    let mut ecc = vec![0u32; n];
    let mut levels = Vec::new();
    let mut work = Work::new(n, &t);
    let mut depth = 0;
    let mut level = vec![(0..t.len()).collect::<Vec<usize>>()];
    while !level.is_empty() {
        depth += 1;
        let mut next = Vec::new();
        for nodes in level {
            match *nodes.as_slice() {
                [i] => {
                    let c = &t.cliques[i];
                    for &v in c {
                        ecc[v] = ecc[v].max((c.len() > 1) as u32);
                    }
                }
                [i, j] => {
                    let (a, b) = (&t.cliques[i], &t.cliques[j]);
                    for &v in a {
                        ecc[v] = ecc[v].max(if b.binary_search(&v).is_ok() { 1 } else { 2 });
                    }
                    for &v in b.iter().filter(|v| a.binary_search(v).is_err()) {
                        ecc[v] = ecc[v].max(2);
                    }
                }
                _ => {
                    work.load(&nodes);
                    let (step, children) = partition(&mut work, depth, n);
                    let top = step.depths[0];
                    let outer: Vec<u32> = (0..step.depths.len())
                        .map(|i| if i == 0 { step.depths.get(1).copied().unwrap_or(0) } else { top })
                        .collect();
                    for &s in &step.separator {
                        ecc[s] = ecc[s].max(top.max(1));
                    }
                    for (c, vs) in step.components.iter().enumerate() {
                        for &v in vs {
                            ecc[v] = ecc[v].max(work.dist[v] + outer[c].max(1));
                        }
                    }
                    work.unload();
                    levels.push(EccLevel { depth, node: step.node, depths: step.depths, outer });
                    next.extend(children);
                }
            }
        }
        level = next;
    }
    Ok(EccApprox { ecc, levels })
}
