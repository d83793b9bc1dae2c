//! Gates of vertices with respect to a target set, by one BFS.
//!
//! A gate of `v` is a vertex `g` with `dist(v, g) = dist(v, S) - 1` that is
//! adjacent to all of `Pr(v, S)`. In Helly graphs every set of weak
//! diameter at most two has a gate for every outside vertex.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::metric::{bfs, UNREACHABLE};

pub const NO_GATE: Vertex = usize::MAX;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GateMap {
    pub target: Vec<Vertex>,
    pub dist: Vec<u32>,
    /// `gate[v]` lies in `N(S)` for `dist >= 1`; `v` itself when `v` is in `S`
    /// or adjacent to it; `NO_GATE` when unreachable.
    pub gate: Vec<Vertex>,
    /// `|N(gate(v)) ∩ S|`, equal to `|Pr(v, S)|` whenever the gate is true.
    pub proj: Vec<u32>,
    /// Pseudo-gates, present when requested.
    pub pseudo: Option<Vec<Vertex>>,
}

impl GateMap {
    pub fn max_dist(&self) -> u32 {
        self.dist.iter().copied().filter(|&d| d != UNREACHABLE).max().unwrap_or(0)
    }

    pub fn at_distance(&self, d: u32) -> impl Iterator<Item = Vertex> + '_ {
        self.dist.iter().enumerate().filter(move |&(_, &x)| x == d).map(|(v, _)| v)
    }
}

/// Gates by BFS from `S`: a vertex adjacent to `S` is its own gate;
/// otherwise it inherits the gate of a parent maximizing the projection
/// count, ties to the lowest id.
pub fn compute_gates(g: &Graph, set: &[Vertex]) -> Result<GateMap> {
    build(g, set, false)
}

/// As [`compute_gates`], also assigning pseudo-gates: a vertex of `N(S)`
/// takes the member of its closed neighborhood seeing most of `S`, and
/// parent ties prefer gates whose pseudo-gate sees more of `S`.
pub fn compute_gates_with_pseudo(g: &Graph, set: &[Vertex]) -> Result<GateMap> {
    build(g, set, true)
}

fn build(g: &Graph, set: &[Vertex], pseudo: bool) -> Result<GateMap> {
    let d = bfs(g, set)?;
    let n = g.n();
    let dist = d.as_slice().to_vec();
    let mut gate = vec![NO_GATE; n];
    let mut proj = vec![0u32; n];
    let in_set: Vec<bool> = (0..n).map(|v| dist[v] == 0).collect();
    let seen_in_set = |v: Vertex| g.neighbors(v).iter().filter(|&&w| in_set[w]).count() as u32;

    // closed-neighborhood coverage of S, only needed for pseudo-gates
    let cover: Vec<u32> = if pseudo { (0..n).map(|y| seen_in_set(y) + in_set[y] as u32).collect() } else { Vec::new() };
    let mut pg = vec![NO_GATE; if pseudo { n } else { 0 }];

    for &v in d.visit_order() {
        match dist[v] {
            0 => {
                gate[v] = v;
                proj[v] = 1;
                if pseudo {
                    pg[v] = v;
                }
            }
            1 => {
                gate[v] = v;
                proj[v] = seen_in_set(v);
                if pseudo {
                    pg[v] = std::iter::once(v)
                        .chain(g.neighbors(v).iter().copied())
                        .max_by_key(|&y| (cover[y], std::cmp::Reverse(y)))
                        .unwrap();
                }
            }
            dv => {
                let parent = g
                    .neighbors(v)
                    .iter()
                    .copied()
                    .filter(|&u| dist[u] == dv - 1)
                    .max_by_key(|&u| {
                        let tie = if pseudo { cover[pg[gate[u]]] } else { 0 };
                        (proj[u], tie, std::cmp::Reverse(u))
                    })
                    .expect("BFS parent exists");
                gate[v] = gate[parent];
                proj[v] = proj[parent];
                if pseudo {
                    pg[v] = pg[gate[v]];
                }
            }
        }
    }
    Ok(GateMap { target: set.to_vec(), dist, gate, proj, pseudo: pseudo.then_some(pg) })
}

/// Returns whether `gate` is a true gate of `v` for `S`, by brute force.
pub fn is_gate(g: &Graph, set: &[Vertex], v: Vertex, gate: Vertex) -> bool {
    let dv = crate::metric::bfs_from(g, v);
    let ds = set.iter().map(|&s| dv.get(s)).min().unwrap_or(UNREACHABLE);
    if ds == 0 || ds == UNREACHABLE {
        return false;
    }
    dv.get(gate) == ds - 1 && set.iter().filter(|&&s| dv.get(s) == ds).all(|&s| g.has_edge(gate, s))
}

/// Checks that every member of `set` is pairwise adjacent.
pub(crate) fn require_clique(g: &Graph, set: &[Vertex]) -> Result<()> {
    match g.is_clique(set) {
        Some((a, b)) => Err(Error::NotAClique(a, b)),
        None => Ok(()),
    }
}
