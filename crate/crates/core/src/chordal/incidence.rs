use crate::chordal::clique_tree::CliqueTree;
use crate::error::Result;
use crate::gates::{require_clique, GateMap, NO_GATE};
use crate::graph::{Graph, Vertex};
use crate::metric::UNREACHABLE;

pub(crate) const NONE: usize = usize::MAX;

/// Scratch space for one subtree of the clique tree at a time: the local
/// vertex-clique incidence lists and the gate BFS through them. Loading a
/// subtree and running the BFS cost `O(w(T_i))`.
pub(crate) struct Work<'a> {
    pub t: &'a CliqueTree,
    pub inside: Vec<bool>,
    pub nodes: Vec<usize>,
    pub verts: Vec<Vertex>,
    slot: Vec<usize>,
    start: Vec<usize>,
    list: Vec<usize>,
    pub dist: Vec<u32>,
    pub gate: Vec<Vertex>,
    pub proj: Vec<u32>,
    /// For a vertex at distance 1, a clique holding it and its whole
    /// projection.
    pub home: Vec<usize>,
    /// Component index of a vertex or node outside the separator.
    pub vcomp: Vec<usize>,
    pub ncomp: Vec<usize>,
    pub node_done: Vec<bool>,
    node_seen: Vec<bool>,
    node_p: Vec<u32>,
    node_via: Vec<Vertex>,
}

impl<'a> Work<'a> {
    pub fn new(n: usize, t: &'a CliqueTree) -> Self {
        let k = t.len();
        Work {
            t,
            inside: vec![false; k],
            nodes: Vec::new(),
            verts: Vec::new(),
            slot: vec![NONE; n],
            start: Vec::new(),
            list: Vec::new(),
            dist: vec![UNREACHABLE; n],
            gate: vec![NO_GATE; n],
            proj: vec![0; n],
            home: vec![NONE; n],
            vcomp: vec![NONE; n],
            ncomp: vec![NONE; k],
            node_done: vec![false; k],
            node_seen: vec![false; k],
            node_p: vec![0; k],
            node_via: vec![NO_GATE; k],
        }
    }

    pub fn load(&mut self, nodes: &[usize]) {
        self.nodes = nodes.to_vec();
        let mut count = Vec::new();
        for &i in nodes {
            self.inside[i] = true;
            for &v in &self.t.cliques[i] {
                if self.slot[v] == NONE {
                    self.slot[v] = self.verts.len();
                    self.verts.push(v);
                    count.push(0);
                }
                count[self.slot[v]] += 1;
            }
        }
        self.start.clear();
        self.start.push(0);
        for c in count {
            let last = *self.start.last().unwrap();
            self.start.push(last + c);
        }
        let mut fill = self.start.clone();
        self.list.clear();
        self.list.resize(*self.start.last().unwrap(), 0);
        for &i in nodes {
            for &v in &self.t.cliques[i] {
                let s = self.slot[v];
                self.list[fill[s]] = i;
                fill[s] += 1;
            }
        }
    }

    pub fn unload(&mut self) {
        for &v in &self.verts {
            self.slot[v] = NONE;
            self.dist[v] = UNREACHABLE;
            self.gate[v] = NO_GATE;
            self.proj[v] = 0;
            self.home[v] = NONE;
            self.vcomp[v] = NONE;
        }
        for &i in &self.nodes {
            self.inside[i] = false;
            self.node_seen[i] = false;
            self.ncomp[i] = NONE;
            self.node_done[i] = false;
        }
        self.verts.clear();
        self.nodes.clear();
    }

    pub fn nodes_of(&self, v: Vertex) -> &[usize] {
        let s = self.slot[v];
        &self.list[self.start[s]..self.start[s + 1]]
    }

    /// BFS in the incidence graph from a virtual node adjacent to `set`.
    /// Clique nodes at odd depth carry `p`, the best projection count among
    /// their parents; a vertex inherits the gate of its best parent, ties to
    /// the lowest parent id. Returns the vertices in visit order.
    pub fn run_gates(&mut self, set: &[Vertex]) -> Vec<Vertex> {
        let mut order: Vec<Vertex> = Vec::with_capacity(self.verts.len());
        for &s in set {
            self.dist[s] = 0;
            self.gate[s] = s;
            self.proj[s] = 1;
            order.push(s);
        }
        let mut layer: Vec<usize> = Vec::new();
        for &s in set {
            for idx in self.start[self.slot[s]]..self.start[self.slot[s] + 1] {
                let c = self.list[idx];
                if !self.node_seen[c] {
                    self.node_seen[c] = true;
                    self.node_p[c] = 0;
                    layer.push(c);
                }
                self.node_p[c] += 1;
            }
        }
        for &c in &layer {
            for &v in &self.t.cliques[c] {
                if self.dist[v] == UNREACHABLE {
                    self.dist[v] = 1;
                    self.gate[v] = v;
                    self.proj[v] = self.node_p[c];
                    self.home[v] = c;
                    order.push(v);
                } else if self.dist[v] == 1 && self.node_p[c] > self.proj[v] {
                    self.proj[v] = self.node_p[c];
                    self.home[v] = c;
                }
            }
        }
        let mut lo = set.len();
        let mut d = 1;
        while lo < order.len() {
            let hi = order.len();
            layer.clear();
            for &v in &order[lo..hi] {
                for idx in self.start[self.slot[v]]..self.start[self.slot[v] + 1] {
                    let c = self.list[idx];
                    if !self.node_seen[c] {
                        self.node_seen[c] = true;
                        self.node_p[c] = self.proj[v];
                        self.node_via[c] = v;
                        layer.push(c);
                    } else if self.node_via[c] != NO_GATE
                        && self.dist[self.node_via[c]] == d
                        && (self.proj[v], std::cmp::Reverse(v)) > (self.node_p[c], std::cmp::Reverse(self.node_via[c]))
                    {
                        self.node_p[c] = self.proj[v];
                        self.node_via[c] = v;
                    }
                }
            }
            for &c in &layer {
                let (p, via) = (self.node_p[c], self.node_via[c]);
                for &w in &self.t.cliques[c] {
                    if self.dist[w] == UNREACHABLE {
                        self.dist[w] = d + 1;
                        self.gate[w] = via;
                        self.proj[w] = p;
                        order.push(w);
                    } else if self.dist[w] == d + 1
                        && (p, std::cmp::Reverse(via)) > (self.proj[w], std::cmp::Reverse(self.gate[w]))
                    {
                        self.gate[w] = via;
                        self.proj[w] = p;
                    }
                }
            }
            // gate[w] held the chosen parent; replace it by that parent's gate
            for &w in &order[hi..] {
                self.gate[w] = self.gate[self.gate[w]];
            }
            for &c in &layer {
                self.node_via[c] = NO_GATE;
            }
            lo = hi;
            d += 1;
        }
        order
    }
}

/// Distances to the clique `set` and gates for every vertex, computed by BFS
/// in the vertex-clique incidence graph of `t`, where every vertex lies at
/// depth `2 dist(v, S) + 1` from a virtual node attached to `S`.
pub fn gates_via_incidence(g: &Graph, t: &CliqueTree, set: &[Vertex]) -> Result<GateMap> {
    for &v in set {
        g.check_vertex(v)?;
    }
    require_clique(g, set)?;
    let mut set = set.to_vec();
    set.sort_unstable();
    set.dedup();
    let mut work = Work::new(g.n(), t);
    let all: Vec<usize> = (0..t.len()).collect();
    work.load(&all);
    work.run_gates(&set);
    Ok(GateMap { target: set, dist: work.dist, gate: work.gate, proj: work.proj, pseudo: None })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chordal::build_clique_tree;
    use crate::error::Error;
    use crate::fixtures;
    use crate::gates::{compute_gates, is_gate};
    use crate::oracles::generate::random_chordal;

    #[test]
    fn examples() {
        let p5 = fixtures::path(5);
        let t = build_clique_tree(&p5).unwrap();
        let gm = gates_via_incidence(&p5, &t, &[1, 2]).unwrap();
        assert_eq!((gm.dist[4], gm.gate[4], gm.proj[4]), (2, 3, 1));
        let sun = fixtures::sun3();
        let t = build_clique_tree(&sun).unwrap();
        let gm = gates_via_incidence(&sun, &t, &[0, 1, 2]).unwrap();
        assert_eq!((gm.dist[3], gm.gate[3], gm.proj[3]), (1, 3, 2));
        assert_eq!(gates_via_incidence(&p5, &build_clique_tree(&p5).unwrap(), &[0, 2]), Err(Error::NotAClique(0, 2)));
    }

    #[test]
    fn agrees_with_bfs_gates() {
        for seed in 0..150 {
            let g = random_chordal(10 + seed as usize % 50, seed, 4, 0.6);
            let t = build_clique_tree(&g).unwrap();
            for (i, c) in t.cliques.iter().enumerate().take(4) {
                let sep: Vec<Vertex> = if i % 2 == 0 { c.clone() } else { c[..c.len().div_ceil(2)].to_vec() };
                let ours = gates_via_incidence(&g, &t, &sep).unwrap();
                let theirs = compute_gates(&g, &sep).unwrap();
                assert_eq!(ours, theirs, "seed {seed} set {sep:?}");
                for v in g.vertices().filter(|&v| ours.dist[v] >= 1) {
                    assert!(is_gate(&g, &sep, v, ours.gate[v]) || ours.dist[v] == 1);
                }
            }
        }
    }
}
