use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::metric::require_connected;
use crate::oracles::{is_chordal, Witness};

/// A clique tree: nodes are the maximal cliques (sorted vertex lists, in
/// lexicographic order) and for every vertex the nodes containing it induce
/// a subtree. Node weight is the clique size.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CliqueTree {
    pub cliques: Vec<Vec<Vertex>>,
    pub edges: Vec<(usize, usize)>,
    #[serde(skip)]
    adj: Vec<Vec<usize>>,
}

impl CliqueTree {
    pub fn len(&self) -> usize {
        self.cliques.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cliques.is_empty()
    }

    pub fn neighbors(&self, node: usize) -> &[usize] {
        &self.adj[node]
    }

    pub fn weight(&self, node: usize) -> usize {
        self.cliques[node].len()
    }

    /// `w(T)`.
    pub fn total_weight(&self) -> usize {
        self.cliques.iter().map(Vec::len).sum()
    }

    /// Checks maximality, the tree shape, edge coverage and the subtree
    /// property.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidGraph(msg));
        let k = self.len();
        if k == 0 || self.edges.len() + 1 != k {
            return bad(format!("{k} nodes but {} tree edges", self.edges.len()));
        }
        let mut seen = vec![false; k];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(i) = stack.pop() {
            for &j in &self.adj[i] {
                if !seen[j] {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        if seen.contains(&false) {
            return bad("clique tree is not connected".into());
        }
        let n = g.n();
        let mut count = vec![0usize; n];
        let mut shared = vec![0usize; n];
        let mut hits = vec![0usize; n];
        for (i, c) in self.cliques.iter().enumerate() {
            if let Some((a, b)) = g.is_clique(c) {
                return Err(Error::NotAClique(a, b));
            }
            for &v in c {
                count[v] += 1;
                for &w in g.neighbors(v) {
                    hits[w] += 1;
                }
            }
            let extendable = g.vertices().find(|&w| hits[w] == c.len());
            for &v in c {
                for &w in g.neighbors(v) {
                    hits[w] = 0;
                }
            }
            if let Some(w) = extendable {
                return bad(format!("clique {i} extends by vertex {w}"));
            }
        }
        for &(i, j) in &self.edges {
            for v in intersect(&self.cliques[i], &self.cliques[j]) {
                shared[v] += 1;
            }
        }
        if let Some(v) = g.vertices().find(|&v| count[v] == 0 || shared[v] + 1 != count[v]) {
            return bad(format!("cliques containing {v} do not form a subtree"));
        }
        let covered: usize = self.cliques.iter().map(|c| c.len() * (c.len() - 1) / 2).sum();
        if covered < g.m() {
            return bad("some edge lies in no clique".into());
        }
        Ok(())
    }
}

fn intersect<'a>(a: &'a [Vertex], b: &'a [Vertex]) -> impl Iterator<Item = Vertex> + 'a {
    a.iter().copied().filter(move |v| b.binary_search(v).is_ok())
}

/// Clique tree from the perfect elimination order of LexBFS. `K_v = {v} ∪
/// later(v)` is maximal unless some `u` with `parent(u) = v` has exactly one
/// more later neighbor; chains of absorbed candidates collapse onto one node
/// and elimination-tree edges between chains become tree edges.
pub fn build_clique_tree(g: &Graph) -> Result<CliqueTree> {
    require_connected(g)?;
    let cert = is_chordal(g);
    let Witness::Peo { order } = cert.witness else {
        return Err(Error::NotChordal);
    };
    let n = g.n();
    let mut pos = vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let later: Vec<Vec<Vertex>> =
        (0..n).map(|v| g.neighbors(v).iter().copied().filter(|&w| pos[w] > pos[v]).collect()).collect();
    let parent: Vec<Option<Vertex>> = (0..n).map(|v| later[v].iter().copied().min_by_key(|&w| pos[w])).collect();
    let mut absorber = vec![None; n];
    for &u in &order {
        if let Some(p) = parent[u] {
            if later[u].len() == later[p].len() + 1 && absorber[p].is_none() {
                absorber[p] = Some(u);
            }
        }
    }
    // node of every vertex: the earliest candidate of its absorption chain
    let mut node_of = vec![usize::MAX; n];
    let mut cliques = Vec::new();
    for &v in &order {
        node_of[v] = match absorber[v] {
            Some(u) => node_of[u],
            None => {
                let mut c = later[v].clone();
                c.push(v);
                c.sort_unstable();
                cliques.push(c);
                cliques.len() - 1
            }
        };
    }
    let mut edges = Vec::new();
    for v in 0..n {
        if let Some(p) = parent[v] {
            if node_of[v] != node_of[p] {
                edges.push((node_of[v], node_of[p]));
            }
        }
    }
    // relabel nodes in lexicographic order of their cliques
    let mut idx: Vec<usize> = (0..cliques.len()).collect();
    idx.sort_by(|&a, &b| cliques[a].cmp(&cliques[b]));
    let mut rank = vec![0; cliques.len()];
    for (r, &i) in idx.iter().enumerate() {
        rank[i] = r;
    }
    let cliques: Vec<Vec<Vertex>> = idx.iter().map(|&i| std::mem::take(&mut cliques[i])).collect();
    let mut edges: Vec<(usize, usize)> =
        edges.into_iter().map(|(a, b)| (rank[a].min(rank[b]), rank[a].max(rank[b]))).collect();
    edges.sort_unstable();
    let mut adj = vec![Vec::new(); cliques.len()];
    for &(a, b) in &edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    let t = CliqueTree { cliques, edges, adj };
    if cfg!(debug_assertions) {
        t.validate(g)?;
    }
    Ok(t)
}

/// A node whose removal leaves components of weight at most `w(T) / 2`,
/// the lowest index among such nodes.
pub fn weighted_centroid(t: &CliqueTree) -> usize {
    let all: Vec<usize> = (0..t.len()).collect();
    let mut inside = vec![true; t.len()];
    centroid_in(t, &all, &mut inside)
}

/// Centroid of the subtree on `nodes`; `inside` marks exactly `nodes` and is
/// left unchanged.
pub(crate) fn centroid_in(t: &CliqueTree, nodes: &[usize], inside: &mut [bool]) -> usize {
    let total: usize = nodes.iter().map(|&i| t.weight(i)).sum();
    // iterative DFS: order and parents, then subtree weights bottom-up
    let root = nodes[0];
    let mut order = Vec::with_capacity(nodes.len());
    let mut parent = std::collections::HashMap::with_capacity(nodes.len());
    parent.insert(root, usize::MAX);
    let mut stack = vec![root];
    while let Some(i) = stack.pop() {
        order.push(i);
        for &j in t.neighbors(i) {
            if inside[j] && !parent.contains_key(&j) {
                parent.insert(j, i);
                stack.push(j);
            }
        }
    }
    let mut sub: std::collections::HashMap<usize, usize> = order.iter().map(|&i| (i, t.weight(i))).collect();
    for &i in order.iter().rev() {
        let p = parent[&i];
        if p != usize::MAX {
            *sub.get_mut(&p).unwrap() += sub[&i];
        }
    }
    let heaviest = |i: usize| {
        let up = total - sub[&i];
        t.neighbors(i).iter().filter(|&&j| inside[j] && parent[&j] == i).map(|&j| sub[&j]).max().unwrap_or(0).max(up)
    };
    let mut best: Option<usize> = None;
    for &i in nodes {
        if 2 * heaviest(i) <= total && best.is_none_or(|b| i < b) {
            best = Some(i);
        }
    }
    best.expect("every weighted tree has a centroid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn examples() {
        let p5 = build_clique_tree(&fixtures::path(5)).unwrap();
        assert_eq!(p5.cliques, vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![3, 4]]);
        assert_eq!(p5.total_weight(), 8);
        assert_eq!(weighted_centroid(&p5), 1);
        let k4 = build_clique_tree(&fixtures::complete(4)).unwrap();
        assert_eq!(k4.cliques, vec![vec![0, 1, 2, 3]]);
        assert_eq!(weighted_centroid(&k4), 0);
        let sun = build_clique_tree(&fixtures::sun3()).unwrap();
        assert_eq!(sun.len(), 4);
        let hub = (0..4).find(|&i| sun.neighbors(i).len() == 3).unwrap();
        assert_eq!(sun.cliques[hub], vec![0, 1, 2]);
        assert_eq!(build_clique_tree(&fixtures::cycle(4)), Err(Error::NotChordal));
    }

    #[test]
    fn star_centroid() {
        // center clique {0,1,2}, four leaves {i, 3 + k} of weight 2
        let g = Graph::from_edges(7, &[(0, 1), (0, 2), (1, 2), (0, 3), (1, 4), (2, 5), (0, 6)]).unwrap();
        let t = build_clique_tree(&g).unwrap();
        assert_eq!(t.cliques[weighted_centroid(&t)], vec![0, 1, 2]);
    }

    #[test]
    fn random_chordal_trees_validate() {
        for seed in 0..200 {
            let g = crate::oracles::generate::random_chordal(5 + (seed as usize % 60), seed, 4, 0.5);
            let t = build_clique_tree(&g).unwrap();
            t.validate(&g).unwrap();
            let c = weighted_centroid(&t);
            let brute = (0..t.len()).find(|&i| {
                let mut inside = vec![true; t.len()];
                inside[i] = false;
                let mut worst = 0;
                for &j in t.neighbors(i) {
                    let mut stack = vec![j];
                    inside[j] = false;
                    let mut w = 0;
                    while let Some(a) = stack.pop() {
                        w += t.weight(a);
                        for &b in t.neighbors(a) {
                            if inside[b] {
                                inside[b] = false;
                                stack.push(b);
                            }
                        }
                    }
                    worst = worst.max(w);
                }
                2 * worst <= t.total_weight()
            });
            assert_eq!(Some(c), brute);
        }
    }
}
