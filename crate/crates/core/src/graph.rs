//! Immutable undirected simple graphs in compressed sparse row form.

use std::fmt::Write as _;

use crate::error::{Error, Result};

pub type Vertex = usize;

/// Undirected simple graph on vertices `0..n`.
///
/// Neighbor lists are sorted ascending, so adjacency tests are binary
/// searches and common-neighborhood scans are linear merges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    offsets: Vec<usize>,
    targets: Vec<Vertex>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges are merged;
    /// self-loops and out-of-range endpoints are rejected.
    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Graph> {
        let mut degree = vec![0usize; n];
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop at {u}")));
            }
            degree[u] += 1;
            degree[v] += 1;
        }
        let mut offsets = vec![0usize; n + 1];
        for v in 0..n {
            offsets[v + 1] = offsets[v] + degree[v];
        }
        let mut fill = offsets.clone();
        let mut targets = vec![0; offsets[n]];
        for &(u, v) in edges {
            targets[fill[u]] = v;
            fill[u] += 1;
            targets[fill[v]] = u;
            fill[v] += 1;
        }
        // sort and dedup each list, then compact
        let mut compact = Vec::with_capacity(targets.len());
        let mut new_offsets = vec![0usize; n + 1];
        for v in 0..n {
            let list = &mut targets[offsets[v]..offsets[v + 1]];
            list.sort_unstable();
            let start = compact.len();
            for &w in list.iter() {
                if compact.len() == start || compact[compact.len() - 1] != w {
                    compact.push(w);
                }
            }
            new_offsets[v + 1] = compact.len();
        }
        Ok(Graph { offsets: new_offsets, targets: compact })
    }

    /// Builds a graph from per-vertex neighbor lists (symmetrized).
    pub fn from_adjacency(adj: &[Vec<Vertex>]) -> Result<Graph> {
        let mut edges = Vec::new();
        for (u, l) in adj.iter().enumerate() {
            edges.extend(l.iter().map(|&v| (u.min(v), u.max(v))));
        }
        edges.sort_unstable();
        edges.dedup();
        Graph::from_edges(adj.len(), &edges)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.offsets.len() - 1
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.targets.len() / 2
    }

    #[inline]
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }

    #[inline]
    pub fn degree(&self, v: Vertex) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    #[inline]
    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.neighbors(u).binary_search(&v).is_ok()
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n()
    }

    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.vertices().flat_map(move |u| self.neighbors(u).iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n() })
        }
    }

    /// Number of common neighbors of `u` and `v` (open neighborhoods).
    pub fn common_neighbor_count(&self, u: Vertex, v: Vertex) -> usize {
        let (a, b) = (self.neighbors(u), self.neighbors(v));
        let (mut i, mut j, mut c) = (0, 0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    c += 1;
                    i += 1;
                    j += 1;
                }
            }
        }
        c
    }

    pub fn is_clique(&self, vs: &[Vertex]) -> Option<(Vertex, Vertex)> {
        for (i, &a) in vs.iter().enumerate() {
            for &b in &vs[i + 1..] {
                if !self.has_edge(a, b) {
                    return Some((a, b));
                }
            }
        }
        None
    }

    /// Induced subgraph on `vs`; returns the subgraph and the map from new
    /// ids to old ids (the order of `vs`).
    pub fn induced(&self, vs: &[Vertex]) -> (Graph, Vec<Vertex>) {
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in vs.iter().enumerate() {
            index[v] = i;
        }
        let mut edges = Vec::new();
        for (i, &v) in vs.iter().enumerate() {
            for &w in self.neighbors(v) {
                let j = index[w];
                if j != usize::MAX && i < j {
                    edges.push((i, j));
                }
            }
        }
        let g = Graph::from_edges(vs.len(), &edges).expect("induced edges are valid");
        (g, vs.to_vec())
    }

    /// Parses the edge-list format: a header line `n m`, then `m` lines
    /// `u v`. Blank lines and `#` comments are ignored.
    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut header: Option<(usize, usize)> = None;
        let mut edges = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let nums = parse_numbers(line, line_no)?;
            if nums.len() != 2 {
                return Err(Error::Parse {
                    line: line_no,
                    msg: format!("expected two integers, found {}", nums.len()),
                });
            }
            match header {
                None => header = Some((nums[0], nums[1])),
                Some((n, _)) => {
                    let (u, v) = (nums[0], nums[1]);
                    if u >= n || v >= n {
                        return Err(Error::Parse { line: line_no, msg: format!("endpoint out of range for n = {n}") });
                    }
                    if u == v {
                        return Err(Error::Parse { line: line_no, msg: "self-loop".into() });
                    }
                    edges.push((u, v));
                }
            }
        }
        let (n, m) = header.ok_or(Error::Parse { line: 0, msg: "missing header".into() })?;
        if edges.len() != m {
            return Err(Error::Parse {
                line: text.lines().count(),
                msg: format!("header declares {m} edges, found {}", edges.len()),
            });
        }
        Graph::from_edges(n, &edges)
    }

    /// Parses DIMACS: `p edge n m`, `e u v` with 1-based ids, `c` comments.
    pub fn parse_dimacs(text: &str) -> Result<Graph> {
        let mut n = None;
        let mut edges = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let mut parts = raw.split_whitespace();
            match parts.next() {
                None | Some("c") => continue,
                Some("p") => {
                    let rest: Vec<&str> = parts.collect();
                    if rest.len() != 3 {
                        return Err(Error::Parse { line: line_no, msg: "malformed problem line".into() });
                    }
                    let nums = parse_numbers(&rest[1..].join(" "), line_no)?;
                    n = Some(nums[0]);
                }
                Some("e") => {
                    let nv = n.ok_or(Error::Parse { line: line_no, msg: "edge before problem line".into() })?;
                    let nums = parse_numbers(&parts.collect::<Vec<_>>().join(" "), line_no)?;
                    if nums.len() != 2 || nums[0] == 0 || nums[1] == 0 || nums[0] > nv || nums[1] > nv {
                        return Err(Error::Parse { line: line_no, msg: "bad edge line".into() });
                    }
                    if nums[0] == nums[1] {
                        return Err(Error::Parse { line: line_no, msg: "self-loop".into() });
                    }
                    edges.push((nums[0] - 1, nums[1] - 1));
                }
                Some(tok) => {
                    return Err(Error::Parse { line: line_no, msg: format!("unknown line type {tok:?}") });
                }
            }
        }
        let n = n.ok_or(Error::Parse { line: 0, msg: "missing problem line".into() })?;
        Graph::from_edges(n, &edges)
    }

    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} {}", self.n(), self.m());
        for (u, v) in self.edges() {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }
}

fn parse_numbers(line: &str, line_no: usize) -> Result<Vec<usize>> {
    line.split_whitespace()
        .map(|t| t.parse::<usize>().map_err(|_| Error::Parse { line: line_no, msg: format!("invalid integer {t:?}") }))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csr_is_symmetric_sorted_and_deduplicated() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 0), (2, 1), (3, 0), (1, 2)]).unwrap();
        assert_eq!(g.m(), 3);
        assert_eq!(g.neighbors(1), &[0, 2]);
        assert_eq!(g.neighbors(0), &[1, 3]);
        for (u, v) in g.edges() {
            assert!(g.has_edge(v, u));
        }
    }

    #[test]
    fn rejects_loops_and_range_errors() {
        assert!(matches!(Graph::from_edges(3, &[(1, 1)]), Err(Error::InvalidGraph(_))));
        assert_eq!(Graph::from_edges(3, &[(0, 3)]), Err(Error::VertexOutOfRange { vertex: 3, n: 3 }));
    }

    #[test]
    fn edge_list_round_trip_and_comments() {
        let text = "# path\n5 4\n0 1\n1 2 # middle\n2 3\n\n3 4\n";
        let g = Graph::parse_edge_list(text).unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(Graph::parse_edge_list(&g.to_edge_list()).unwrap(), g);
    }

    #[test]
    fn edge_list_errors_carry_line_numbers() {
        let err = Graph::parse_edge_list("3 2\n0 1\n1 x\n").unwrap_err();
        assert_eq!(err, Error::Parse { line: 3, msg: "invalid integer \"x\"".into() });
        let err = Graph::parse_edge_list("3 2\n0 1\n").unwrap_err();
        assert!(matches!(err, Error::Parse { .. }));
        let err = Graph::parse_edge_list("3 1\n0 5\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
    }

    #[test]
    fn dimacs_is_one_based() {
        let g = Graph::parse_dimacs("c tiny\np edge 3 2\ne 1 2\ne 2 3\n").unwrap();
        assert_eq!(g.neighbors(1), &[0, 2]);
    }

    #[test]
    fn induced_subgraph_keeps_order() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let (h, map) = g.induced(&[3, 2, 0]);
        assert_eq!(map, vec![3, 2, 0]);
        assert_eq!(h.m(), 1);
        assert!(h.has_edge(0, 1));
    }
}
