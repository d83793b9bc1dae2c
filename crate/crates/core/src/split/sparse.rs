use std::collections::HashMap;
use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::oracles::recognize::{is_split, Witness};
use crate::split::disjoint::{disjoint_set, Kernel, SetFamily};

/// A split graph as a clique, a stable set, and the clique neighbors of
/// every stable vertex. Vertices carry arbitrary distinct labels; stable
/// neighbor lists hold positions into `clique`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SparseSplit {
    pub clique: Vec<Vertex>,
    pub stable: Vec<Vertex>,
    pub nbrs: Vec<Vec<usize>>,
}

impl SparseSplit {
    pub fn new(clique: Vec<Vertex>, stable: Vec<Vertex>, mut nbrs: Vec<Vec<usize>>) -> Result<Self> {
        if stable.len() != nbrs.len() {
            return Err(Error::InvalidGraph("one neighbor list per stable vertex".into()));
        }
        for list in &mut nbrs {
            list.sort_unstable();
            list.dedup();
            if list.last().is_some_and(|&c| c >= clique.len()) {
                return Err(Error::InvalidGraph("neighbor outside the clique".into()));
            }
        }
        let mut labels: Vec<_> = clique.iter().chain(&stable).copied().collect();
        labels.sort_unstable();
        if labels.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidGraph("duplicate vertex label".into()));
        }
        Ok(SparseSplit { clique, stable, nbrs })
    }

    /// Bipartition by the degree-sequence criterion; labels are the graph ids.
    pub fn from_graph(g: &Graph) -> Result<Self> {
        let Witness::Bipartition { clique, stable } = is_split(g).witness else {
            return Err(Error::InvalidGraph("not a split graph".into()));
        };
        let mut pos = vec![usize::MAX; g.n()];
        for (i, &c) in clique.iter().enumerate() {
            pos[c] = i;
        }
        let nbrs = stable.iter().map(|&s| g.neighbors(s).iter().map(|&c| pos[c]).collect()).collect();
        SparseSplit::new(clique, stable, nbrs)
    }

    pub fn n(&self) -> usize {
        self.clique.len() + self.stable.len()
    }

    /// `ℓ(H)`: total size of the stable neighbor lists.
    pub fn ell(&self) -> usize {
        self.nbrs.iter().map(Vec::len).sum()
    }

    /// Dense graph with clique positions `0..|C|` followed by the stable set.
    pub fn to_graph(&self) -> Graph {
        let nc = self.clique.len();
        let mut edges = Vec::new();
        for a in 0..nc {
            for b in a + 1..nc {
                edges.push((a, b));
            }
        }
        for (i, list) in self.nbrs.iter().enumerate() {
            edges.extend(list.iter().map(|&c| (c, nc + i)));
        }
        Graph::from_edges(self.n(), &edges).unwrap()
    }

    /// Label of dense vertex `v` of [`SparseSplit::to_graph`].
    pub fn label(&self, v: Vertex) -> Vertex {
        if v < self.clique.len() {
            self.clique[v]
        } else {
            self.stable[v - self.clique.len()]
        }
    }

    /// `"nC nU"`, the clique labels, then one `"u: c1 c2 ..."` line per
    /// stable vertex.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap().trim()))
            .filter(|(_, l)| !l.is_empty());
        let err = |line: usize, msg: &str| Error::Parse { line, msg: msg.into() };
        let num = |line: usize, s: &str| s.parse::<usize>().map_err(|_| err(line, &format!("bad number {s:?}")));
        let (l1, header) = lines.next().ok_or_else(|| err(1, "missing header"))?;
        let head: Vec<_> = header.split_whitespace().collect();
        if head.len() != 2 {
            return Err(err(l1, "header must be \"nC nU\""));
        }
        let (nc, nu) = (num(l1, head[0])?, num(l1, head[1])?);
        let clique: Vec<Vertex> = if nc == 0 {
            Vec::new()
        } else {
            let (l2, row) = lines.next().ok_or_else(|| err(l1 + 1, "missing clique line"))?;
            row.split_whitespace().map(|s| num(l2, s)).collect::<Result<_>>()?
        };
        if clique.len() != nc {
            return Err(err(l1 + 1, "clique line length differs from nC"));
        }
        let pos: HashMap<Vertex, usize> = clique.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        let (mut stable, mut nbrs) = (Vec::new(), Vec::new());
        for (l, row) in lines {
            let (u, rest) = row.split_once(':').ok_or_else(|| err(l, "expected \"u: c1 c2 ...\""))?;
            stable.push(num(l, u.trim())?);
            let list = rest
                .split_whitespace()
                .map(|s| num(l, s).and_then(|c| pos.get(&c).copied().ok_or_else(|| err(l, "neighbor not in clique"))))
                .collect::<Result<Vec<_>>>()?;
            nbrs.push(list);
        }
        if stable.len() != nu {
            return Err(err(0, &format!("expected {nu} stable lines, found {}", stable.len())));
        }
        SparseSplit::new(clique, stable, nbrs)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.clique.len(), self.stable.len());
        let row: Vec<String> = self.clique.iter().map(|c| c.to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
        for (s, list) in self.stable.iter().zip(&self.nbrs) {
            write!(out, "{s}:").unwrap();
            for &c in list {
                write!(out, " {}", self.clique[c]).unwrap();
            }
            out.push('\n');
        }
        out
    }

    pub(crate) fn require_connected(&self) -> Result<()> {
        if self.n() > 1 && (self.clique.is_empty() || self.nbrs.iter().any(Vec::is_empty)) {
            return Err(Error::Disconnected);
        }
        Ok(())
    }

    /// A nonadjacent pair, if the graph is not complete.
    pub(crate) fn nonadjacent_pair(&self) -> Option<(Vertex, Vertex)> {
        if self.stable.len() >= 2 {
            return Some((self.stable[0], self.stable[1]));
        }
        let list = self.nbrs.first()?;
        let missing = (0..self.clique.len()).find(|c| list.binary_search(c).is_err())?;
        Some((self.stable[0], self.clique[missing]))
    }
}

/// Exact diameter (at most 3) of a connected split graph: 3 iff two stable
/// vertices have disjoint neighborhoods.
pub fn split_diameter(h: &SparseSplit, kernel: Kernel) -> Result<u32> {
    split_diameter_pair(h, kernel).map(|(_, _, d)| d)
}

pub fn split_diameter_pair(h: &SparseSplit, kernel: Kernel) -> Result<(Vertex, Vertex, u32)> {
    h.require_connected()?;
    if h.n() == 1 {
        let v = h.label(0);
        return Ok((v, v, 0));
    }
    let family = SetFamily::new(h.clique.len(), h.nbrs.clone());
    if let Some((i, j)) = disjoint_set(&family, kernel) {
        return Ok((h.stable[i], h.stable[j], 3));
    }
    Ok(match h.nonadjacent_pair() {
        Some((x, y)) => (x, y, 2),
        None => (h.label(0), h.label(1), 1),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::metric::eccentricities_bruteforce;

    #[test]
    fn split_h2_roundtrip() {
        let h = SparseSplit::from_graph(&fixtures::split_h2()).unwrap();
        assert_eq!(h.clique, vec![0, 1, 2]);
        assert_eq!(h.stable, vec![3, 4]);
        assert_eq!(h.ell(), 2);
        let text = h.to_text();
        assert_eq!(text, "3 2\n0 1 2\n3: 0\n4: 1\n");
        assert_eq!(SparseSplit::parse(&text).unwrap(), h);
        assert_eq!(eccentricities_bruteforce(&h.to_graph()).unwrap().diameter, 3);
    }

    #[test]
    fn diameter_examples() {
        for kernel in [Kernel::Naive, Kernel::Packed] {
            let h = SparseSplit::from_graph(&fixtures::split_h2()).unwrap();
            assert_eq!(split_diameter_pair(&h, kernel).unwrap(), (3, 4, 3));
            let k1 = SparseSplit::new(vec![7], vec![], vec![]).unwrap();
            assert_eq!(split_diameter(&k1, kernel).unwrap(), 0);
            let universal = SparseSplit::new(vec![0, 1], vec![2, 3, 4], vec![vec![0], vec![0, 1], vec![0]]).unwrap();
            assert_eq!(split_diameter(&universal, kernel).unwrap(), 2);
            let k4 = SparseSplit::from_graph(&fixtures::complete(4)).unwrap();
            assert_eq!(split_diameter(&k4, kernel).unwrap(), 1);
        }
    }

    #[test]
    fn parse_errors_carry_lines() {
        assert!(matches!(SparseSplit::parse("2 1\n0 1\n2 0 1\n"), Err(Error::Parse { line: 3, .. })));
        assert!(matches!(SparseSplit::parse("2 1\n0 1\n2: 5\n"), Err(Error::Parse { line: 3, .. })));
        assert!(SparseSplit::new(vec![0], vec![1], vec![vec![]]).unwrap().require_connected().is_err());
    }
}
