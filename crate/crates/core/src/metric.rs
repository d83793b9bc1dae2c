//! BFS and the metric primitives: balls, slices, projections, eccentricities.

use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::vertex_set::VertexSet;

pub const UNREACHABLE: u32 = u32::MAX;

/// Hop distances from a source vertex or vertex set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Distances {
    dist: Vec<u32>,
    /// Vertices in BFS visit order.
    order: Vec<Vertex>,
}

impl Distances {
    #[inline]
    pub fn get(&self, v: Vertex) -> u32 {
        self.dist[v]
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.dist
    }

    pub fn is_reachable(&self, v: Vertex) -> bool {
        self.dist[v] != UNREACHABLE
    }

    pub fn all_reachable(&self) -> bool {
        self.order.len() == self.dist.len()
    }

    pub fn visit_order(&self) -> &[Vertex] {
        &self.order
    }

    /// Largest finite distance.
    pub fn max(&self) -> u32 {
        self.order.last().map_or(0, |&v| self.dist[v])
    }

    /// The last vertex visited; it lies at maximum distance.
    pub fn last(&self) -> Vertex {
        *self.order.last().expect("BFS visits at least its sources")
    }

    pub fn farthest(&self) -> impl Iterator<Item = Vertex> + '_ {
        let m = self.max();
        self.order.iter().rev().copied().take_while(move |&v| self.dist[v] == m)
    }

    pub fn at_distance(&self, d: u32) -> impl Iterator<Item = Vertex> + '_ {
        self.order.iter().copied().filter(move |&v| self.dist[v] == d)
    }

    pub fn into_vec(self) -> Vec<u32> {
        self.dist
    }
}

/// Multi-source BFS. Neighbors are expanded in ascending id order, so the
/// visit order is deterministic.
pub fn bfs(g: &Graph, sources: &[Vertex]) -> Result<Distances> {
    if sources.is_empty() {
        return Err(Error::EmptySourceSet);
    }
    for &s in sources {
        g.check_vertex(s)?;
    }
    Ok(bfs_unchecked(g, sources))
}

pub(crate) fn bfs_unchecked(g: &Graph, sources: &[Vertex]) -> Distances {
    let mut dist = vec![UNREACHABLE; g.n()];
    let mut order = Vec::with_capacity(g.n());
    for &s in sources {
        if dist[s] == UNREACHABLE {
            dist[s] = 0;
            order.push(s);
        }
    }
    let mut head = 0;
    while head < order.len() {
        let v = order[head];
        head += 1;
        let dv = dist[v] + 1;
        for &w in g.neighbors(v) {
            if dist[w] == UNREACHABLE {
                dist[w] = dv;
                order.push(w);
            }
        }
    }
    Distances { dist, order }
}

pub(crate) fn bfs_from(g: &Graph, s: Vertex) -> Distances {
    bfs_unchecked(g, &[s])
}

/// Reusable BFS buffer that only records eccentricity; used by the
/// all-pairs loops where the full distance row is not kept.
pub(crate) struct EccScratch {
    dist: Vec<u32>,
    queue: VecDeque<Vertex>,
}

impl EccScratch {
    pub(crate) fn new(n: usize) -> Self {
        EccScratch { dist: vec![UNREACHABLE; n], queue: VecDeque::with_capacity(n) }
    }

    /// Returns `(eccentricity, farthest vertex, visited count)`.
    pub(crate) fn run(&mut self, g: &Graph, s: Vertex) -> (u32, Vertex, usize) {
        self.dist.fill(UNREACHABLE);
        self.dist[s] = 0;
        self.queue.clear();
        self.queue.push_back(s);
        let (mut last, mut seen) = (s, 0);
        while let Some(v) = self.queue.pop_front() {
            last = v;
            seen += 1;
            let dv = self.dist[v] + 1;
            for &w in g.neighbors(v) {
                if self.dist[w] == UNREACHABLE {
                    self.dist[w] = dv;
                    self.queue.push_back(w);
                }
            }
        }
        (self.dist[last], last, seen)
    }

    pub(crate) fn dist(&self) -> &[u32] {
        &self.dist
    }
}

pub fn is_connected(g: &Graph) -> bool {
    g.n() <= 1 || bfs_from(g, 0).all_reachable()
}

pub(crate) fn require_connected(g: &Graph) -> Result<()> {
    if is_connected(g) {
        Ok(())
    } else {
        Err(Error::Disconnected)
    }
}

/// Exact eccentricities by one BFS per vertex, plus the derived radius,
/// diameter, center and a diametral pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EccentricityProfile {
    pub ecc: Vec<u32>,
    pub radius: u32,
    pub diameter: u32,
    pub center: Vec<Vertex>,
    pub diametral_pair: (Vertex, Vertex),
}

pub fn eccentricities_bruteforce(g: &Graph) -> Result<EccentricityProfile> {
    if g.n() == 0 {
        return Err(Error::InvalidGraph("empty graph".into()));
    }
    let mut scratch = EccScratch::new(g.n());
    let mut ecc = Vec::with_capacity(g.n());
    let mut best = (0, (0, 0));
    for v in g.vertices() {
        let (e, far, seen) = scratch.run(g, v);
        if seen != g.n() {
            return Err(Error::Disconnected);
        }
        if e > best.0 {
            best = (e, (v, far));
        }
        ecc.push(e);
    }
    let radius = *ecc.iter().min().unwrap();
    let center = g.vertices().filter(|&v| ecc[v] == radius).collect();
    Ok(EccentricityProfile { radius, diameter: best.0, center, diametral_pair: best.1, ecc })
}

/// `N^r[v]`.
pub fn ball(g: &Graph, v: Vertex, r: u32) -> Result<VertexSet> {
    g.check_vertex(v)?;
    let d = bfs_from(g, v);
    Ok(VertexSet::from_iter(g.n(), d.visit_order().iter().copied().take_while(|&w| d.get(w) <= r)))
}

/// `I(u, v)`: vertices on some shortest `u`-`v` path.
pub fn interval(g: &Graph, u: Vertex, v: Vertex) -> Result<VertexSet> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    let du = bfs_from(g, u);
    let dv = bfs_from(g, v);
    let d = du.get(v);
    if d == UNREACHABLE {
        return Err(Error::Disconnected);
    }
    Ok(VertexSet::from_iter(
        g.n(),
        du.visit_order().iter().copied().filter(|&w| dv.is_reachable(w) && du.get(w) + dv.get(w) == d),
    ))
}

/// `L(u, k, v)`: vertices of `I(u, v)` at distance exactly `k` from `u`.
pub fn slice(g: &Graph, u: Vertex, k: u32, v: Vertex) -> Result<VertexSet> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    let du = bfs_from(g, u);
    let dv = bfs_from(g, v);
    slice_from_rows(&du, &dv, k, v).map(|s| VertexSet::from_iter(g.n(), s))
}

/// Slice computed from precomputed distance rows of its two endpoints.
pub(crate) fn slice_from_rows(du: &Distances, dv: &Distances, k: u32, v: Vertex) -> Result<Vec<Vertex>> {
    let d = du.get(v);
    if d == UNREACHABLE {
        return Err(Error::Disconnected);
    }
    if k > d {
        return Err(Error::KOutOfRange { k, dist: d });
    }
    Ok(du.visit_order().iter().copied().filter(|&w| du.get(w) == k && dv.get(w) == d - k).collect())
}

/// `(dist(v, S), Pr(v, S))`.
pub fn projection(g: &Graph, v: Vertex, set: &[Vertex]) -> Result<(u32, VertexSet)> {
    if set.is_empty() {
        return Err(Error::EmptySourceSet);
    }
    g.check_vertex(v)?;
    for &s in set {
        g.check_vertex(s)?;
    }
    let d = bfs_from(g, v);
    let best = set.iter().map(|&s| d.get(s)).min().unwrap();
    if best == UNREACHABLE {
        return Err(Error::Disconnected);
    }
    Ok((best, VertexSet::from_iter(g.n(), set.iter().copied().filter(|&s| d.get(s) == best))))
}

/// All-pairs distance matrix (row-major, `n * n`). Desk-scale helper for
/// oracles and exhaustive checks.
pub fn distance_matrix(g: &Graph) -> Vec<Vec<u32>> {
    let mut scratch = EccScratch::new(g.n());
    g.vertices()
        .map(|v| {
            scratch.run(g, v);
            scratch.dist().to_vec()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn bfs_examples() {
        let p5 = fixtures::path(5);
        assert_eq!(bfs(&p5, &[0]).unwrap().as_slice(), &[0, 1, 2, 3, 4]);
        assert_eq!(bfs(&p5, &[0, 4]).unwrap().as_slice(), &[0, 1, 2, 1, 0]);
        assert_eq!(bfs(&fixtures::cycle(4), &[0]).unwrap().as_slice(), &[0, 1, 2, 1]);
    }

    #[test]
    fn bfs_errors_and_unreachable() {
        let g = Graph::from_edges(3, &[(0, 1)]).unwrap();
        assert_eq!(bfs(&g, &[]), Err(Error::EmptySourceSet));
        assert_eq!(bfs(&g, &[7]), Err(Error::VertexOutOfRange { vertex: 7, n: 3 }));
        let d = bfs(&g, &[0]).unwrap();
        assert!(!d.is_reachable(2));
        assert!(!d.all_reachable());
    }

    #[test]
    fn bruteforce_examples() {
        let p = eccentricities_bruteforce(&fixtures::path(5)).unwrap();
        assert_eq!(p.ecc, vec![4, 3, 2, 3, 4]);
        assert_eq!((p.radius, p.diameter), (2, 4));
        assert_eq!(p.center, vec![2]);
        let s = eccentricities_bruteforce(&fixtures::star(4)).unwrap();
        assert_eq!(s.ecc, vec![1, 2, 2, 2, 2]);
        assert_eq!((s.radius, s.diameter), (1, 2));
        let k = eccentricities_bruteforce(&fixtures::complete(4)).unwrap();
        assert_eq!(k.ecc, vec![1; 4]);
        let g = Graph::from_edges(3, &[(0, 1)]).unwrap();
        assert_eq!(eccentricities_bruteforce(&g), Err(Error::Disconnected));
    }

    #[test]
    fn ball_examples() {
        let p5 = fixtures::path(5);
        assert_eq!(ball(&p5, 2, 1).unwrap().to_sorted_vec(), vec![1, 2, 3]);
        assert_eq!(ball(&p5, 0, 0).unwrap().to_sorted_vec(), vec![0]);
        assert_eq!(ball(&fixtures::cycle(4), 0, 2).unwrap().len(), 4);
        assert!(ball(&p5, 9, 1).is_err());
    }

    #[test]
    fn slice_examples() {
        let p5 = fixtures::path(5);
        assert_eq!(slice(&p5, 0, 2, 4).unwrap().to_sorted_vec(), vec![2]);
        assert_eq!(slice(&fixtures::cycle(4), 0, 1, 2).unwrap().to_sorted_vec(), vec![1, 3]);
        assert_eq!(slice(&fixtures::complete(4), 0, 0, 1).unwrap().to_sorted_vec(), vec![0]);
        assert_eq!(slice(&p5, 0, 5, 4), Err(Error::KOutOfRange { k: 5, dist: 4 }));
        let g = Graph::from_edges(3, &[(0, 1)]).unwrap();
        assert_eq!(slice(&g, 0, 0, 2), Err(Error::Disconnected));
    }

    #[test]
    fn projection_examples() {
        let p5 = fixtures::path(5);
        let (d, pr) = projection(&p5, 4, &[1, 2]).unwrap();
        assert_eq!((d, pr.to_sorted_vec()), (2, vec![2]));
        let (d, pr) = projection(&p5, 2, &[2]).unwrap();
        assert_eq!((d, pr.to_sorted_vec()), (0, vec![2]));
        let (d, pr) = projection(&fixtures::cycle(4), 2, &[0]).unwrap();
        assert_eq!((d, pr.to_sorted_vec()), (2, vec![0]));
        assert_eq!(projection(&p5, 0, &[]).unwrap_err(), Error::EmptySourceSet);
    }
}
