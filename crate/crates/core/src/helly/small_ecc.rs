use std::cmp::Reverse;
use std::collections::BinaryHeap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::metric::{bfs_unchecked, require_connected};
use crate::vertex_set::VertexSet;

/// One group `A_j` of the partition of `A` with its witness set
/// `V_j = ∩ { N^k[a] : a ∈ A_j }`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PartitionGroup {
    pub members: Vec<Vertex>,
    pub witness: Vec<Vertex>,
}

/// The partition of `A` at level `k`. Witness sets are pairwise disjoint.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PartitionState {
    pub level: u32,
    pub groups: Vec<PartitionGroup>,
}

impl PartitionState {
    fn initial(a: &[Vertex]) -> Self {
        let groups = a.iter().map(|&v| PartitionGroup { members: vec![v], witness: vec![v] }).collect();
        PartitionState { level: 0, groups }
    }

    /// `B_k`: the single witness set if the partition has collapsed.
    pub fn solution(&self, n: usize) -> VertexSet {
        match self.groups.as_slice() {
            [only] => VertexSet::from_iter(n, only.witness.iter().copied()),
            _ => VertexSet::new(n),
        }
    }
}

/// `B_k = { b : A ⊆ N^k[b] }` on a Helly graph.
pub fn small_eccentricities(g: &Graph, a: &[Vertex], k: u32) -> Result<(VertexSet, PartitionState)> {
    let mut last = None;
    run(g, a, k, |state| last = Some(state.clone()))?;
    let state = last.expect("level 0 is always reported");
    Ok((state.solution(g.n()), state))
}

/// Every level `0..=k` of the refinement, for inspection.
pub fn small_eccentricities_trace(g: &Graph, a: &[Vertex], k: u32) -> Result<Vec<PartitionState>> {
    let mut levels = Vec::new();
    run(g, a, k, |state| levels.push(state.clone()))?;
    Ok(levels)
}

/// Vertices of eccentricity at most `k`.
pub fn vertices_ecc_at_most(g: &Graph, k: u32) -> Result<VertexSet> {
    let all: Vec<Vertex> = g.vertices().collect();
    small_eccentricities(g, &all, k).map(|(b, _)| b)
}

fn run(g: &Graph, a: &[Vertex], k: u32, mut report: impl FnMut(&PartitionState)) -> Result<()> {
    if a.is_empty() {
        return Err(Error::EmptySourceSet);
    }
    for &v in a {
        g.check_vertex(v)?;
    }
    require_connected(g)?;
    let mut a = a.to_vec();
    a.sort_unstable();
    a.dedup();
    let mut state = PartitionState::initial(&a);
    report(&state);
    let mut refiner = Refiner::new(g.n());
    while state.level < k {
        if state.groups.len() == 1 {
            // a single group only grows: V^{k} = N^{k - level}[V^{level}]
            let d = bfs_unchecked(g, &state.groups[0].witness);
            let extra = k - state.level;
            let mut witness: Vec<Vertex> = d.visit_order().iter().copied().take_while(|&v| d.get(v) <= extra).collect();
            witness.sort_unstable();
            state.groups[0].witness = witness;
            state.level = k;
            report(&state);
            break;
        }
        state = refiner.step(g, &state);
        report(&state);
    }
    Ok(())
}

/// Scratch buffers for one refinement level.
struct Refiner {
    count: Vec<u32>,
    stamp: Vec<u32>,
    round: u32,
}

impl Refiner {
    fn new(n: usize) -> Self {
        Refiner { count: vec![0; n], stamp: vec![0; n], round: 0 }
    }

    fn fresh_round(&mut self) -> u32 {
        self.round += 1;
        self.round
    }

    fn step(&mut self, g: &Graph, prev: &PartitionState) -> PartitionState {
        let n = g.n();
        let p = prev.groups.len();

        // W_j = N[V_j]; the V_j are disjoint so this is linear overall
        let mut w: Vec<Vec<Vertex>> = Vec::with_capacity(p);
        for group in &prev.groups {
            let round = self.fresh_round();
            let mut list = Vec::new();
            for &v in &group.witness {
                for x in std::iter::once(v).chain(g.neighbors(v).iter().copied()) {
                    if self.stamp[x] != round {
                        self.stamp[x] = round;
                        list.push(x);
                    }
                }
            }
            w.push(list);
        }

        // inverted index vertex -> groups whose W contains it
        let mut start = vec![0usize; n + 1];
        for list in &w {
            for &x in list {
                start[x + 1] += 1;
            }
        }
        for v in 0..n {
            start[v + 1] += start[v];
        }
        let mut fill = start.clone();
        let mut owners = vec![0usize; start[n]];
        for (j, list) in w.iter().enumerate() {
            for &x in list {
                owners[fill[x]] = j;
                fill[x] += 1;
            }
        }

        // live coverage counts, max first, ties to the lowest id
        let mut heap = BinaryHeap::new();
        for v in 0..n {
            self.count[v] = (start[v + 1] - start[v]) as u32;
            if self.count[v] > 0 {
                heap.push((self.count[v], Reverse(v)));
            }
        }
        let mut alive = vec![true; p];
        let mut hits = vec![0u32; n];
        let mut groups = Vec::new();
        while let Some((c, Reverse(v))) = heap.pop() {
            if c != self.count[v] || c == 0 {
                continue;
            }
            let chosen: Vec<usize> = owners[start[v]..start[v + 1]].iter().copied().filter(|&j| alive[j]).collect();
            let mut members = Vec::new();
            let mut touched = Vec::new();
            for &j in &chosen {
                members.extend_from_slice(&prev.groups[j].members);
                for &x in &w[j] {
                    if hits[x] == 0 {
                        touched.push(x);
                    }
                    hits[x] += 1;
                }
            }
            let mut witness: Vec<Vertex> =
                touched.iter().copied().filter(|&x| hits[x] as usize == chosen.len()).collect();
            for &x in &touched {
                hits[x] = 0;
            }
            for &j in &chosen {
                alive[j] = false;
                for &x in &w[j] {
                    self.count[x] -= 1;
                    if self.count[x] > 0 {
                        heap.push((self.count[x], Reverse(x)));
                    }
                }
            }
            members.sort_unstable();
            witness.sort_unstable();
            groups.push(PartitionGroup { members, witness });
        }
        PartitionState { level: prev.level + 1, groups }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn path_examples() {
        let p5 = fixtures::path(5);
        let all: Vec<_> = p5.vertices().collect();
        let (b0, s0) = small_eccentricities(&p5, &all, 0).unwrap();
        assert!(b0.is_empty());
        assert_eq!(s0.groups.len(), 5);
        assert_eq!(small_eccentricities(&p5, &all, 2).unwrap().0.to_sorted_vec(), vec![2]);
        assert_eq!(small_eccentricities(&p5, &[0, 4], 2).unwrap().0.to_sorted_vec(), vec![2]);
        assert_eq!(vertices_ecc_at_most(&p5, 3).unwrap().to_sorted_vec(), vec![1, 2, 3]);
        assert_eq!(vertices_ecc_at_most(&p5, 4).unwrap().len(), 5);
    }

    #[test]
    fn king_center() {
        assert_eq!(vertices_ecc_at_most(&fixtures::king(3, 3), 1).unwrap().to_sorted_vec(), vec![4]);
    }

    #[test]
    fn trace_levels_are_disjoint_partitions() {
        let g = fixtures::king(4, 5);
        let all: Vec<_> = g.vertices().collect();
        for state in small_eccentricities_trace(&g, &all, 4).unwrap() {
            let mut members: Vec<_> = state.groups.iter().flat_map(|x| x.members.clone()).collect();
            members.sort_unstable();
            assert_eq!(members, all);
            let mut witnesses: Vec<_> = state.groups.iter().flat_map(|x| x.witness.clone()).collect();
            let total = witnesses.len();
            witnesses.sort_unstable();
            witnesses.dedup();
            assert_eq!(witnesses.len(), total);
        }
    }

    #[test]
    fn errors() {
        assert_eq!(small_eccentricities(&fixtures::path(3), &[], 1).unwrap_err(), Error::EmptySourceSet);
        let g = Graph::from_edges(3, &[(0, 1)]).unwrap();
        assert_eq!(small_eccentricities(&g, &[0], 1).unwrap_err(), Error::Disconnected);
    }
}
