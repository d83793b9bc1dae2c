use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Vertex;
use crate::split::sparse::SparseSplit;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SplitPair {
    pub x: Vertex,
    pub y: Vertex,
    pub d: u32,
}

/// Diametral pair of a split Helly graph in `O(ℓ(H) + |C| + |U|)`.
///
/// Stable vertices are scanned by ascending label while the clique is
/// refined by their neighborhoods; the first stable vertex whose live
/// degree drops to zero is at distance 3 from the one just scanned.
pub fn split_helly_diametral_pair(h: &SparseSplit) -> Result<SplitPair> {
    run(h, |_| {})
}

/// Same as [`split_helly_diametral_pair`], also returning the first group
/// (sorted clique labels) after each refinement step.
pub fn split_helly_diametral_pair_traced(h: &SparseSplit) -> Result<(SplitPair, Vec<Vec<Vertex>>)> {
    let mut trace = Vec::new();
    let pair = run(h, |group| {
        let mut g = group.to_vec();
        g.sort_unstable();
        trace.push(g);
    })?;
    Ok((pair, trace))
}

fn run(h: &SparseSplit, mut report: impl FnMut(&[Vertex])) -> Result<SplitPair> {
    h.require_connected()?;
    if h.n() == 1 {
        let v = h.clique.first().or(h.stable.first()).copied().unwrap();
        return Ok(SplitPair { x: v, y: v, d: 0 });
    }
    let Some((x, y)) = h.nonadjacent_pair() else {
        return Ok(SplitPair { x: h.label(0), y: h.label(1), d: 1 });
    };
    let nc = h.clique.len();
    let mut holders: Vec<Vec<usize>> = vec![Vec::new(); nc];
    for (s, list) in h.nbrs.iter().enumerate() {
        for &c in list {
            holders[c].push(s);
        }
    }
    if holders.iter().any(|l| l.len() == h.stable.len()) || h.stable.len() == 1 {
        return Ok(SplitPair { x, y, d: 2 });
    }

    let mut order: Vec<usize> = (0..h.stable.len()).collect();
    order.sort_unstable_by_key(|&s| h.stable[s]);
    let mut deg: Vec<usize> = h.nbrs.iter().map(Vec::len).collect();
    // first group = arr[..len]; pos is the inverse permutation
    let mut arr: Vec<usize> = (0..nc).collect();
    let mut pos: Vec<usize> = (0..nc).collect();
    let mut len = nc;
    for &xi in &order {
        let mut front = 0;
        for &c in &h.nbrs[xi] {
            if pos[c] < len {
                let other = arr[front];
                arr.swap(pos[c], front);
                pos[other] = pos[c];
                pos[c] = front;
                front += 1;
            }
        }
        let removed = arr[front..len].to_vec();
        len = front;
        let labels: Vec<Vertex> = arr[..len].iter().map(|&c| h.clique[c]).collect();
        report(&labels);
        let mut hit = None;
        for &w in &removed {
            for &s in &holders[w] {
                deg[s] -= 1;
                if deg[s] == 0 && s != xi && hit.is_none() {
                    hit = Some(s);
                }
            }
        }
        if let Some(s) = hit {
            if !disjoint(&h.nbrs[xi], &h.nbrs[s]) {
                return Err(Error::ClassViolation(format!(
                    "stable vertices {} and {} share a neighbor",
                    h.stable[xi], h.stable[s]
                )));
            }
            return Ok(SplitPair { x: h.stable[xi], y: h.stable[s], d: 3 });
        }
    }
    Err(Error::ClassViolation("neighborhoods pairwise intersect but no universal vertex exists".into()))
}

fn disjoint(a: &[usize], b: &[usize]) -> bool {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => return false,
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn examples() {
        let h = SparseSplit::from_graph(&fixtures::split_h2()).unwrap();
        assert_eq!(split_helly_diametral_pair(&h).unwrap(), SplitPair { x: 3, y: 4, d: 3 });
        let k4 = SparseSplit::from_graph(&fixtures::complete(4)).unwrap();
        assert_eq!(split_helly_diametral_pair(&k4).unwrap().d, 1);
        let universal = SparseSplit::new(vec![0, 1], vec![2, 3], vec![vec![0], vec![0, 1]]).unwrap();
        assert_eq!(split_helly_diametral_pair(&universal).unwrap(), SplitPair { x: 2, y: 3, d: 2 });
    }

    #[test]
    fn trace_tracks_running_intersection() {
        // clique 0..4, stable 4,5,6 with N = {0,1,2}, {1,2,3}, {3}
        let h = SparseSplit::new(vec![0, 1, 2, 3], vec![4, 5, 6], vec![vec![0, 1, 2], vec![1, 2, 3], vec![3]]).unwrap();
        let (pair, trace) = split_helly_diametral_pair_traced(&h).unwrap();
        assert_eq!(pair, SplitPair { x: 4, y: 6, d: 3 });
        assert_eq!(trace, vec![vec![0, 1, 2]]);
    }

    #[test]
    fn non_helly_input_is_flagged() {
        // three stable vertices on the edges of a triangle: pairwise
        // intersecting neighborhoods with no common vertex
        let h = SparseSplit::new(vec![0, 1, 2], vec![3, 4, 5], vec![vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap();
        assert!(matches!(split_helly_diametral_pair(&h), Err(Error::ClassViolation(_))));
    }
}
