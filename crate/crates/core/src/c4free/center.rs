use crate::error::{violation, Result};
use crate::gates::{compute_gates, GateMap};
use crate::graph::{Graph, Vertex};
use crate::metric::{bfs_from, require_connected, slice_from_rows};

use super::sweep::Sweep;

/// Linear-time clique check with a marker array.
pub(crate) fn assert_clique(g: &Graph, set: &[Vertex], what: &str) -> Result<()> {
    let mut mark = vec![false; g.n()];
    for &c in set {
        mark[c] = true;
    }
    for &c in set {
        let inside = g.neighbors(c).iter().filter(|&&x| mark[x]).count();
        if inside + 1 != set.len() {
            return Err(violation(format!("{what} is not a clique (at vertex {c})")));
        }
    }
    Ok(())
}

/// Members `c` of `set` adjacent to every vertex of `targets`, or equal to
/// it when `closed`.
pub(crate) fn adjacent_to_all(g: &Graph, set: &[Vertex], targets: &[Vertex], closed: bool) -> Vec<Vertex> {
    let n = g.n();
    let mut in_set = vec![false; n];
    for &c in set {
        in_set[c] = true;
    }
    let mut hits = vec![0usize; n];
    for &t in targets {
        for &c in g.neighbors(t) {
            if in_set[c] {
                hits[c] += 1;
            }
        }
        if closed && in_set[t] {
            hits[t] += 1;
        }
    }
    let mut out: Vec<Vertex> = set.iter().copied().filter(|&c| hits[c] == targets.len()).collect();
    out.sort_unstable();
    out
}

/// Distinct values of `pick(x)` over the vertices at distance `d` from the
/// gate target.
pub(crate) fn distinct_at(gm: &GateMap, d: u32, pick: impl Fn(Vertex) -> Vertex) -> Vec<Vertex> {
    let mut out: Vec<Vertex> = gm.at_distance(d).map(pick).collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// Vertices of the clique `C` with eccentricity at most `r`, assuming the
/// Helly property: every vertex is within `r` of `C` and `c` is adjacent to
/// the gate of every vertex at distance exactly `r`.
pub fn centers_in_clique(g: &Graph, clique: &[Vertex], r: u32) -> Result<Vec<Vertex>> {
    let gm = compute_gates(g, clique)?;
    let far = gm.max_dist();
    if far > r {
        return Ok(Vec::new());
    }
    if far < r || r == 0 {
        let mut all = clique.to_vec();
        all.sort_unstable();
        return Ok(all);
    }
    Ok(adjacent_to_all(g, clique, &distinct_at(&gm, r, |x| gm.gate[x]), false))
}

/// A central vertex and the radius of a C4-free Helly graph in linear time.
///
/// After a multi-sweep `v, u = F(v), w = F(u)`, the radius is one of two
/// values determined by `e(u)`; each is tried in ascending order on the
/// clique `L(w, r, u)`. The returned center is checked by one BFS.
pub fn c4h_central_vertex(g: &Graph) -> Result<(Vertex, u32)> {
    require_connected(g)?;
    if g.n() == 1 {
        return Ok((0, 0));
    }
    let sw = Sweep::run(g, 0);
    central_from_sweep(g, &sw)
}

pub(crate) fn central_from_sweep(g: &Graph, sw: &Sweep) -> Result<(Vertex, u32)> {
    let e = sw.row_v.get(sw.u);
    let half = e.div_ceil(2);
    let mut candidates = vec![half, (e + 1).div_ceil(2), half + 1];
    candidates.dedup();
    for r in candidates.into_iter().filter(|&r| r <= e) {
        let slice = slice_from_rows(&sw.row_u, &sw.row_v, r, sw.v)?;
        assert_clique(g, &slice, "slice L(w, r, u)")?;
        if let Some(&c) = centers_in_clique(g, &slice, r)?.first() {
            let ec = bfs_from(g, c).max();
            if ec != r {
                return Err(violation(format!("extracted center {c} has eccentricity {ec}, expected {r}")));
            }
            return Ok((c, r));
        }
    }
    Err(violation(format!("no candidate radius yields a center (e(u) = {e})")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::fixtures;
    use crate::metric::eccentricities_bruteforce;

    #[test]
    fn examples() {
        assert_eq!(c4h_central_vertex(&fixtures::path(5)).unwrap(), (2, 2));
        assert_eq!(c4h_central_vertex(&fixtures::star(4)).unwrap(), (0, 1));
        assert_eq!(c4h_central_vertex(&fixtures::complete(1)).unwrap(), (0, 0));
        let (c, r) = c4h_central_vertex(&fixtures::king(3, 3)).unwrap();
        assert_eq!((c, r), (4, 1));
    }

    #[test]
    fn sun_is_rejected_or_correct() {
        let g = fixtures::sun3();
        let truth = eccentricities_bruteforce(&g).unwrap();
        match c4h_central_vertex(&g) {
            Ok((c, r)) => assert_eq!((truth.ecc[c], truth.radius), (r, r)),
            Err(e) => assert!(matches!(e, Error::ClassViolation(_))),
        }
    }

    #[test]
    fn centers_of_a_path_slice() {
        let g = fixtures::path(7);
        assert_eq!(centers_in_clique(&g, &[3], 3).unwrap(), vec![3]);
        assert_eq!(centers_in_clique(&g, &[2, 3], 3).unwrap(), vec![3]);
        assert!(centers_in_clique(&g, &[2], 3).unwrap().is_empty());
    }
}
