use serde::Serialize;

use crate::error::{violation, Error, Result};
use crate::gates::{compute_gates, compute_gates_with_pseudo, GateMap};
use crate::graph::{Graph, Vertex};
use crate::metric::{bfs_from, bfs_unchecked, require_connected, slice_from_rows, Distances};
use crate::split::{split_helly_diametral_pair, SparseSplit};

use super::center::{adjacent_to_all, assert_clique, central_from_sweep, distinct_at};
use super::sweep::Sweep;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum DiamBranch {
    /// `n <= 2` or radius 1.
    Trivial,
    /// `e(u) = 2r`: `u` is an end of a diametral path.
    Even,
    /// `w ∈ F(u)` turned out to have eccentricity `2r - 1`.
    FarEnd,
    /// `e(u) = 2r - 2`: projections on `C = L(u, r - 1, w)`.
    EvenProjection,
    /// `e(u) = 2r - 3`: projections on `A = L(w, r - 2, u)`.
    OddProjection,
    /// `e(u) = 2r - 1`: all central vertices inside `N[c]`.
    OddCenter,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiamCertificate {
    pub x: Vertex,
    pub y: Vertex,
    pub d: u32,
    pub radius: u32,
    pub center: Vertex,
    pub branch: DiamBranch,
    pub u: Vertex,
    pub w: Vertex,
    /// The slice clique `C` or `A`, or the central set in the odd-center case.
    pub slice: Vec<Vertex>,
    /// The reduced split Helly instance `G[C ∪ S_red]`.
    pub split: Option<SparseSplit>,
    /// Times the sweep moved on to `w` before the case analysis settled.
    pub resweeps: u32,
}

/// A diametral pair of a C4-free Helly graph in linear time.
///
/// Every structural consequence of the class used along the way is checked;
/// a failure is reported as `ClassViolation`. The returned distance is
/// always a true distance, checked by BFS.
pub fn c4h_diametral_pair(g: &Graph) -> Result<DiamCertificate> {
    c4h_diametral_pair_from(g, 0)
}

/// As [`c4h_diametral_pair`], with the multi-sweep started at `s`.
pub fn c4h_diametral_pair_from(g: &Graph, s: Vertex) -> Result<DiamCertificate> {
    g.check_vertex(s)?;
    require_connected(g)?;
    from_sweep(g, Sweep::run(g, s))
}

/// Case analysis from an explicit sweep pair: `u` must be a farthest vertex
/// of some vertex and `w ∈ F(u)`. Lets every tie choice be exercised.
pub fn c4h_diametral_pair_with(g: &Graph, u: Vertex, w: Vertex) -> Result<DiamCertificate> {
    g.check_vertex(u)?;
    g.check_vertex(w)?;
    require_connected(g)?;
    let row_v = bfs_from(g, u);
    if row_v.get(w) != row_v.max() {
        return Err(Error::BadParams(format!("{w} is not a farthest vertex of {u}")));
    }
    let row_u = bfs_from(g, w);
    from_sweep(g, Sweep { v: u, row_v, u: w, row_u })
}

fn from_sweep(g: &Graph, sw: Sweep) -> Result<DiamCertificate> {
    let n = g.n();
    let base = |x: Vertex, y: Vertex, d: u32, branch| DiamCertificate {
        x,
        y,
        d,
        radius: d.div_ceil(2),
        center: x,
        branch,
        u: x,
        w: y,
        slice: Vec::new(),
        split: None,
        resweeps: 0,
    };
    if n <= 2 {
        return Ok(base(sw.v, sw.u, sw.row_v.get(sw.u), DiamBranch::Trivial));
    }
    let (center, r) = central_from_sweep(g, &sw)?;
    let mut cert = base(sw.v, sw.u, 0, DiamBranch::Trivial);
    cert.radius = r;
    cert.center = center;
    if r == 1 {
        let x = (0..n).find(|&v| g.degree(v) + 1 < n);
        let (x, y, d) = match x {
            Some(x) => {
                let row = bfs_from(g, x);
                (x, row.last(), 2)
            }
            None => (0, 1, 1),
        };
        return Ok(DiamCertificate { x, y, d, u: sw.v, w: sw.u, ..cert });
    }

    let (mut u, mut row_u) = (sw.v, sw.row_v);
    let mut cached_w = Some((sw.u, sw.row_u));
    for resweeps in 0..=n as u32 {
        let eu = row_u.max();
        let (w, row_w) = cached_w.take().unwrap_or_else(|| {
            let w = row_u.last();
            (w, bfs_from(g, w))
        });
        let ew = row_w.max();
        cert.u = u;
        cert.w = w;
        cert.resweeps = resweeps;
        let done = |cert: DiamCertificate, x, y, d, branch| Ok(DiamCertificate { x, y, d, branch, ..cert });
        if eu == 2 * r {
            return done(cert, u, w, eu, DiamBranch::Even);
        }
        if eu + 3 < 2 * r || eu > 2 * r {
            return Err(violation(format!("multi-sweep eccentricity {eu} too far from 2r = {}", 2 * r)));
        }
        if eu < 2 * r - 1 && ew > eu {
            // diam = 2r - 1 in both remaining cases
            if ew == 2 * r - 1 {
                return done(cert, w, row_w.last(), ew, DiamBranch::FarEnd);
            }
            if ew == 2 * r {
                return Err(violation(format!("e(w) = 2r but e(u) = {eu}")));
            }
        }
        if eu == 2 * r - 2 {
            if ew != eu {
                return Err(violation(format!("e(w) = {ew} differs from e(u) = {eu}")));
            }
            let slice = slice_from_rows(&row_u, &row_w, r - 1, w)?;
            let (x, y, split) = projection_pair(g, &slice, r - 1, |_| true, "C = L(u, r - 1, w)")?;
            return finish(g, cert, x, y, 2 * r - 1, DiamBranch::EvenProjection, slice, Some(split));
        }
        if eu == 2 * r - 3 {
            if ew == 2 * r - 2 {
                // w is a better start: switch to the even case
                u = w;
                row_u = row_w;
                continue;
            }
            let slice = slice_from_rows(&row_w, &row_u, r - 2, u)?;
            let far = |x: Vertex| row_u.get(x) == eu && row_w.get(x) == eu;
            let (x, y, split) = projection_pair(g, &slice, r - 1, far, "A = L(w, r - 2, u)")?;
            return finish(g, cert, x, y, 2 * r - 1, DiamBranch::OddProjection, slice, Some(split));
        }
        // e(u) = 2r - 1
        return odd_center(g, cert, center, r, u, w);
    }
    Err(violation("multi-sweep did not settle"))
}

#[allow(clippy::too_many_arguments)]
fn finish(
    g: &Graph,
    cert: DiamCertificate,
    x: Vertex,
    y: Vertex,
    d: u32,
    branch: DiamBranch,
    slice: Vec<Vertex>,
    split: Option<SparseSplit>,
) -> Result<DiamCertificate> {
    let got = bfs_from(g, x).get(y);
    if got != d {
        return Err(violation(format!("{branch:?} pair ({x}, {y}) at distance {got}, expected {d}")));
    }
    Ok(DiamCertificate { x, y, d, branch, slice, split, ..cert })
}

/// Two vertices at distance `depth` from the clique `C` with disjoint
/// projections, found through the split Helly graph on `C` and a reduced
/// stable set of gates.
fn projection_pair(
    g: &Graph,
    clique: &[Vertex],
    depth: u32,
    eligible: impl Fn(Vertex) -> bool,
    what: &str,
) -> Result<(Vertex, Vertex, SparseSplit)> {
    assert_clique(g, clique, what)?;
    let gm = compute_gates(g, clique)?;
    if gm.max_dist() > depth {
        return Err(violation(format!("a vertex lies farther than {depth} from {what}")));
    }
    let n = g.n();
    // one representative per gate
    let mut rep = vec![usize::MAX; n];
    for x in gm.at_distance(depth).filter(|&x| eligible(x)) {
        let s = gm.gate[x];
        rep[s] = rep[s].min(x);
    }
    let gates: Vec<Vertex> = (0..n).filter(|&s| rep[s] != usize::MAX).collect();
    let reduced = reduce_gates(g, &gm, &gates)?;

    let mut pos = vec![usize::MAX; n];
    for (i, &c) in clique.iter().enumerate() {
        pos[c] = i;
    }
    let nbrs = reduced
        .iter()
        .map(|&s| g.neighbors(s).iter().filter(|&&c| pos[c] != usize::MAX).map(|&c| pos[c]).collect())
        .collect();
    let h = SparseSplit::new(clique.to_vec(), reduced, nbrs)?;
    let pair = split_helly_diametral_pair(&h)?;
    if pair.d != 3 {
        return Err(violation(format!("no two gates with disjoint projections on {what}")));
    }
    Ok((rep[pair.x], rep[pair.y], h))
}

/// `S_red`: gates in ascending `(|N(s) ∩ C|, id)`; a gate is dropped when an
/// adjacent kept gate sees no more of `C`. Projections of adjacent gates
/// must be nested.
fn reduce_gates(g: &Graph, gm: &GateMap, gates: &[Vertex]) -> Result<Vec<Vertex>> {
    let n = g.n();
    let in_c: Vec<bool> = gm.dist.iter().map(|&d| d == 0).collect();
    let mut order = gates.to_vec();
    order.sort_unstable_by_key(|&s| (gm.proj[s], s));
    let mut kept = vec![false; n];
    for &s in gates {
        kept[s] = true;
    }
    let mut mark = vec![false; n];
    for &s in &order {
        let Some(&t) = g.neighbors(s).iter().find(|&&t| kept[t] && gm.proj[t] <= gm.proj[s]) else {
            continue;
        };
        kept[s] = false;
        let ps: Vec<Vertex> = g.neighbors(s).iter().copied().filter(|&c| in_c[c]).collect();
        for &c in &ps {
            mark[c] = true;
        }
        let nested = g.neighbors(t).iter().filter(|&&c| in_c[c]).all(|&c| mark[c]);
        for &c in &ps {
            mark[c] = false;
        }
        if !nested {
            return Err(violation(format!("projections of adjacent gates {s} and {t} are not nested")));
        }
    }
    Ok(gates.iter().copied().filter(|&s| kept[s]).collect())
}

/// `e(u) = 2r - 1`: assuming `diam = 2r`, every central vertex lies in
/// `S = N[c]`; they are the members of `S` adjacent to the gates of all
/// vertices at distance `r` from `S` and within one of the pseudo-gates of
/// all vertices at distance `r - 1`. A vertex at distance `r` from the
/// central set has eccentricity `2r`; otherwise `diam = 2r - 1`.
fn odd_center(g: &Graph, cert: DiamCertificate, c: Vertex, r: u32, u: Vertex, w: Vertex) -> Result<DiamCertificate> {
    let mut s: Vec<Vertex> = std::iter::once(c).chain(g.neighbors(c).iter().copied()).collect();
    s.sort_unstable();
    let gm = compute_gates_with_pseudo(g, &s)?;
    let pg = gm.pseudo.as_ref().unwrap();
    let by_gate = adjacent_to_all(g, &s, &distinct_at(&gm, r, |x| gm.gate[x]), false);
    let central = adjacent_to_all(g, &by_gate, &distinct_at(&gm, r - 1, |x| pg[x]), true);
    if !central.is_empty() {
        let d = bfs_unchecked(g, &central);
        if let Some(x) = (0..g.n()).find(|&x| d.get(x) == r) {
            let row: Distances = bfs_from(g, x);
            if row.max() == 2 * r {
                return Ok(DiamCertificate {
                    x,
                    y: row.last(),
                    d: 2 * r,
                    branch: DiamBranch::OddCenter,
                    slice: central,
                    ..cert
                });
            }
        }
    }
    finish(g, cert, u, w, 2 * r - 1, DiamBranch::OddCenter, central, None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::metric::eccentricities_bruteforce;
    use crate::oracles::generate::random_tree;

    #[test]
    fn examples() {
        let p = c4h_diametral_pair(&fixtures::path(5)).unwrap();
        assert_eq!((p.x.min(p.y), p.x.max(p.y), p.d), (0, 4, 4));
        assert_eq!(p.branch, DiamBranch::Even);
        let k = c4h_diametral_pair(&fixtures::king(3, 3)).unwrap();
        assert_eq!(k.d, 2);
        assert_eq!(bfs_from(&fixtures::king(3, 3), k.x).get(k.y), 2);
        assert_eq!(c4h_diametral_pair(&fixtures::complete(4)).unwrap().d, 1);
        assert_eq!(c4h_diametral_pair(&fixtures::star(4)).unwrap().d, 2);
    }

    #[test]
    fn trees_match_brute_force() {
        for seed in 0..200 {
            let g = random_tree(1 + (seed as usize * 7) % 60, seed);
            let cert = c4h_diametral_pair(&g).unwrap();
            assert_eq!(cert.d, eccentricities_bruteforce(&g).unwrap().diameter, "seed {seed}");
        }
    }
}
