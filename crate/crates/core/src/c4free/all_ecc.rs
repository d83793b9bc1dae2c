use crate::error::{violation, Result};
use crate::gates::compute_gates;
use crate::graph::{Graph, Vertex};
use crate::helly::small_eccentricities;
use crate::helly::vertices_ecc_at_most;
use crate::metric::{bfs_from, bfs_unchecked, require_connected, slice_from_rows};

use super::center::{assert_clique, centers_in_clique, central_from_sweep};
use super::diameter::c4h_diametral_pair;
use super::sweep::Sweep;

/// Every eccentricity of a C4-free Helly graph in linear time, as
/// `e(v) = dist(v, C(G)) + rad(G)`.
pub fn c4h_all_eccentricities(g: &Graph) -> Result<Vec<u32>> {
    require_connected(g)?;
    let (_, center) = c4h_center_set(g)?;
    let d = bfs_unchecked(g, &center.1);
    Ok(d.as_slice().iter().map(|&x| x + center.0).collect())
}

/// `(diametral pair, (rad, C(G)))`.
#[allow(clippy::type_complexity)]
fn c4h_center_set(g: &Graph) -> Result<((Vertex, Vertex), (u32, Vec<Vertex>))> {
    let n = g.n();
    if n == 1 {
        return Ok(((0, 0), (0, vec![0])));
    }
    let (c, r) = central_from_sweep(g, &Sweep::run(g, 0))?;
    let cert = c4h_diametral_pair(g)?;
    let (x, y, d) = (cert.x, cert.y, cert.d);
    if r <= 2 {
        let central = vertices_ecc_at_most(g, r)?.to_sorted_vec();
        if !central.contains(&c) {
            return Err(violation(format!("center {c} missing from the eccentricity-{r} sweep")));
        }
        return Ok(((x, y), (r, central)));
    }
    let row_x = bfs_from(g, x);
    let row_y = bfs_from(g, y);
    if d == 2 * r {
        let slice = slice_from_rows(&row_x, &row_y, r, y)?;
        assert_clique(g, &slice, "L(x, r, y)")?;
        return Ok(((x, y), (r, centers_in_clique(g, &slice, r)?)));
    }
    if d != 2 * r - 1 {
        return Err(violation(format!("diameter {d} incompatible with radius {r}")));
    }
    let lx = slice_from_rows(&row_x, &row_y, r - 1, y)?;
    let ly = slice_from_rows(&row_y, &row_x, r - 1, x)?;
    assert_clique(g, &lx, "L(x, r - 1, y)")?;
    assert_clique(g, &ly, "L(y, r - 1, x)")?;
    let mut central = centers_in_clique(g, &lx, r)?;
    let cy = centers_in_clique(g, &ly, r)?;
    if central.is_empty() || cy.is_empty() {
        return Err(violation("a middle slice of the diametral path holds no central vertex"));
    }
    central.extend(cy);

    let z: Vec<Vertex> = (0..n).filter(|&v| row_x.get(v) == r && row_y.get(v) == r).collect();
    if !z.is_empty() {
        let in_lx = member_mask(n, &lx);
        let in_ly = member_mask(n, &ly);
        for &v in &z {
            if !has_bridging_edge(g, v, &in_lx, &in_ly) {
                return Err(violation(format!("{v} has no adjacent pair of neighbors across the middle edge")));
            }
        }
        let mid: Vec<Vertex> = lx.iter().chain(&ly).copied().collect();
        let to_mid = bfs_unchecked(g, &mid);
        let gx = compute_gates(g, &lx)?;
        let gy = compute_gates(g, &ly)?;
        let gz = compute_gates(g, &z)?;
        let mut a = Vec::new();
        for w in g.vertices() {
            match to_mid.get(w) {
                dw if dw == r - 1 => {
                    if gx.dist[w] == r - 1 {
                        a.push(gx.gate[w]);
                    }
                    if gy.dist[w] == r - 1 {
                        a.push(gy.gate[w]);
                    }
                }
                dw if dw == r => {
                    if gz.dist[w] != r - 1 {
                        return Err(violation(format!("{w} at distance {} from Z, expected r - 1", gz.dist[w])));
                    }
                    a.push(gz.gate[w]);
                }
                dw if dw > r => return Err(violation(format!("{w} is farther than r from both middle slices"))),
                _ => {}
            }
        }
        a.sort_unstable();
        a.dedup();
        let ok_z: Vec<Vertex> = if a.is_empty() {
            z
        } else {
            let (b2, _) = small_eccentricities(g, &a, 2)?;
            z.into_iter().filter(|&v| b2.contains(v)).collect()
        };
        central.extend(ok_z);
    }
    central.sort_unstable();
    let probe = bfs_from(g, central[0]).max();
    if probe != r {
        return Err(violation(format!("central vertex {} has eccentricity {probe}", central[0])));
    }
    Ok(((x, y), (r, central)))
}

fn member_mask(n: usize, set: &[Vertex]) -> Vec<bool> {
    let mut m = vec![false; n];
    for &v in set {
        m[v] = true;
    }
    m
}

/// `z` sees both ends of an edge between the two middle slices.
fn has_bridging_edge(g: &Graph, z: Vertex, in_lx: &[bool], in_ly: &[bool]) -> bool {
    let near_y: Vec<Vertex> = g.neighbors(z).iter().copied().filter(|&b| in_ly[b]).collect();
    g.neighbors(z).iter().filter(|&&a| in_lx[a]).any(|&a| near_y.iter().any(|&b| g.has_edge(a, b)))
}

/// The set of central vertices `C(G)` with the radius.
pub fn c4h_center(g: &Graph) -> Result<(u32, Vec<Vertex>)> {
    require_connected(g)?;
    c4h_center_set(g).map(|(_, c)| c)
}
