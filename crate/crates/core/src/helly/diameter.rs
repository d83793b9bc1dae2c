use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::helly::params::SampleParams;
use crate::helly::small_ecc::vertices_ecc_at_most;
use crate::metric::{bfs_from, require_connected, EccScratch};
use crate::oracles::helly::{desk_bound, is_helly_ballfamily};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DiamPair {
    pub x: Vertex,
    pub y: Vertex,
    pub d: u32,
}

/// Landmark-based eccentricity estimates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EstimatedEcc {
    /// `ē(v) = min { dist(u, v) + e(u) : u ∈ U, dist(u, v) <= k }`, or 0 when
    /// no landmark is that close. Whenever positive, `ē(v) >= e(v)`.
    pub ebar: Vec<u32>,
    pub landmarks: Vec<Vertex>,
    pub landmark_ecc: Vec<u32>,
}

impl EstimatedEcc {
    pub fn compute(g: &Graph, k: u32, params: &SampleParams, stream: u64) -> EstimatedEcc {
        let n = g.n();
        let p = params.c * (n as f64).ln() / k.max(1) as f64;
        let mut rng = params.rng(stream);
        let landmarks: Vec<Vertex> = g.vertices().filter(|_| p >= 1.0 || rng.gen_bool(p)).collect();
        let mut ebar = vec![u32::MAX; n];
        let mut landmark_ecc = Vec::with_capacity(landmarks.len());
        let mut scratch = EccScratch::new(n);
        for &u in &landmarks {
            let (e, _, _) = scratch.run(g, u);
            landmark_ecc.push(e);
            for (est, &d) in ebar.iter_mut().zip(scratch.dist()) {
                if d <= k {
                    *est = (*est).min(d + e);
                }
            }
        }
        for est in &mut ebar {
            if *est == u32::MAX {
                *est = 0;
            }
        }
        EstimatedEcc { ebar, landmarks, landmark_ecc }
    }
}

/// Diametral pair for Helly graphs with `rad(G) > 3k`. The vertex maximizing
/// `ē` is checked by one BFS; a mismatch between its estimate and its
/// eccentricity is reported as `PreconditionUnmet` rather than returned.
pub fn giant_diameter_pair(g: &Graph, k: u32, params: &SampleParams) -> Result<DiamPair> {
    params.validate()?;
    require_connected(g)?;
    giant_trial(g, k, params, 0)
}

fn giant_trial(g: &Graph, k: u32, params: &SampleParams, stream: u64) -> Result<DiamPair> {
    let est = EstimatedEcc::compute(g, k, params, stream);
    let x = (0..g.n()).max_by_key(|&v| (est.ebar[v], std::cmp::Reverse(v))).unwrap();
    if est.ebar[x] == 0 {
        return Err(Error::PreconditionUnmet("no landmark within k of any vertex".into()));
    }
    let d = bfs_from(g, x);
    let e = d.max();
    if e != est.ebar[x] {
        return Err(Error::PreconditionUnmet(format!("estimate {} at {x} but e({x}) = {e}", est.ebar[x])));
    }
    let y = d.last();
    Ok(DiamPair { x, y, d: e })
}

/// Diametral pair of a Helly graph, `Õ(m√n)` w.h.p.
///
/// With `k = 6⌈√n⌉`: if every eccentricity is at most `k`, the diameter is
/// the least `d` with `B_d = V` (exact); otherwise the radius exceeds
/// `3⌈√n⌉` and independent landmark trials are run, keeping the farthest
/// verified pair.
pub fn helly_diametral_pair(g: &Graph, params: &SampleParams) -> Result<DiamPair> {
    params.validate()?;
    require_connected(g)?;
    if params.verify_class && !is_helly_ballfamily(g, desk_bound())?.member {
        return Err(Error::NotHellyDetected);
    }
    let n = g.n();
    if n == 1 {
        return Ok(DiamPair { x: 0, y: 0, d: 0 });
    }
    let root = (n as f64).sqrt().ceil() as u32;
    let k = 6 * root;
    if vertices_ecc_at_most(g, k)?.len() == n {
        let (mut lo, mut hi) = (1, k);
        while lo < hi {
            let mid = lo + (hi - lo) / 2;
            if vertices_ecc_at_most(g, mid)?.len() == n {
                hi = mid;
            } else {
                lo = mid + 1;
            }
        }
        let below = vertices_ecc_at_most(g, hi - 1)?;
        let x = g.vertices().find(|&v| !below.contains(v)).expect("some vertex has eccentricity d");
        let y = bfs_from(g, x).last();
        return Ok(DiamPair { x, y, d: hi });
    }
    let mut best: Option<DiamPair> = None;
    let mut last_err = None;
    for trial in 0..params.repeats_for(n) {
        match giant_trial(g, root, params, trial as u64) {
            Ok(pair) if best.is_none_or(|b| pair.d > b.d) => best = Some(pair),
            Ok(_) => {}
            Err(e) => last_err = Some(e),
        }
    }
    best.ok_or_else(|| last_err.unwrap())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::metric::eccentricities_bruteforce;

    #[test]
    fn small_examples() {
        let params = SampleParams::with_seed(1);
        assert_eq!(helly_diametral_pair(&fixtures::path(5), &params).unwrap(), DiamPair { x: 0, y: 4, d: 4 });
        assert_eq!(helly_diametral_pair(&fixtures::complete(4), &params).unwrap().d, 1);
        let k = helly_diametral_pair(&fixtures::king(3, 3), &params).unwrap();
        assert_eq!(k.d, 2);
        assert_eq!((k.x, k.y), (0, 8));
    }

    #[test]
    fn giant_path() {
        let g = fixtures::path(100);
        let mut hits = 0;
        for seed in 0..200 {
            match giant_diameter_pair(&g, 8, &SampleParams::with_seed(seed)) {
                Ok(p) => {
                    assert!(p.d <= 99);
                    if p.d == 99 {
                        hits += 1;
                    }
                }
                Err(Error::PreconditionUnmet(_)) => {}
                Err(e) => panic!("{e}"),
            }
        }
        assert!(hits >= 198, "{hits}");
    }

    #[test]
    fn estimate_is_an_upper_bound_where_defined() {
        let g = fixtures::king(40, 3);
        let truth = eccentricities_bruteforce(&g).unwrap().ecc;
        let est = EstimatedEcc::compute(&g, 4, &SampleParams::with_seed(5), 0);
        for v in g.vertices() {
            assert!(est.ebar[v] == 0 || est.ebar[v] >= truth[v]);
        }
    }

    #[test]
    fn long_paths_take_the_giant_branch() {
        let g = fixtures::path(400);
        for seed in 0..5 {
            let p = helly_diametral_pair(&g, &SampleParams::with_seed(seed)).unwrap();
            assert_eq!(p.d, 399);
        }
    }
}
