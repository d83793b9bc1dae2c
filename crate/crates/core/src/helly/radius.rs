use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::helly::params::SampleParams;
use crate::metric::{bfs_from, require_connected, EccScratch};
use crate::oracles::helly::{desk_bound, is_helly_ballfamily};
use crate::vertex_set::VertexSet;

/// Farthest-landmark distances for a random landmark set `U(p)`.
///
/// `reach[v] = max { dist(u, v) : u ∈ U }`, so `v` passes the dominator
/// test for radius `r` exactly when `reach[v] <= r`. One landmark set
/// answers every `r`.
#[derive(Clone, Debug)]
pub struct Landmarks {
    pub reach: Vec<u32>,
    pub sampled: usize,
    /// `p >= 1`: every vertex is a landmark and `reach` is the eccentricity.
    pub exact: bool,
}

impl Landmarks {
    pub fn sample(g: &Graph, eps: f64, params: &SampleParams, stream: u64) -> Landmarks {
        let n = g.n();
        let p = params.c * (n as f64).ln() / (eps * n as f64);
        let mut scratch = EccScratch::new(n);
        let mut reach = vec![0u32; n];
        let exact = p >= 1.0;
        let mut sampled = 0;
        if exact {
            for v in g.vertices() {
                reach[v] = scratch.run(g, v).0;
            }
            sampled = n;
        } else {
            let mut rng = params.rng(stream);
            for u in g.vertices() {
                if rng.gen_bool(p) {
                    sampled += 1;
                    scratch.run(g, u);
                    for (r, &d) in reach.iter_mut().zip(scratch.dist()) {
                        *r = (*r).max(d);
                    }
                }
            }
        }
        Landmarks { reach, sampled, exact }
    }

    pub fn candidates(&self, r: u32) -> VertexSet {
        VertexSet::from_iter(self.reach.len(), (0..self.reach.len()).filter(|&v| self.reach[v] <= r))
    }
}

fn default_eps(n: usize) -> f64 {
    1.0 / (n as f64).sqrt()
}

/// `D⟨G; r; ε⟩`: vertices whose `r`-ball contains every sampled landmark.
/// Holds every vertex of eccentricity at most `r`; w.h.p. every member's
/// `r`-ball covers at least `(1 - ε) n` vertices.
pub fn dominator_candidates(g: &Graph, r: u32, params: &SampleParams) -> Result<VertexSet> {
    params.validate()?;
    if r == 0 {
        return Err(Error::BadParams("r must be positive".into()));
    }
    require_connected(g)?;
    let eps = params.eps.unwrap_or_else(|| default_eps(g.n()));
    Ok(Landmarks::sample(g, eps, params, 0).candidates(r))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum Acceptance {
    /// `diam(G) <= 2r`: every vertex outside `N^r[center]` was checked by BFS.
    Accept { center: Vertex, checked: usize },
    /// `rad(G) > r` w.h.p.
    Reject,
}

impl Acceptance {
    pub fn accepted(&self) -> bool {
        matches!(self, Acceptance::Accept { .. })
    }
}

pub fn accept_radius(g: &Graph, r: u32, params: &SampleParams) -> Result<Acceptance> {
    params.validate()?;
    if r == 0 {
        return Err(Error::BadParams("r must be positive".into()));
    }
    require_connected(g)?;
    let lm = Landmarks::sample(g, default_eps(g.n()), params, 0);
    Ok(accept_with(g, r, &lm, &mut EccScratch::new(g.n())))
}

fn accept_with(g: &Graph, r: u32, lm: &Landmarks, scratch: &mut EccScratch) -> Acceptance {
    let Some(center) = (0..g.n()).find(|&v| lm.reach[v] <= r) else {
        return Acceptance::Reject;
    };
    let around = bfs_from(g, center);
    let mut checked = 0;
    for v in g.vertices().filter(|&v| around.get(v) > r) {
        checked += 1;
        if scratch.run(g, v).0 > 2 * r {
            return Acceptance::Reject;
        }
    }
    Acceptance::Accept { center, checked }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RadiusEstimate {
    pub radius: u32,
    pub diam_upper: u32,
    /// The accepted center; its `radius`-ball misses at most an `ε`
    /// fraction of the graph w.h.p.
    pub center: Vertex,
    pub landmarks: usize,
}

/// Smallest accepted `r` in `[1, n - 1]`; equals `rad(G)` w.h.p. on Helly
/// graphs, with `diam(G) ∈ {2r - 1, 2r}`.
pub fn helly_radius(g: &Graph, params: &SampleParams) -> Result<RadiusEstimate> {
    params.validate()?;
    require_connected(g)?;
    let n = g.n();
    if params.verify_class && !is_helly_ballfamily(g, desk_bound())?.member {
        return Err(Error::NotHellyDetected);
    }
    if n <= 1 {
        return Ok(RadiusEstimate { radius: 0, diam_upper: 0, center: 0, landmarks: 0 });
    }
    let lm = Landmarks::sample(g, params.eps.unwrap_or_else(|| default_eps(n)), params, 0);
    let mut scratch = EccScratch::new(n);
    let (mut lo, mut hi) = (1u32, (n - 1) as u32);
    let mut best = match accept_with(g, hi, &lm, &mut scratch) {
        Acceptance::Accept { center, .. } => center,
        Acceptance::Reject => unreachable!("every ball of radius n - 1 is the whole graph"),
    };
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        match accept_with(g, mid, &lm, &mut scratch) {
            Acceptance::Accept { center, .. } => {
                hi = mid;
                best = center;
            }
            Acceptance::Reject => lo = mid + 1,
        }
    }
    Ok(RadiusEstimate { radius: hi, diam_upper: 2 * hi, center: best, landmarks: lm.sampled })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn candidates_on_path() {
        let p5 = fixtures::path(5);
        let params = SampleParams::with_seed(1);
        assert_eq!(dominator_candidates(&p5, 4, &params).unwrap().len(), 5);
        assert!(dominator_candidates(&p5, 1, &params).unwrap().is_empty());
        assert_eq!(dominator_candidates(&p5, 2, &params).unwrap().to_sorted_vec(), vec![2]);
    }

    #[test]
    fn accept_examples() {
        let params = SampleParams::with_seed(3);
        let p5 = fixtures::path(5);
        assert!(accept_radius(&p5, 2, &params).unwrap().accepted());
        assert_eq!(accept_radius(&p5, 1, &params).unwrap(), Acceptance::Reject);
        assert!(accept_radius(&fixtures::complete(4), 1, &params).unwrap().accepted());
    }

    #[test]
    fn radius_examples() {
        let params = SampleParams::with_seed(7);
        let r = |g: &Graph| {
            let e = helly_radius(g, &params).unwrap();
            (e.radius, e.diam_upper)
        };
        assert_eq!(r(&fixtures::path(5)), (2, 4));
        assert_eq!(r(&fixtures::star(4)), (1, 2));
        assert_eq!(r(&fixtures::king(3, 3)), (1, 2));
    }

    #[test]
    fn sampled_regime_on_long_path() {
        // n large enough that p < 1
        let g = fixtures::path(2001);
        for seed in 0..5 {
            let e = helly_radius(&g, &SampleParams::with_seed(seed)).unwrap();
            assert_eq!(e.radius, 1000);
            assert!(e.landmarks < 2001);
        }
    }

    #[test]
    fn verify_flag_rejects_sun() {
        let params = SampleParams { verify_class: true, ..SampleParams::with_seed(1) };
        assert_eq!(helly_radius(&fixtures::sun3(), &params), Err(Error::NotHellyDetected));
        assert!(helly_radius(&Graph::from_edges(3, &[(0, 1)]).unwrap(), &params).is_err());
    }
}
