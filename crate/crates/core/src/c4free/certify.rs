use serde::Serialize;

use crate::error::{violation, Error, Result};
use crate::graph::{Graph, Vertex};
use crate::metric::{bfs_from, eccentricities_bruteforce, require_connected};
use crate::oracles::helly::desk_bound;
use crate::oracles::{is_chordal, lexbfs};

use super::center::c4h_central_vertex;
use super::diameter::c4h_diametral_pair;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum ChordalDiameter {
    /// `diam(G) = d`, realized by `(x, y)`.
    CertifiedDiam {
        d: u32,
        x: Vertex,
        y: Vertex,
        lexbfs_last: Vertex,
        e_last: u32,
        /// Radius bound used for the even case.
        radius: Option<u32>,
        /// The radius came from the brute-force fallback.
        radius_bruteforce: bool,
    },
    /// Some consequence of the Helly property fails on `G`.
    NotHelly { reason: String },
}

impl ChordalDiameter {
    pub fn diameter(&self) -> Option<u32> {
        match self {
            ChordalDiameter::CertifiedDiam { d, .. } => Some(*d),
            ChordalDiameter::NotHelly { .. } => None,
        }
    }
}

/// Either certifies `diam(G)` of a chordal graph with a realizing pair, or
/// shows that `G` is not Helly.
///
/// A LexBFS end vertex `u` has `e(u) >= diam - 1`, with equality to the
/// diameter when `e(u)` is odd. Otherwise the linear-time C4-free Helly pair
/// `(x, y)` is checked: `dist(x, y) = e(u) + 1` settles it, and
/// `dist(x, y) = e(u)` needs `rad(G) <= e(u) / 2`.
pub fn chordal_diameter_certify(g: &Graph) -> Result<ChordalDiameter> {
    if !is_chordal(g).member {
        return Err(Error::NotChordal);
    }
    require_connected(g)?;
    let u = lexbfs(g, 0)?.last;
    let row = bfs_from(g, u);
    let eu = row.max();
    let certified = |d: u32, x: Vertex, y: Vertex, radius, radius_bruteforce| {
        Ok(ChordalDiameter::CertifiedDiam {
            d,
            x: x.min(y),
            y: x.max(y),
            lexbfs_last: u,
            e_last: eu,
            radius,
            radius_bruteforce,
        })
    };
    if eu % 2 == 1 || g.n() == 1 {
        return certified(eu, u, row.last(), None, false);
    }
    let cert = match c4h_diametral_pair(g) {
        Ok(c) => c,
        Err(Error::ClassViolation(reason)) => return Ok(ChordalDiameter::NotHelly { reason }),
        Err(e) => return Err(e),
    };
    let (x, y, d) = (cert.x, cert.y, cert.d);
    if d > eu + 1 {
        return Err(violation(format!("dist({x}, {y}) = {d} exceeds e({u}) + 1 on a chordal graph")));
    }
    if d < eu {
        return Ok(ChordalDiameter::NotHelly { reason: format!("pair at distance {d} below e({u}) = {eu}") });
    }
    if d == eu + 1 {
        return certified(d, x, y, None, false);
    }
    let radius = match c4h_central_vertex(g) {
        Ok((_, r)) if 2 * r <= d => return certified(d, x, y, Some(r), false),
        Ok((_, r)) => Some(r),
        Err(Error::ClassViolation(_)) => None,
        Err(e) => return Err(e),
    };
    if g.n() <= desk_bound() {
        let rad = eccentricities_bruteforce(g)?.radius;
        if 2 * rad <= d {
            return certified(d, x, y, Some(rad), true);
        }
        return Ok(ChordalDiameter::NotHelly { reason: format!("rad(G) = {rad} exceeds d / 2 with d = e({u}) = {d}") });
    }
    Ok(ChordalDiameter::NotHelly {
        reason: match radius {
            Some(r) => format!("radius bound {r} exceeds d / 2 with d = e({u}) = {d}"),
            None => "no central vertex found".into(),
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn examples() {
        let p = chordal_diameter_certify(&fixtures::path(5)).unwrap();
        assert!(matches!(p, ChordalDiameter::CertifiedDiam { d: 4, x: 0, y: 4, .. }), "{p:?}");
        match chordal_diameter_certify(&fixtures::sun3()).unwrap() {
            ChordalDiameter::CertifiedDiam { d, .. } => assert_eq!(d, 2),
            ChordalDiameter::NotHelly { .. } => {}
        }
        assert_eq!(chordal_diameter_certify(&fixtures::cycle(4)), Err(Error::NotChordal));
    }
}
