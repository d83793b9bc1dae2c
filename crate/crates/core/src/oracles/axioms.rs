//! Exhaustive checks of the metric consequences the algorithms rely on.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::metric::{distance_matrix, require_connected};
use crate::oracles::helly::is_helly_ballfamily;
use crate::oracles::recognize::is_c4_free;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum AxiomClass {
    Helly,
    C4FreeHelly,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub class: AxiomClass,
    /// Names of the checks that ran and passed, in order.
    pub passed: Vec<&'static str>,
    /// First failed check with a description of the offending tuple.
    pub violation: Option<(&'static str, String)>,
}

impl AxiomReport {
    pub fn holds(&self) -> bool {
        self.violation.is_none()
    }
}

type Check<'a> = (&'static str, Box<dyn Fn() -> Option<String> + 'a>);

/// Runs every applicable check, stopping at the first failure. The class
/// certificate itself is the first check.
pub fn verify_class_axioms(g: &Graph, class: AxiomClass, bound: usize) -> Result<AxiomReport> {
    if g.n() > bound {
        return Err(Error::TooLarge { n: g.n(), bound });
    }
    require_connected(g)?;
    let mut report = AxiomReport { class, passed: Vec::new(), violation: None };
    let d = distance_matrix(g);
    let n = g.n();
    let ecc: Vec<u32> = d.iter().map(|row| *row.iter().max().unwrap()).collect();
    let rad = *ecc.iter().min().unwrap();
    let diam = *ecc.iter().max().unwrap();

    let mut checks: Vec<Check<'_>> = vec![(
        "certificate",
        Box::new(|| {
            let cert = is_helly_ballfamily(g, bound).expect("size checked");
            if !cert.member {
                return Some(format!("not Helly: {:?}", cert.witness));
            }
            if class == AxiomClass::C4FreeHelly {
                let c4 = is_c4_free(g);
                if !c4.member {
                    return Some(format!("induced C4: {:?}", c4.witness));
                }
            }
            None
        }),
    )];
    checks.push((
        "unimodality",
        Box::new(|| {
            if rad != diam.div_ceil(2) {
                return Some(format!("rad = {rad}, diam = {diam}"));
            }
            // every local minimum of the eccentricity is global
            g.vertices()
                .find(|&v| ecc[v] > rad && g.neighbors(v).iter().all(|&w| ecc[w] >= ecc[v]))
                .map(|v| format!("local minimum at {v} with e = {}", ecc[v]))
        }),
    ));
    checks.push((
        "ecc-formula",
        Box::new(|| {
            let center: Vec<_> = g.vertices().filter(|&v| ecc[v] == rad).collect();
            g.vertices().find_map(|v| {
                let to_center = center.iter().map(|&c| d[v][c]).min().unwrap();
                (ecc[v] != to_center + rad).then(|| format!("e({v}) = {} but dist(v, C) = {to_center}", ecc[v]))
            })
        }),
    ));
    if class == AxiomClass::C4FreeHelly {
        checks.push((
            "ball-convexity",
            Box::new(|| {
                // I(x,y) within N^r[v] whenever x, y are: d(v,w) <= max(d(v,x), d(v,y))
                for x in 0..n {
                    for y in x + 1..n {
                        for w in (0..n).filter(|&w| d[x][w] + d[w][y] == d[x][y]) {
                            if let Some(v) = (0..n).find(|&v| d[v][w] > d[v][x].max(d[v][y])) {
                                return Some(format!("w = {w} on a {x}-{y} geodesic leaves the ball around {v}"));
                            }
                        }
                    }
                }
                None
            }),
        ));
        checks.push((
            "slice-clique",
            Box::new(|| {
                for u in 0..n {
                    for v in 0..n {
                        let on: Vec<_> = (0..n).filter(|&w| d[u][w] + d[w][v] == d[u][v]).collect();
                        for (i, &a) in on.iter().enumerate() {
                            for &b in &on[i + 1..] {
                                if d[u][a] == d[u][b] && !g.has_edge(a, b) {
                                    return Some(format!("L({u}, {}, {v}) holds nonadjacent {a}, {b}", d[u][a]));
                                }
                            }
                        }
                    }
                }
                None
            }),
        ));
    }
    for (name, check) in checks {
        if let Some(msg) = check() {
            report.violation = Some((name, msg));
            break;
        }
        report.passed.push(name);
    }
    Ok(report)
}
