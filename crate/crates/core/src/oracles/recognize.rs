//! Class recognizers with replayable witnesses.

use std::collections::VecDeque;

use serde::Serialize;

use crate::graph::{Graph, Vertex};
use crate::oracles::helly::BallFamily;
use crate::oracles::lexbfs::lexbfs;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClassLabel {
    Chordal,
    Split,
    C4Free,
    HellyBallFamily,
    None,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Witness {
    /// Perfect elimination order.
    Peo {
        order: Vec<Vertex>,
    },
    /// Chordless cycle of length at least four; `None` only if one could
    /// not be extracted for a non-chordal input (not expected).
    ChordlessCycle {
        cycle: Option<Vec<Vertex>>,
        violation: (Vertex, Vertex, Vertex),
    },
    Bipartition {
        clique: Vec<Vertex>,
        stable: Vec<Vertex>,
    },
    /// Induced four-cycle `a - b - c - d - a`.
    InducedC4 {
        cycle: [Vertex; 4],
    },
    /// Pairwise intersecting balls with empty common intersection.
    Balls {
        family: BallFamily,
    },
    /// No structural witness is needed for the verdict.
    Empty,
}

/// Verdict of a recognizer. `member` tells whether `g` is in `class`; the
/// witness certifies membership or non-membership.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassCertificate {
    pub class: ClassLabel,
    pub member: bool,
    pub witness: Witness,
}

impl ClassCertificate {
    /// Replays the witness against `g`.
    pub fn replay(&self, g: &Graph) -> bool {
        match (&self.witness, self.member) {
            (Witness::Peo { order }, true) => is_peo(g, order),
            (Witness::ChordlessCycle { cycle: Some(c), .. }, false) => is_chordless_cycle(g, c),
            (Witness::ChordlessCycle { cycle: None, violation: (v, p, w) }, false) => {
                g.has_edge(*v, *p) && g.has_edge(*v, *w) && !g.has_edge(*p, *w)
            }
            (Witness::Bipartition { clique, stable }, true) => {
                clique.len() + stable.len() == g.n()
                    && g.is_clique(clique).is_none()
                    && stable.iter().enumerate().all(|(i, &a)| stable[i + 1..].iter().all(|&b| !g.has_edge(a, b)))
            }
            (Witness::InducedC4 { cycle }, false) => is_chordless_cycle(g, cycle),
            (Witness::Balls { family }, false) => family.is_violation(g),
            (Witness::Empty, _) => true,
            _ => false,
        }
    }
}

/// Perfect elimination order check: every vertex's later neighbors form a
/// clique. Uses the parent test, `O(m log n)`.
pub fn is_peo(g: &Graph, order: &[Vertex]) -> bool {
    peo_violation(g, order).is_none() && order.len() == g.n()
}

/// Returns `(v, parent, w)` where `w` and `parent` are later neighbors of
/// `v` that are not adjacent.
fn peo_violation(g: &Graph, order: &[Vertex]) -> Option<(Vertex, Vertex, Vertex)> {
    let mut pos = vec![usize::MAX; g.n()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    for &v in order {
        let later = g.neighbors(v).iter().copied().filter(|&w| pos[w] > pos[v]);
        let Some(parent) = later.clone().min_by_key(|&w| pos[w]) else { continue };
        if let Some(w) = later.filter(|&w| w != parent).find(|&w| !g.has_edge(parent, w)) {
            return Some((v, parent, w));
        }
    }
    None
}

pub fn is_chordless_cycle(g: &Graph, cycle: &[Vertex]) -> bool {
    let k = cycle.len();
    if k < 4 {
        return false;
    }
    for i in 0..k {
        for j in i + 1..k {
            let consecutive = j == i + 1 || (i == 0 && j == k - 1);
            if g.has_edge(cycle[i], cycle[j]) != consecutive || cycle[i] == cycle[j] {
                return false;
            }
        }
    }
    true
}

/// Chordality via LexBFS: the reverse of a LexBFS order is a perfect
/// elimination order exactly when the graph is chordal.
pub fn is_chordal(g: &Graph) -> ClassCertificate {
    let mut order = Vec::with_capacity(g.n());
    let mut seen = vec![false; g.n()];
    // one LexBFS per component keeps the recognizer total on any input
    for s in g.vertices() {
        if seen[s] {
            continue;
        }
        let comp = component(g, s);
        let (sub, map) = g.induced(&comp);
        let o = lexbfs(&sub, 0).expect("component is connected");
        for &v in o.order.iter().rev() {
            seen[map[v]] = true;
        }
        order.extend(o.order.iter().rev().map(|&v| map[v]));
    }
    match peo_violation(g, &order) {
        None => ClassCertificate { class: ClassLabel::Chordal, member: true, witness: Witness::Peo { order } },
        Some(violation) => ClassCertificate {
            class: ClassLabel::Chordal,
            member: false,
            witness: Witness::ChordlessCycle { cycle: chordless_cycle(g, violation), violation },
        },
    }
}

fn component(g: &Graph, s: Vertex) -> Vec<Vertex> {
    crate::metric::bfs_from(g, s).visit_order().to_vec()
}

/// Closes the violating path `parent - v - w` into a chordless cycle by a
/// shortest `parent`-`w` path avoiding the rest of `N[v]`.
fn chordless_cycle(g: &Graph, (v, p, w): (Vertex, Vertex, Vertex)) -> Option<Vec<Vertex>> {
    let n = g.n();
    let mut blocked = vec![false; n];
    blocked[v] = true;
    for &x in g.neighbors(v) {
        blocked[x] = x != p && x != w;
    }
    let mut prev = vec![usize::MAX; n];
    let mut queue = VecDeque::from([p]);
    prev[p] = p;
    while let Some(x) = queue.pop_front() {
        if x == w {
            break;
        }
        for &y in g.neighbors(x) {
            if !blocked[y] && prev[y] == usize::MAX {
                prev[y] = x;
                queue.push_back(y);
            }
        }
    }
    if prev[w] == usize::MAX {
        return None;
    }
    let mut cycle = vec![v];
    let mut x = w;
    while x != p {
        cycle.push(x);
        x = prev[x];
    }
    cycle.push(p);
    is_chordless_cycle(g, &cycle).then_some(cycle)
}

/// Induced-C4 test: a C4 exists iff some nonadjacent pair has two
/// nonadjacent common neighbors.
pub fn is_c4_free(g: &Graph) -> ClassCertificate {
    let n = g.n();
    let mut common: Vec<Vec<Vertex>> = vec![Vec::new(); n];
    let mut touched = Vec::new();
    for u in g.vertices() {
        for &x in g.neighbors(u) {
            for &v in g.neighbors(x) {
                if v > u && !g.has_edge(u, v) {
                    if common[v].is_empty() {
                        touched.push(v);
                    }
                    common[v].push(x);
                }
            }
        }
        for &v in &touched {
            let c = &common[v];
            for (i, &a) in c.iter().enumerate() {
                if let Some(&b) = c[i + 1..].iter().find(|&&b| !g.has_edge(a, b)) {
                    return ClassCertificate {
                        class: ClassLabel::C4Free,
                        member: false,
                        witness: Witness::InducedC4 { cycle: [u, a, v, b] },
                    };
                }
            }
        }
        for v in touched.drain(..) {
            common[v].clear();
        }
    }
    ClassCertificate { class: ClassLabel::C4Free, member: true, witness: Witness::Empty }
}

/// Split recognition by the degree-sequence criterion. Ties in degree are
/// broken by lower id.
pub fn is_split(g: &Graph) -> ClassCertificate {
    let mut by_degree: Vec<Vertex> = g.vertices().collect();
    by_degree.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let deg = |i: usize| g.degree(by_degree[i]);
    let k = (0..g.n()).take_while(|&i| deg(i) >= i).count();
    let lhs: usize = (0..k).map(deg).sum();
    let rhs: usize = k * k.saturating_sub(1) + (k..g.n()).map(deg).sum::<usize>();
    let member = lhs == rhs;
    let witness = if member {
        let mut clique = by_degree[..k].to_vec();
        let mut stable = by_degree[k..].to_vec();
        clique.sort_unstable();
        stable.sort_unstable();
        Witness::Bipartition { clique, stable }
    } else {
        Witness::Empty
    };
    ClassCertificate { class: ClassLabel::Split, member, witness }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn chordal_examples() {
        let c = is_chordal(&fixtures::cycle(4));
        assert!(!c.member);
        assert!(c.replay(&fixtures::cycle(4)));
        match &c.witness {
            Witness::ChordlessCycle { cycle: Some(cy), .. } => assert_eq!(cy.len(), 4),
            w => panic!("unexpected witness {w:?}"),
        }
        for g in [fixtures::sun3(), fixtures::path(5), fixtures::complete(4)] {
            let c = is_chordal(&g);
            assert!(c.member);
            assert!(c.replay(&g));
        }
        let c6 = fixtures::cycle(6);
        let c = is_chordal(&c6);
        assert!(!c.member && c.replay(&c6));
    }

    #[test]
    fn c4_examples() {
        let c4 = fixtures::cycle(4);
        let c = is_c4_free(&c4);
        assert!(!c.member && c.replay(&c4));
        assert!(is_c4_free(&fixtures::path(5)).member);
        // the four edge-midpoints of the 3x3 king board induce a C4
        let k = fixtures::king(3, 3);
        let c = is_c4_free(&k);
        assert!(!c.member && c.replay(&k));
    }

    #[test]
    fn split_examples() {
        let h = fixtures::split_h2();
        let c = is_split(&h);
        assert!(c.member && c.replay(&h));
        assert_eq!(c.witness, Witness::Bipartition { clique: vec![0, 1, 2], stable: vec![3, 4] });
        assert!(!is_split(&fixtures::cycle(4)).member);
        let k4 = is_split(&fixtures::complete(4));
        assert!(k4.member);
        assert!(matches!(k4.witness, Witness::Bipartition { ref stable, .. } if stable.is_empty()));
    }
}
