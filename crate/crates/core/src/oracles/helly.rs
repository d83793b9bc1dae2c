//! Desk-scale Helly oracle on the ball hypergraph.
//!
//! A hypergraph is Helly iff for every triple of elements the hyperedges
//! containing at least two of them have a common element. For balls, the
//! balls centered at `v` containing two of `{x, y, z}` are nested, so the
//! triple condition reduces to intersecting one ball per center: the one
//! whose radius is the median of `d(v,x), d(v,y), d(v,z)`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::metric::{distance_matrix, UNREACHABLE};
use crate::oracles::recognize::{ClassCertificate, ClassLabel, Witness};

pub const DEFAULT_DESK_BOUND: usize = 512;

/// Size cap for the cubic oracles; `GHM_DESK_BOUND` overrides the default.
pub fn desk_bound() -> usize {
    std::env::var("GHM_DESK_BOUND").ok().and_then(|s| s.trim().parse().ok()).unwrap_or(DEFAULT_DESK_BOUND)
}

/// A family of balls `N^radius[center]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BallFamily {
    pub balls: Vec<(Vertex, u32)>,
}

impl BallFamily {
    /// Pairwise intersecting with an empty common intersection.
    pub fn is_violation(&self, g: &Graph) -> bool {
        let d = distance_matrix(g);
        let within = |w: Vertex, &(c, r): &(Vertex, u32)| d[c][w] != UNREACHABLE && d[c][w] <= r;
        let pairwise = self
            .balls
            .iter()
            .enumerate()
            .all(|(i, a)| self.balls[i + 1..].iter().all(|b| g.vertices().any(|w| within(w, a) && within(w, b))));
        let common = g.vertices().any(|w| self.balls.iter().all(|b| within(w, b)));
        pairwise && !common
    }
}

struct BallBits {
    words: usize,
    /// `bits[v][r]` is `N^r[v]` for `r <= ecc(v)` within v's component.
    bits: Vec<Vec<Vec<u64>>>,
}

impl BallBits {
    fn new(dist: &[Vec<u32>]) -> Self {
        let n = dist.len();
        let words = n.div_ceil(64);
        let bits = (0..n)
            .map(|v| {
                let e = dist[v].iter().copied().filter(|&d| d != UNREACHABLE).max().unwrap_or(0);
                let mut layers = vec![vec![0u64; words]; e as usize + 1];
                for (w, &d) in dist[v].iter().enumerate() {
                    if d != UNREACHABLE {
                        for layer in &mut layers[d as usize..] {
                            layer[w / 64] |= 1 << (w % 64);
                        }
                    }
                }
                layers
            })
            .collect();
        BallBits { words, bits }
    }

    fn ball(&self, v: Vertex, r: u32) -> &[u64] {
        let layers = &self.bits[v];
        &layers[(r as usize).min(layers.len() - 1)]
    }
}

fn median3(a: u32, b: u32, c: u32) -> u32 {
    a.max(b).min(a.min(b).max(c))
}

/// Triple-based Helly test. Errors with `TooLarge` above `bound`.
pub fn is_helly_ballfamily(g: &Graph, bound: usize) -> Result<ClassCertificate> {
    if g.n() > bound {
        return Err(Error::TooLarge { n: g.n(), bound });
    }
    Ok(match triple_violation(g) {
        None => ClassCertificate { class: ClassLabel::HellyBallFamily, member: true, witness: Witness::Empty },
        Some(family) => {
            ClassCertificate { class: ClassLabel::HellyBallFamily, member: false, witness: Witness::Balls { family } }
        }
    })
}

/// Convenience wrapper using [`desk_bound`].
pub fn is_helly(g: &Graph) -> Result<bool> {
    is_helly_ballfamily(g, desk_bound()).map(|c| c.member)
}

#[allow(clippy::needless_range_loop)]
fn triple_violation(g: &Graph) -> Option<BallFamily> {
    let n = g.n();
    let dist = distance_matrix(g);
    let bits = BallBits::new(&dist);
    let mut acc = vec![0u64; bits.words];
    let mut radius = vec![UNREACHABLE; n];
    // last common vertex found; often also serves the next triple
    let mut hint: Vertex = 0;
    for x in 0..n {
        for y in x + 1..n {
            for z in y + 1..n {
                for v in 0..n {
                    radius[v] = median3(dist[v][x], dist[v][y], dist[v][z]);
                }
                if (0..n).all(|v| radius[v] == UNREACHABLE || dist[v][hint] <= radius[v]) {
                    continue;
                }
                acc.iter_mut().for_each(|w| *w = !0);
                let mut empty = false;
                for v in 0..n {
                    if radius[v] == UNREACHABLE {
                        continue;
                    }
                    let b = bits.ball(v, radius[v]);
                    let mut any = 0;
                    for (a, &bw) in acc.iter_mut().zip(b) {
                        *a &= bw;
                        any |= *a;
                    }
                    if any == 0 {
                        empty = true;
                        break;
                    }
                }
                if empty {
                    let balls = (0..n).filter(|&v| radius[v] != UNREACHABLE).map(|v| (v, radius[v])).collect();
                    return Some(minimize(&bits, balls));
                }
                let w = acc.iter().position(|&a| a != 0).unwrap();
                hint = w * 64 + acc[w].trailing_zeros() as usize;
            }
        }
    }
    None
}

/// Drops balls while the common intersection stays empty.
fn minimize(bits: &BallBits, mut balls: Vec<(Vertex, u32)>) -> BallFamily {
    let empty_without = |balls: &[(Vertex, u32)], skip: usize| {
        let mut acc = vec![!0u64; bits.words];
        for (i, &(v, r)) in balls.iter().enumerate() {
            if i != skip {
                for (a, &bw) in acc.iter_mut().zip(bits.ball(v, r)) {
                    *a &= bw;
                }
            }
        }
        acc.iter().all(|&a| a == 0)
    };
    let mut i = 0;
    while i < balls.len() {
        if balls.len() > 1 && empty_without(&balls, i) {
            balls.remove(i);
        } else {
            i += 1;
        }
    }
    BallFamily { balls }
}

/// Exhaustive search for a pairwise intersecting ball family with empty
/// intersection. Exponential; intended for `n <= 8`.
///
/// Only minimal violating families are explored: listing a minimal
/// family in index order, every ball strictly shrinks the running
/// intersection, otherwise it could be dropped.
#[allow(clippy::needless_range_loop)]
pub fn exhaustive_violation(g: &Graph) -> Option<BallFamily> {
    let n = g.n();
    assert!(n <= 16, "exhaustive Helly search is for tiny graphs");
    let dist = distance_matrix(g);
    let mut balls: Vec<(u32, (Vertex, u32))> = Vec::new();
    for v in 0..n {
        let e = dist[v].iter().copied().filter(|&d| d != UNREACHABLE).max().unwrap_or(0);
        for r in 0..=e {
            let mask = (0..n).filter(|&w| dist[v][w] <= r).fold(0u32, |m, w| m | 1 << w);
            if !balls.iter().any(|&(b, _)| b == mask) {
                balls.push((mask, (v, r)));
            }
        }
    }
    let full = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let mut chosen = Vec::new();
    search(&balls, 0, full, &mut chosen).then(|| BallFamily { balls: chosen.iter().map(|&i| balls[i].1).collect() })
}

fn search(balls: &[(u32, (Vertex, u32))], from: usize, current: u32, chosen: &mut Vec<usize>) -> bool {
    for i in from..balls.len() {
        let mask = balls[i].0;
        if chosen.iter().any(|&j| balls[j].0 & mask == 0) {
            continue;
        }
        let next = current & mask;
        if next == current {
            continue;
        }
        chosen.push(i);
        if next == 0 || search(balls, i + 1, next, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}
