//! Lexicographic breadth-first search by partition refinement.

use serde::Serialize;

use crate::error::Result;
use crate::graph::{Graph, Vertex};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LexBfsOrder {
    pub order: Vec<Vertex>,
    pub last: Vertex,
}

impl LexBfsOrder {
    /// Position of every vertex in the order.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.order.len()];
        for (i, &v) in self.order.iter().enumerate() {
            pos[v] = i;
        }
        pos
    }
}

const NIL: usize = usize::MAX;

/// One class of the ordered partition of unvisited vertices. Members are
/// kept ascending; entries whose vertex has since moved to another class
/// are skipped lazily.
struct Class {
    members: Vec<Vertex>,
    cursor: usize,
    live: usize,
    prev: usize,
    next: usize,
}

/// LexBFS starting at `start`. Among vertices with equal labels the
/// lowest id is visited first.
pub fn lexbfs(g: &Graph, start: Vertex) -> Result<LexBfsOrder> {
    g.check_vertex(start)?;
    crate::metric::require_connected(g)?;
    let n = g.n();
    let mut classes: Vec<Class> = Vec::new();
    let mut class_of = vec![0usize; n];
    let mut visited = vec![false; n];

    // initial partition: {start} followed by everything else
    let rest: Vec<Vertex> = (0..n).filter(|&v| v != start).collect();
    classes.push(Class { members: vec![start], cursor: 0, live: 1, prev: NIL, next: NIL });
    let mut head = 0;
    if !rest.is_empty() {
        let live = rest.len();
        for &v in &rest {
            class_of[v] = 1;
        }
        classes.push(Class { members: rest, cursor: 0, live, prev: 0, next: NIL });
        classes[0].next = 1;
    }

    // scratch: per touched class, the class created in front of it this round
    let mut split_into = vec![NIL; 0];
    let mut order = Vec::with_capacity(n);
    while head != NIL {
        // pop the lowest live member of the first class
        let c = head;
        let v = loop {
            let cls = &mut classes[c];
            let cand = cls.members[cls.cursor];
            cls.cursor += 1;
            if class_of[cand] == c && !visited[cand] {
                break cand;
            }
        };
        visited[v] = true;
        order.push(v);
        classes[c].live -= 1;
        if classes[c].live == 0 {
            unlink(&mut classes, &mut head, c);
        }

        // refine: unvisited neighbors of v move into a new class placed
        // just before their current class
        split_into.resize(classes.len(), NIL);
        let mut touched = Vec::new();
        for &w in g.neighbors(v) {
            if visited[w] {
                continue;
            }
            let old = class_of[w];
            if split_into[old] == NIL {
                let id = classes.len();
                let prev = classes[old].prev;
                classes.push(Class { members: Vec::new(), cursor: 0, live: 0, prev, next: old });
                if prev == NIL {
                    head = id;
                } else {
                    classes[prev].next = id;
                }
                classes[old].prev = id;
                split_into.push(NIL);
                split_into[old] = id;
                touched.push(old);
            }
            let new = split_into[old];
            classes[new].members.push(w);
            classes[new].live += 1;
            classes[old].live -= 1;
            class_of[w] = new;
        }
        for old in touched {
            split_into[old] = NIL;
            if classes[old].live == 0 {
                unlink(&mut classes, &mut head, old);
            }
        }
    }
    let last = *order.last().expect("graph has at least the start vertex");
    Ok(LexBfsOrder { order, last })
}

fn unlink(classes: &mut [Class], head: &mut usize, c: usize) {
    let (prev, next) = (classes[c].prev, classes[c].next);
    if prev == NIL {
        *head = next;
    } else {
        classes[prev].next = next;
    }
    if next != NIL {
        classes[next].prev = prev;
    }
}

/// Checks that `order` is a LexBFS ordering of `g` by replaying labels:
/// at every step the chosen vertex must carry a lexicographically maximal
/// label among unvisited vertices. Quadratic; for tests and oracles.
pub fn is_lexbfs_order(g: &Graph, order: &[Vertex]) -> bool {
    let n = g.n();
    if order.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &v in order {
        if v >= n || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    // label of w = decreasing sequence of (n - i) for visited neighbors at step i
    let mut labels: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut visited = vec![false; n];
    for (i, &v) in order.iter().enumerate() {
        let best = (0..n).filter(|&w| !visited[w]).map(|w| &labels[w]).max().unwrap();
        if labels[v] != *best {
            return false;
        }
        visited[v] = true;
        for &w in g.neighbors(v) {
            if !visited[w] {
                labels[w].push(n - i);
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::fixtures;
    use crate::metric::eccentricities_bruteforce;

    #[test]
    fn path_forces_order() {
        let o = lexbfs(&fixtures::path(5), 0).unwrap();
        assert_eq!(o.order, vec![0, 1, 2, 3, 4]);
        assert_eq!(o.last, 4);
    }

    #[test]
    fn complete_graph_tie_rule() {
        let o = lexbfs(&fixtures::complete(4), 0).unwrap();
        assert_eq!(o.order, vec![0, 1, 2, 3]);
        assert_eq!(o.last, 3);
    }

    #[test]
    fn sun3_last_vertex_is_diametral() {
        let g = fixtures::sun3();
        let o = lexbfs(&g, 0).unwrap();
        assert!(is_lexbfs_order(&g, &o.order));
        let p = eccentricities_bruteforce(&g).unwrap();
        assert_eq!(p.ecc[o.last], 2);
        assert_eq!(p.diameter, 2);
    }

    #[test]
    fn disconnected_is_rejected() {
        let g = Graph::from_edges(3, &[(0, 1)]).unwrap();
        assert_eq!(lexbfs(&g, 0), Err(Error::Disconnected));
    }

    #[test]
    fn replay_rejects_plain_bfs_counterexample() {
        // 0-1, 0-2, 1-3, 2-4, 2-3: BFS 0,1,2,4,3 is not LexBFS (3 has label {1,2}).
        let g = Graph::from_edges(5, &[(0, 1), (0, 2), (1, 3), (2, 4), (2, 3)]).unwrap();
        assert!(!is_lexbfs_order(&g, &[0, 1, 2, 4, 3]));
        assert!(is_lexbfs_order(&g, &lexbfs(&g, 0).unwrap().order));
    }
}
