//! Named small graphs used across tests, docs and the CLI.
//!
//! Vertex numbering:
//! - `SUN3`: triangle `a=0, b=1, c=2`; `x=3` sees `{a,b}`, `y=4` sees `{b,c}`,
//!   `z=5` sees `{a,c}`.
//! - `KING33`: cell `(i, j)` is vertex `3*i + j`; the center is 4.
//! - `SPLIT-H2`: clique `c1=0, c2=1, c3=2`; stable `s1=3` sees `c1`, `s2=4` sees `c2`.

use crate::graph::{Graph, Vertex};

pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edges(n, &edges).unwrap()
}

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3);
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edges(n, &edges).unwrap()
}

/// Star with center 0 and `leaves` leaves.
pub fn star(leaves: usize) -> Graph {
    let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
    Graph::from_edges(leaves + 1, &edges).unwrap()
}

pub fn complete(n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// King graph on an `rows x cols` board (strong product of two paths).
pub fn king(rows: usize, cols: usize) -> Graph {
    let id = |i: usize, j: usize| -> Vertex { i * cols + j };
    let mut edges = Vec::new();
    for i in 0..rows {
        for j in 0..cols {
            if j + 1 < cols {
                edges.push((id(i, j), id(i, j + 1)));
            }
            if i + 1 < rows {
                edges.push((id(i, j), id(i + 1, j)));
                if j + 1 < cols {
                    edges.push((id(i, j), id(i + 1, j + 1)));
                }
                if j > 0 {
                    edges.push((id(i, j), id(i + 1, j - 1)));
                }
            }
        }
    }
    Graph::from_edges(rows * cols, &edges).unwrap()
}

pub fn sun3() -> Graph {
    Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 0), (3, 1), (4, 1), (4, 2), (5, 0), (5, 2)]).unwrap()
}

pub fn split_h2() -> Graph {
    Graph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (3, 0), (4, 1)]).unwrap()
}

pub const NAMES: &[&str] = &["P5", "STAR4", "C4", "K4", "SUN3", "KING33", "SPLIT-H2"];

pub fn by_name(name: &str) -> Option<Graph> {
    Some(match name.to_ascii_uppercase().as_str() {
        "P5" => path(5),
        "STAR4" => star(4),
        "C4" => cycle(4),
        "K4" => complete(4),
        "SUN3" => sun3(),
        "KING33" => king(3, 3),
        "SPLIT-H2" => split_h2(),
        _ => return None,
    })
}
