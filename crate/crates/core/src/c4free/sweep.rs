use crate::error::Result;
use crate::graph::{Graph, Vertex};
use crate::metric::{bfs_from, require_connected, Distances};

/// Three BFS: `s`, then `v ∈ F(s)`, then `u ∈ F(v)`.
pub(crate) struct Sweep {
    pub v: Vertex,
    pub row_v: Distances,
    pub u: Vertex,
    pub row_u: Distances,
}

impl Sweep {
    pub fn run(g: &Graph, s: Vertex) -> Sweep {
        let v = bfs_from(g, s).last();
        let row_v = bfs_from(g, v);
        let u = row_v.last();
        let row_u = bfs_from(g, u);
        Sweep { v, row_v, u, row_u }
    }
}

/// Multi-sweep: returns `(v, u, e(u))` with `v ∈ F(s)` and `u ∈ F(v)`, the
/// last vertices of their BFS. On C4-free Helly graphs `e(u) >= diam - 2`,
/// and `e(u) >= diam - 1` when `e(u)` is even.
pub fn multisweep(g: &Graph, s: Vertex) -> Result<(Vertex, Vertex, u32)> {
    g.check_vertex(s)?;
    require_connected(g)?;
    let sw = Sweep::run(g, s);
    Ok((sw.v, sw.u, sw.row_u.max()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn examples() {
        assert_eq!(multisweep(&fixtures::path(5), 2).unwrap(), (4, 0, 4));
        assert_eq!(multisweep(&fixtures::complete(4), 0).unwrap().2, 1);
        assert!(multisweep(&Graph::from_edges(3, &[(0, 1)]).unwrap(), 0).is_err());
    }
}
