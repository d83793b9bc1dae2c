use std::collections::HashMap;

use rand::Rng;
use serde::Serialize;

use crate::chordal::clique_tree::{build_clique_tree, centroid_in, CliqueTree};
use crate::chordal::incidence::{Work, NONE};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::helly::SampleParams;
use crate::metric::{bfs_from, require_connected};
use crate::split::{split_diameter_pair, Kernel, SparseSplit};

/// A gate of deepest vertices kept for the split instances.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SelectedGate {
    pub gate: Vertex,
    /// Position in [`CentroidStep::components`].
    pub component: usize,
    /// Lowest deepest vertex of the component with this gate.
    pub rep: Vertex,
    /// `N(gate) ∩ S`, sorted.
    pub proj: Vec<Vertex>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SplitInstance {
    pub repeat: u32,
    pub h: SparseSplit,
    pub diameter: u32,
}

/// One separator step on a subtree `T_i` of the clique tree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CentroidStep {
    pub depth: u32,
    pub node: usize,
    pub separator: Vec<Vertex>,
    /// Connected components of `G_i - S` by non-increasing depth, ties by
    /// discovery order.
    pub components: Vec<Vec<Vertex>>,
    /// `d_i = max dist(v, S)` over each component.
    pub depths: Vec<u32>,
    /// Lowest vertex of each component at distance `d_i`.
    pub deepest: Vec<Vertex>,
    pub gates: Vec<SelectedGate>,
    /// Labels of the two extra clique vertices `a` and `b`.
    pub fresh: (Vertex, Vertex),
    /// Resolved `d_S`; `None` with a single component.
    pub cross: Option<u32>,
    /// Longest distance certified by this step and a pair realizing it.
    pub value: u32,
    pub witness: (Vertex, Vertex),
    pub instances: Vec<SplitInstance>,
}

/// Splits the loaded subtree at its weighted centroid and computes
/// distances to the separator. Returns the step (gates not yet selected)
/// and the node lists of the child subtrees. `work` stays loaded.
pub(crate) fn partition(work: &mut Work, depth: u32, n: usize) -> (CentroidStep, Vec<Vec<usize>>) {
    let t = work.t;
    let nodes = work.nodes.clone();
    let s_node = centroid_in(t, &nodes, &mut work.inside);
    let separator = t.cliques[s_node].clone();

    let mut children: Vec<Vec<usize>> = Vec::new();
    let mut starts: Vec<usize> = t.neighbors(s_node).iter().copied().filter(|&j| work.inside[j]).collect();
    starts.sort_unstable();
    for j in starts {
        let c = children.len();
        let mut list = vec![j];
        work.ncomp[j] = c;
        let mut top = 0;
        while top < list.len() {
            let i = list[top];
            top += 1;
            for &k in t.neighbors(i) {
                if k != s_node && work.inside[k] && work.ncomp[k] == NONE {
                    work.ncomp[k] = c;
                    list.push(k);
                }
            }
        }
        children.push(list);
    }

    work.run_gates(&separator);
    // components of G_i - S: cliques minus S glued along shared vertices
    let mut comps: Vec<Vec<Vertex>> = Vec::new();
    for idx in 0..work.verts.len() {
        let v0 = work.verts[idx];
        if work.dist[v0] == 0 || work.vcomp[v0] != NONE {
            continue;
        }
        let c = comps.len();
        work.vcomp[v0] = c;
        let mut members = vec![v0];
        let mut top = 0;
        while top < members.len() {
            let v = members[top];
            top += 1;
            for k in 0..work.nodes_of(v).len() {
                let i = work.nodes_of(v)[k];
                if work.node_done[i] {
                    continue;
                }
                work.node_done[i] = true;
                for &w in &t.cliques[i] {
                    if work.dist[w] > 0 && work.vcomp[w] == NONE {
                        work.vcomp[w] = c;
                        members.push(w);
                    }
                }
            }
        }
        comps.push(members);
    }
    let mut order: Vec<usize> = (0..comps.len()).collect();
    let depth_of = |c: &[Vertex]| c.iter().map(|&v| work.dist[v]).max().unwrap();
    let raw: Vec<u32> = comps.iter().map(|c| depth_of(c)).collect();
    order.sort_by_key(|&c| (std::cmp::Reverse(raw[c]), c));
    let mut components = Vec::with_capacity(comps.len());
    let mut depths = Vec::with_capacity(comps.len());
    let mut deepest = Vec::with_capacity(comps.len());
    for &c in &order {
        let mut vs = std::mem::take(&mut comps[c]);
        vs.sort_unstable();
        for &v in &vs {
            work.vcomp[v] = components.len();
        }
        deepest.push(*vs.iter().find(|&&v| work.dist[v] == raw[c]).unwrap());
        depths.push(raw[c]);
        components.push(vs);
    }
    // with one component, a vertex of S outside the neighboring clique is
    // one step beyond the separator for every vertex of the component
    let (value, witness) = if components.len() == 1 {
        let next = &t.cliques[children[0][0]];
        let far = *separator.iter().find(|s| next.binary_search(s).is_err()).expect("cliques are maximal");
        (depths[0] + 1, (deepest[0], far))
    } else {
        (depths[0] + depths[1], (deepest[0], deepest[1]))
    };
    let step = CentroidStep {
        depth,
        node: s_node,
        separator,
        components,
        depths,
        deepest,
        gates: Vec::new(),
        fresh: (n, n + 1),
        cross: None,
        value,
        witness,
        instances: Vec::new(),
    };
    (step, children)
}

/// Gates of the deepest vertices of the components taking part in the
/// instances, one per clique of minimum projection.
pub(crate) fn select_gates(work: &Work, step: &mut CentroidStep) {
    if step.components.len() < 2 {
        return;
    }
    let d2 = step.depths[1];
    let mut found: HashMap<Vertex, usize> = HashMap::new();
    let mut gates = Vec::new();
    for (c, vs) in step.components.iter().enumerate() {
        if c > 0 && step.depths[c] != d2 {
            continue;
        }
        for &x in vs.iter().filter(|&&x| work.dist[x] == step.depths[c]) {
            let g = work.gate[x];
            found.entry(g).or_insert_with(|| {
                gates.push((g, c, x));
                gates.len() - 1
            });
        }
    }
    let mut alive = vec![true; gates.len()];
    for &i in &work.nodes {
        let mut best: Option<usize> = None;
        for &v in &work.t.cliques[i] {
            if let Some(&k) = found.get(&v) {
                if !alive[k] {
                    continue;
                }
                match best {
                    Some(b) if (work.proj[gates[b].0], gates[b].0) <= (work.proj[v], v) => alive[k] = false,
                    Some(b) => {
                        alive[b] = false;
                        best = Some(k);
                    }
                    None => best = Some(k),
                }
            }
        }
    }
    step.gates = gates
        .iter()
        .zip(&alive)
        .filter(|(_, &a)| a)
        .map(|(&(gate, component, rep), _)| {
            let home = &work.t.cliques[work.home[gate]];
            let proj: Vec<Vertex> = home.iter().copied().filter(|&s| work.dist[s] == 0).collect();
            SelectedGate { gate, component, rep, proj }
        })
        .collect();
}

/// Sparse split graph on `S ∪ {a, b}` and the selected gates. With
/// `d_1 > d_2` the gates of the deepest component see `a` and all others
/// see `b`; with `d_1 = d_2` every component picks a side by a fair coin.
pub fn emit_split_instance(step: &CentroidStep, rng: &mut impl Rng) -> Result<SparseSplit> {
    if step.components.len() < 2 {
        return Err(Error::DegenerateStep);
    }
    let ns = step.separator.len();
    let mut clique = step.separator.clone();
    clique.push(step.fresh.0);
    clique.push(step.fresh.1);
    let side_a: Vec<bool> = if step.depths[0] != step.depths[1] {
        (0..step.components.len()).map(|c| c == 0).collect()
    } else {
        (0..step.components.len()).map(|_| rng.gen_bool(0.5)).collect()
    };
    let mut stable = Vec::with_capacity(step.gates.len());
    let mut nbrs = Vec::with_capacity(step.gates.len());
    for sg in &step.gates {
        assert!(!sg.proj.is_empty(), "gate {} sees the separator", sg.gate);
        let mut list: Vec<usize> = sg.proj.iter().map(|s| step.separator.binary_search(s).unwrap()).collect();
        list.push(if side_a[sg.component] { ns } else { ns + 1 });
        stable.push(sg.gate);
        nbrs.push(list);
    }
    SparseSplit::new(clique, stable, nbrs)
}

/// Settles `d_S` by split instances and returns how many were built: one when `d_1 > d_2`, otherwise up to
/// `repeats` coin-flip rewirings, stopping at the first of diameter 3.
pub(crate) fn resolve(
    step: &mut CentroidStep,
    repeats: u32,
    params: &SampleParams,
    stream: u64,
    kernel: Kernel,
    keep: bool,
) -> Result<u32> {
    if step.components.len() < 2 {
        return Ok(0);
    }
    let base = step.depths[0] + step.depths[1];
    step.cross = Some(base);
    let rounds = if step.depths[0] != step.depths[1] { 1 } else { repeats };
    let mut rng = params.rng(stream);
    let mut used = 0;
    for repeat in 0..rounds {
        used += 1;
        let h = emit_split_instance(step, &mut rng)?;
        let (x, y, diameter) = split_diameter_pair(&h, kernel)?;
        if keep {
            step.instances.push(SplitInstance { repeat, h, diameter });
        }
        if diameter == 3 {
            let rep = |g: Vertex| step.gates.iter().find(|s| s.gate == g).unwrap().rep;
            step.cross = Some(base + 1);
            step.value = base + 1;
            step.witness = (rep(x), rep(y));
            break;
        }
    }
    Ok(used)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ChordalDiam {
    pub d: u32,
    pub x: Vertex,
    pub y: Vertex,
    /// Recursion levels used.
    pub depth: u32,
    pub steps: usize,
    pub instances: usize,
}

/// Diameter of a chordal graph by centroid recursion over one clique tree:
/// `diam(G) = max(d_S, diam(G_i))`, each `d_S` settled through split
/// diameter. The result is realized by the returned pair; it is exact with
/// high probability.
pub fn chordal_diameter(g: &Graph, params: &SampleParams) -> Result<ChordalDiam> {
    chordal_diameter_with(g, params, Kernel::default())
}

pub fn chordal_diameter_with(g: &Graph, params: &SampleParams, kernel: Kernel) -> Result<ChordalDiam> {
    run(g, params, kernel, false).map(|(d, _)| d)
}

/// As [`chordal_diameter_with`], also returning every step with its emitted
/// instances.
pub fn chordal_diameter_traced(
    g: &Graph,
    params: &SampleParams,
    kernel: Kernel,
) -> Result<(ChordalDiam, Vec<CentroidStep>)> {
    run(g, params, kernel, true)
}

fn run(g: &Graph, params: &SampleParams, kernel: Kernel, keep: bool) -> Result<(ChordalDiam, Vec<CentroidStep>)> {
    params.validate()?;
    require_connected(g)?;
    let t = build_clique_tree(g)?;
    let repeats = params.repeats_for(g.n());
    let mut best = (0u32, 0, 0);
    let mut offer = |d: u32, x: Vertex, y: Vertex| {
        if d > best.0 {
            best = (d, x, y);
        }
    };
    let mut work = Work::new(g.n(), &t);
    let mut trace = Vec::new();
    let (mut depth, mut steps, mut instances) = (0, 0, 0);
    let mut level = vec![(0..t.len()).collect::<Vec<usize>>()];
    while !level.is_empty() {
        depth += 1;
        let mut next = Vec::new();
        for nodes in level {
            if let Some((d, x, y)) = base_case(&t, &nodes) {
                offer(d, x, y);
                continue;
            }
            work.load(&nodes);
            let (mut step, children) = partition(&mut work, depth, g.n());
            select_gates(&work, &mut step);
            work.unload();
            instances += resolve(&mut step, repeats, params, steps as u64, kernel, keep)? as usize;
            steps += 1;
            offer(step.value, step.witness.0, step.witness.1);
            if keep {
                trace.push(step);
            }
            next.extend(children);
        }
        level = next;
    }
    let (lower, x, y) = best;
    let d = if lower == 0 { 0 } else { bfs_from(g, x).get(y) };
    debug_assert!(d >= lower);
    let (x, y) = (x.min(y), x.max(y));
    Ok((ChordalDiam { d, x, y, depth, steps, instances }, trace))
}

/// Diameter and a realizing pair of a subtree with one or two nodes.
fn base_case(t: &CliqueTree, nodes: &[usize]) -> Option<(u32, Vertex, Vertex)> {
    match *nodes {
        [i] => {
            let c = &t.cliques[i];
            Some(if c.len() > 1 { (1, c[0], c[1]) } else { (0, c[0], c[0]) })
        }
        [i, j] => {
            let (a, b) = (&t.cliques[i], &t.cliques[j]);
            let x = *a.iter().find(|v| b.binary_search(v).is_err()).unwrap();
            let y = *b.iter().find(|v| a.binary_search(v).is_err()).unwrap();
            Some((2, x, y))
        }
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::metric::eccentricities_bruteforce;
    use crate::oracles::generate::random_chordal;

    #[test]
    fn examples() {
        let params = SampleParams::with_seed(3);
        let p5 = chordal_diameter(&fixtures::path(5), &params).unwrap();
        assert_eq!((p5.d, p5.x, p5.y), (4, 0, 4));
        assert_eq!(chordal_diameter(&fixtures::sun3(), &params).unwrap().d, 2);
        assert_eq!(chordal_diameter(&fixtures::complete(4), &params).unwrap().d, 1);
        assert_eq!(chordal_diameter(&fixtures::cycle(4), &params), Err(Error::NotChordal));
    }

    #[test]
    fn path_step_emits_a_far_pair() {
        let g = fixtures::path(5);
        let (_, steps) = chordal_diameter_traced(&g, &SampleParams::with_seed(0), Kernel::Naive).unwrap();
        let first = &steps[0];
        assert_eq!(first.separator, vec![1, 2]);
        assert_eq!(first.components, vec![vec![3, 4], vec![0]]);
        assert_eq!(first.depths, vec![2, 1]);
        assert_eq!(first.cross, Some(4));
        assert_eq!(first.instances.len(), 1);
        assert_eq!(first.instances[0].diameter, 3);
    }

    #[test]
    fn degenerate_step() {
        let mut step =
            chordal_diameter_traced(&fixtures::path(5), &SampleParams::default(), Kernel::Naive).unwrap().1.remove(0);
        step.components.truncate(1);
        assert_eq!(emit_split_instance(&step, &mut SampleParams::default().rng(0)), Err(Error::DegenerateStep));
    }

    #[test]
    fn random_chordal_matches_bruteforce() {
        for seed in 0..120 {
            let g = random_chordal(5 + seed as usize % 70, seed, 3, 0.5);
            let truth = eccentricities_bruteforce(&g).unwrap().diameter;
            let got = chordal_diameter(&g, &SampleParams::with_seed(seed)).unwrap();
            assert_eq!(got.d, truth, "seed {seed}");
        }
    }
}
