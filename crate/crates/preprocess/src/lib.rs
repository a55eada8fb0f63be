//! Turns a plane instance into an equivalent subcubic, 2-connected one.
//!
//! Every vertex of degree at least three is blown up into a zero-weight
//! cycle.  Afterwards each remaining bridge lies on a maximal path through
//! degree-2 vertices; such a path gets a parallel twin of heavy edges joined
//! by zero-weight connectors, which closes it into a cycle.

pub mod connectivity;

use std::collections::BTreeSet;

use graph_core::solution::tidy_forest;
use graph_core::{twin, Edge, GraphError, PlanarGraph, SteinerSolution, Weight};
use thiserror::Error;

pub use connectivity::{bridges, cut_vertices, is_biconnected};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PreprocessError {
    #[error("input graph is disconnected")]
    Disconnected,
    #[error("terminal {0} lies on none of the terminal faces")]
    TerminalNotOnFace(usize),
    #[error("weight cap {cap} is below the heaviest edge {max}")]
    WeightCapTooSmall { cap: Weight, max: Weight },
    #[error("face {0} does not exist")]
    NoSuchFace(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LiftError {
    #[error("edge set does not connect the preprocessed terminals")]
    NotASolution,
}

/// Where an edge of the preprocessed graph comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EdgeOrigin {
    Original(usize),
    /// Zero-weight edge of the cycle replacing an original vertex.
    Cycle(usize),
    /// Zero-weight edge joining a bridge path end to its twin end.
    Connector,
    /// Heavy copy of an original bridge edge.
    Twin(usize),
}

#[derive(Clone, Debug)]
pub struct BackMap {
    pub edge_origin: Vec<EdgeOrigin>,
    /// Original vertex each new vertex stands for.
    pub vertex_origin: Vec<usize>,
    pub original_terminals: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct Preprocessed {
    pub graph: PlanarGraph,
    pub terminals: Vec<usize>,
    /// Face ids in `graph` matching the input terminal faces, in input order.
    pub faces: Vec<usize>,
    pub back: BackMap,
}

/// Mutable edge list plus rotations; faces are recomputed on demand.
struct Work {
    n: usize,
    edges: Vec<Edge>,
    rot: Vec<Vec<usize>>,
    origin: Vec<EdgeOrigin>,
    vorigin: Vec<usize>,
}

impl Work {
    fn add_vertex(&mut self, origin: usize) -> usize {
        self.n += 1;
        self.rot.push(Vec::new());
        self.vorigin.push(origin);
        self.n - 1
    }

    fn add_edge(&mut self, u: usize, v: usize, w: Weight, o: EdgeOrigin) -> usize {
        self.edges.push(Edge::new(u, v, w));
        self.origin.push(o);
        self.edges.len() - 1
    }

    /// Moves the tail of dart `d` to vertex `x` (rotations are fixed by the caller).
    fn set_tail(&mut self, d: usize, x: usize) {
        let e = &mut self.edges[d / 2];
        if d % 2 == 0 {
            e.u = x;
        } else {
            e.v = x;
        }
    }

    fn build(&self) -> Result<PlanarGraph, GraphError> {
        PlanarGraph::new(self.n, self.edges.clone(), self.rot.clone())
    }
}

/// Produces an equivalent subcubic 2-connected instance.
///
/// `faces` are face ids of `g`; `w_cap` must be at least the heaviest edge.
pub fn make_subcubic_2connected(
    g: &PlanarGraph,
    terminals: &[usize],
    faces: &[usize],
    w_cap: &Weight,
) -> Result<Preprocessed, PreprocessError> {
    let max = g.edges().iter().map(|e| e.weight.clone()).max().unwrap_or_default();
    if *w_cap < max {
        return Err(PreprocessError::WeightCapTooSmall { cap: w_cap.clone(), max });
    }
    if let Some(&f) = faces.iter().find(|&&f| f >= g.faces().len()) {
        return Err(PreprocessError::NoSuchFace(f));
    }
    if !g.is_connected() {
        return Err(PreprocessError::Disconnected);
    }
    let mut terms: Vec<usize> = terminals.to_vec();
    terms.sort_unstable();
    terms.dedup();
    if g.edges().is_empty() {
        // Single vertex: nothing to do.
        return Ok(Preprocessed {
            graph: g.clone(),
            terminals: terms.clone(),
            faces: faces.to_vec(),
            back: BackMap { edge_origin: Vec::new(), vertex_origin: (0..g.vertex_count()).collect(), original_terminals: terms },
        });
    }
    // Home face of each terminal: the smallest terminal-face id containing it.
    let mut home = Vec::with_capacity(terms.len());
    for &t in &terms {
        let f = faces
            .iter()
            .copied()
            .filter(|&f| g.face(f).contains_vertex(t))
            .min()
            .ok_or(PreprocessError::TerminalNotOnFace(t))?;
        home.push(f);
    }
    let mut reps: Vec<usize> = faces.iter().map(|&f| g.face(f).darts[0]).collect();

    let (n, edges, rot) = g.clone().into_parts();
    let mut w = Work {
        n,
        origin: (0..edges.len()).map(EdgeOrigin::Original).collect(),
        edges,
        rot,
        vorigin: (0..n).collect(),
    };

    // Degree expansion.  Vertex u keeps its id as the first cycle vertex.
    let mut new_terms = Vec::with_capacity(terms.len());
    let mut cycle_of: Vec<Option<Vec<usize>>> = vec![None; n];
    for u in 0..n {
        let darts = w.rot[u].clone();
        let k = darts.len();
        if k < 3 {
            continue;
        }
        let mut cyc = vec![u];
        for _ in 1..k {
            cyc.push(w.add_vertex(u));
        }
        for (i, &d) in darts.iter().enumerate() {
            w.set_tail(d, cyc[i]);
        }
        let first_cycle_edge = w.edges.len();
        for i in 0..k {
            w.add_edge(cyc[i], cyc[(i + 1) % k], Weight::zero(), EdgeOrigin::Cycle(u));
        }
        for i in 0..k {
            let out = 2 * (first_cycle_edge + i);
            let back = 2 * (first_cycle_edge + (i + k - 1) % k) + 1;
            w.rot[cyc[i]] = vec![darts[i], out, back];
        }
        cycle_of[u] = Some(cyc);
    }
    for (&t, &f) in terms.iter().zip(&home) {
        match &cycle_of[t] {
            None => new_terms.push(t),
            Some(cyc) => {
                let i = g
                    .rotation(t)
                    .iter()
                    .position(|&d| g.dart_face(d) == f)
                    .expect("home face touches the terminal");
                new_terms.push(cyc[i]);
            }
        }
    }

    let mut cur = w.build()?;
    loop {
        let br = bridges(&cur);
        let Some(&first) = br.first() else { break };
        duplicate_bridge_path(&mut w, &cur, first, w_cap, &mut reps);
        cur = w.build()?;
    }

    let faces_out: Vec<usize> = reps.iter().map(|&d| cur.dart_face(d)).collect();
    new_terms.sort_unstable();
    new_terms.dedup();
    Ok(Preprocessed {
        graph: cur,
        terminals: new_terms,
        faces: faces_out,
        back: BackMap { edge_origin: w.origin, vertex_origin: w.vorigin, original_terminals: terms },
    })
}

/// Closes the maximal degree-2 path through bridge `e0` into a cycle.
fn duplicate_bridge_path(w: &mut Work, g: &PlanarGraph, e0: usize, w_cap: &Weight, reps: &mut [usize]) {
    // Walk from e0 towards its u-end, then build the path from that end.
    let mut d = 2 * e0 + 1; // points from v to u
    loop {
        let x = g.dart_head(d);
        if g.degree(x) != 2 {
            break;
        }
        let r = g.rotation(x);
        let back = twin(d);
        let next = if r[0] == back { r[1] } else { r[0] };
        d = next;
    }
    // Now the path starts at head(d) and its first dart is twin(d).
    let mut path = vec![twin(d)];
    loop {
        let last = *path.last().unwrap();
        let x = g.dart_head(last);
        if g.degree(x) != 2 {
            break;
        }
        let r = g.rotation(x);
        let back = twin(last);
        let next = if r[0] == back { r[1] } else { r[0] };
        path.push(next);
    }
    let u = g.dart_tail(path[0]);
    let v = g.dart_head(*path.last().unwrap());
    let m = path.len();

    // The twin runs on the left of the path, so the backward darts end up on
    // the new face; representatives there move to the forward side.
    let forward: BTreeSet<usize> = path.iter().copied().collect();
    for r in reps.iter_mut() {
        if forward.contains(&twin(*r)) {
            *r = twin(*r);
        }
    }

    let u2 = w.add_vertex(w.vorigin[u]);
    let v2 = w.add_vertex(w.vorigin[v]);
    let cu = w.add_edge(u, u2, Weight::zero(), EdgeOrigin::Connector);
    let cv = w.add_edge(v, v2, Weight::zero(), EdgeOrigin::Connector);
    let mut q = vec![u2];
    for i in 1..m {
        let x = g.dart_head(path[i - 1]);
        q.push(w.add_vertex(w.vorigin[x]));
    }
    q.push(v2);
    let mut tw = Vec::with_capacity(m);
    for (i, &pd) in path.iter().enumerate() {
        let orig = match w.origin[pd / 2] {
            EdgeOrigin::Original(e) | EdgeOrigin::Twin(e) => e,
            _ => unreachable!("cycle and connector edges are never bridges"),
        };
        tw.push(w.add_edge(q[i], q[i + 1], w_cap.clone(), EdgeOrigin::Twin(orig)));
    }
    for i in 1..m {
        w.rot[q[i]] = vec![2 * tw[i - 1] + 1, 2 * tw[i]];
    }

    // u side.
    if g.degree(u) == 3 {
        let a = g.rot_next(path[0]);
        w.set_tail(a, u2);
        let slot = w.rot[u].iter().position(|&x| x == a).unwrap();
        w.rot[u][slot] = 2 * cu;
        w.rot[u2] = vec![2 * tw[0], a, 2 * cu + 1];
    } else {
        w.rot[u].push(2 * cu);
        w.rot[u2] = vec![2 * tw[0], 2 * cu + 1];
    }
    // v side.
    let gm = twin(*path.last().unwrap());
    if g.degree(v) == 3 {
        let y = g.rot_prev(gm);
        w.set_tail(y, v2);
        let slot = w.rot[v].iter().position(|&x| x == y).unwrap();
        w.rot[v][slot] = 2 * cv;
        w.rot[v2] = vec![y, 2 * tw[m - 1] + 1, 2 * cv + 1];
    } else {
        w.rot[v].push(2 * cv);
        w.rot[v2] = vec![2 * tw[m - 1] + 1, 2 * cv + 1];
    }
}

/// Maps a solution of the preprocessed instance back to the original graph.
///
/// Twin edges become their originals, cycle and connector edges vanish, and
/// the image is reduced to a spanning tree with non-terminal leaves pruned.
pub fn lift_solution(
    original: &PlanarGraph,
    pre: &Preprocessed,
    edges: &[usize],
) -> Result<SteinerSolution, LiftError> {
    if !graph_core::solution::connects(&pre.graph, edges, &pre.terminals) {
        return Err(LiftError::NotASolution);
    }
    let mapped: BTreeSet<usize> = edges
        .iter()
        .filter_map(|&e| match pre.back.edge_origin[e] {
            EdgeOrigin::Original(o) | EdgeOrigin::Twin(o) => Some(o),
            EdgeOrigin::Cycle(_) | EdgeOrigin::Connector => None,
        })
        .collect();
    let mapped: Vec<usize> = mapped.into_iter().collect();
    let tree = tidy_forest(original, &mapped, &pre.back.original_terminals);
    Ok(SteinerSolution::from_edges(original, tree))
}
