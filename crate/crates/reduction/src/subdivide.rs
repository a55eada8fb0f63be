//! Unit-weight subdivision.

use graph_core::{Edge, PlanarGraph, Weight};

use crate::ReductionError;

/// A subdivided graph; `origin[e]` is the input edge that new edge `e` lies on.
#[derive(Clone, Debug)]
pub struct Subdivided {
    pub graph: PlanarGraph,
    pub origin: Vec<usize>,
}

/// Replaces every edge of weight `w > 1` by a path of `w` unit edges.
///
/// Edge `e` keeps its id as the first segment of its path; zero-weight
/// edges stay as they are. Faces keep their ids because the face walk order
/// is unchanged.
pub fn subdivide_to_unit_weights(g: &PlanarGraph, budget: u64) -> Result<Subdivided, ReductionError> {
    let total: Weight = g.edges().iter().map(|e| &e.weight).sum();
    if total > Weight::from(budget) {
        return Err(ReductionError::BudgetExceeded { total, budget });
    }
    let mut n = g.vertex_count();
    let mut edges: Vec<Edge> = g.edges().iter().map(|e| Edge::new(e.u, e.v, e.weight.clone())).collect();
    let mut origin: Vec<usize> = (0..edges.len()).collect();
    let mut rotation: Vec<Vec<usize>> = g.rotations().to_vec();
    // Dart of the last segment that ends at the original v end, per edge.
    let mut v_end: Vec<usize> = (0..edges.len()).map(|e| 2 * e + 1).collect();
    for e in 0..g.edges().len() {
        let w = g.edge(e).weight.to_u64().expect("bounded by the budget");
        if w <= 1 {
            continue;
        }
        let v = edges[e].v;
        let mut prev = n;
        edges[e] = Edge::new(edges[e].u, prev, Weight::one());
        rotation.push(vec![2 * e + 1]);
        n += 1;
        for step in 1..w {
            let id = edges.len();
            let next = if step + 1 == w { v } else { n };
            edges.push(Edge::new(prev, next, Weight::one()));
            origin.push(e);
            rotation[prev].push(2 * id);
            if step + 1 == w {
                v_end[e] = 2 * id + 1;
            } else {
                rotation.push(vec![2 * id + 1]);
                prev = n;
                n += 1;
            }
        }
    }
    for rot in rotation.iter_mut().take(g.vertex_count()) {
        for d in rot.iter_mut() {
            if *d % 2 == 1 {
                *d = v_end[*d / 2];
            }
        }
    }
    let graph = PlanarGraph::new(n, edges, rotation)?;
    Ok(Subdivided { graph, origin })
}
