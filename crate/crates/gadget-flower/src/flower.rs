//! The rolled gadget: intervals modulo t of size at most t/2.

use graph_core::{Edge, PlanarGraph, SteinerSolution, Weight};

use crate::interval::{edge_weight, weight_divisor};
use crate::GadgetError;

#[derive(Clone, Debug)]
pub struct FlowerGadget {
    pub graph: PlanarGraph,
    pub t: usize,
    pub scale: u64,
    /// Size-1 intervals, indexed by their element.
    pub terminals: Vec<usize>,
    /// Size-t/2 intervals, indexed by their left endpoint.
    pub portals: Vec<usize>,
    /// Face through all terminals.
    pub carpel: usize,
    /// Face through all portals.
    pub outer: usize,
}

impl FlowerGadget {
    /// Vertex of ⟦a, a+size-1⟧ modulo t.
    pub fn vertex(&self, a: usize, size: usize) -> usize {
        (size - 1) * self.t + a % self.t
    }

    /// Left endpoint and size of vertex `v`.
    pub fn interval(&self, v: usize) -> (usize, usize) {
        (v % self.t, v / self.t + 1)
    }

    /// Weight of the optimal portal-anchored forest, 2t - 4 units.
    pub fn optimum(&self) -> Weight {
        Weight::from((2 * self.t as u64 - 4) * self.scale)
    }

    /// The portal opposite to the one starting at `a`.
    pub fn opposite(&self, a: usize) -> usize {
        (a + self.t / 2) % self.t
    }

    /// Edge joining ⟦a, ..⟧ of `size` to its child missing the left endpoint.
    fn left_edge(&self, a: usize, size: usize) -> usize {
        left_edge(self.t, a, size)
    }

    fn right_edge(&self, a: usize, size: usize) -> usize {
        right_edge(self.t, a, size)
    }
}

fn left_edge(t: usize, a: usize, size: usize) -> usize {
    2 * ((size - 2) * t + a % t)
}

fn right_edge(t: usize, a: usize, size: usize) -> usize {
    left_edge(t, a, size) + 1
}

pub fn build_flower(t: usize, scale: u64) -> Result<FlowerGadget, GadgetError> {
    if t < 4 || !t.is_power_of_two() {
        return Err(GadgetError::BadParameters(format!("t = {t} must be a power of two, at least 4")));
    }
    let top = (t / 2) as i64;
    let d = weight_divisor(top);
    if scale == 0 || scale % d != 0 {
        return Err(GadgetError::BadParameters(format!("scale {scale} must be a positive multiple of {d}")));
    }
    let half = t / 2;
    let id = |a: usize, size: usize| (size - 1) * t + a % t;
    let mut edges = Vec::new();
    for size in 2..=half {
        let w = edge_weight(size as i64, scale);
        for a in 0..t {
            edges.push(Edge::new(id(a + 1, size - 1), id(a, size), w.clone()));
            edges.push(Edge::new(id(a, size - 1), id(a, size), w.clone()));
        }
    }
    // Counter-clockwise with larger intervals drawn higher: down-right,
    // up-right, up-left, down-left.
    let mut rotation = vec![Vec::new(); t * half];
    for size in 1..=half {
        for a in 0..t {
            let r = &mut rotation[id(a, size)];
            if size > 1 {
                r.push(2 * left_edge(t, a, size) + 1);
            }
            if size < half {
                r.push(2 * right_edge(t, a, size + 1));
                r.push(2 * left_edge(t, a + t - 1, size + 1));
            }
            if size > 1 {
                r.push(2 * right_edge(t, a, size) + 1);
            }
        }
    }
    let graph = PlanarGraph::new(t * half, edges, rotation)?;
    let carpel = graph.dart_face(2 * right_edge(t, 0, 2));
    let outer = graph.dart_face(2 * left_edge(t, 0, half));
    Ok(FlowerGadget {
        graph,
        t,
        scale,
        terminals: (0..t).map(|a| id(a, 1)).collect(),
        portals: (0..t).map(|a| id(a, half)).collect(),
        carpel,
        outer,
    })
}

/// Binary tree from ⟦lo, lo+size-1⟧ down to its singletons along straight paths.
fn binary_tree(f: &FlowerGadget, lo: usize, size: usize, out: &mut Vec<usize>) {
    if size == 1 {
        return;
    }
    let half = size / 2;
    for k in half + 1..=size {
        out.push(f.right_edge(lo, k));
    }
    for j in 0..size - half {
        out.push(f.left_edge(lo + j, size - j));
    }
    binary_tree(f, lo, half, out);
    binary_tree(f, lo + half, half, out);
}

/// Two binary trees rooted at the opposite portals starting at `a` and `a + t/2`.
pub fn canonical_forest(f: &FlowerGadget, a: usize) -> Result<SteinerSolution, GadgetError> {
    if a == 0 || a > f.t / 2 {
        return Err(GadgetError::BadRoot(a));
    }
    let mut edges = Vec::new();
    binary_tree(f, a % f.t, f.t / 2, &mut edges);
    binary_tree(f, f.opposite(a), f.t / 2, &mut edges);
    edges.sort_unstable();
    Ok(SteinerSolution::from_edges(&f.graph, edges))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        let f = build_flower(4, 1).unwrap();
        assert_eq!((f.graph.vertex_count(), f.graph.edges().len()), (8, 8));
        let f = build_flower(8, 2).unwrap();
        assert_eq!((f.graph.vertex_count(), f.graph.edges().len()), (32, 48));
        assert!(build_flower(8, 1).is_err());
        assert!(build_flower(6, 4).is_err());
    }

    #[test]
    fn faces_carry_terminals_and_portals() {
        for t in [4, 8, 16] {
            let f = build_flower(t, t as u64 / 4).unwrap();
            assert_ne!(f.carpel, f.outer);
            assert!(f.terminals.iter().all(|&v| f.graph.face(f.carpel).contains_vertex(v)));
            assert!(f.portals.iter().all(|&v| f.graph.face(f.outer).contains_vertex(v)));
            if t > 4 {
                assert!(f.portals.iter().all(|&v| !f.graph.face(f.carpel).contains_vertex(v)));
            }
        }
    }

    #[test]
    fn portal_edges_weigh_four_over_t() {
        let f = build_flower(8, 8).unwrap();
        let top = f.vertex(0, 4);
        for e in f.graph.edges().iter().filter(|e| e.v == top) {
            assert_eq!(e.weight, Weight::from(4u64));
        }
    }

    #[test]
    fn canonical_weight() {
        for t in [4, 8, 16] {
            let f = build_flower(t, t as u64 / 4).unwrap();
            for a in 1..=t / 2 {
                let s = canonical_forest(&f, a).unwrap();
                assert_eq!(s.weight, f.optimum());
                assert!(s.is_forest(&f.graph));
            }
        }
    }
}
