//! Plane drawing with straight edges plus grafted combinatorial pieces.
//!
//! Each dart gets an angle key; rotations are the darts sorted by key. Drawn
//! edges take the direction to their other end, grafted edges take keys
//! assigned at graft time. The result goes through the Euler check.

use std::collections::BTreeMap;

use graph_core::{twin, Edge, GraphError, PlanarGraph, Weight};

#[derive(Clone, Debug, Default)]
pub(crate) struct Sketch {
    pos: Vec<(f64, f64)>,
    edges: Vec<Edge>,
    keys: Vec<Option<f64>>,
}

/// Where a grafted vertex lands: an existing vertex, with the piece's darts
/// spread over the angular sector `lo..hi` (radians, counter-clockwise).
#[derive(Clone, Copy, Debug)]
pub(crate) struct Anchor {
    pub vertex: usize,
    pub lo: f64,
    pub hi: f64,
}

impl Sketch {
    pub fn add_vertex(&mut self, x: f64, y: f64) -> usize {
        self.pos.push((x, y));
        self.pos.len() - 1
    }

    pub fn add_edge(&mut self, u: usize, v: usize, w: Weight) -> usize {
        self.edges.push(Edge::new(u, v, w));
        self.keys.extend([None, None]);
        self.edges.len() - 1
    }

    /// Copies `piece` in. `outer` is a face of `piece`; at every anchored
    /// vertex the piece's darts are laid out so that this face's corner is
    /// the part of the full turn outside the sector.
    ///
    /// Returns the vertex map and the offset added to edge ids.
    pub fn graft(
        &mut self,
        piece: &PlanarGraph,
        outer: usize,
        anchors: &BTreeMap<usize, Anchor>,
        weight: impl Fn(&Weight) -> Weight,
    ) -> Result<(Vec<usize>, usize), GraphError> {
        let map: Vec<usize> = (0..piece.vertex_count())
            .map(|x| match anchors.get(&x) {
                Some(a) => a.vertex,
                None => self.add_vertex(0.0, 0.0),
            })
            .collect();
        let base = self.edges.len();
        for e in piece.edges() {
            self.add_edge(map[e.u], map[e.v], weight(&e.weight));
        }
        for x in 0..piece.vertex_count() {
            let rot = piece.rotation(x);
            match anchors.get(&x) {
                None => {
                    for (i, &d) in rot.iter().enumerate() {
                        self.keys[2 * base + d] = Some(i as f64);
                    }
                }
                Some(a) => {
                    let starts: Vec<usize> = (0..rot.len()).filter(|&i| piece.dart_face(rot[i]) == outer).collect();
                    if starts.len() != 1 {
                        return Err(GraphError::MalformedRotation(format!(
                            "grafted vertex {x} meets the outer face {} times",
                            starts.len()
                        )));
                    }
                    let m = rot.len();
                    for j in 0..m {
                        let d = rot[(starts[0] + j) % m];
                        let frac = (j as f64 + 0.5) / m as f64;
                        self.keys[2 * base + d] = Some(a.lo + (a.hi - a.lo) * frac);
                    }
                }
            }
        }
        Ok((map, base))
    }

    pub fn build(self) -> Result<PlanarGraph, GraphError> {
        let n = self.pos.len();
        let mut around: Vec<Vec<(f64, usize)>> = vec![Vec::new(); n];
        for (i, e) in self.edges.iter().enumerate() {
            for (d, a, b) in [(2 * i, e.u, e.v), (2 * i + 1, e.v, e.u)] {
                let key = self.keys[d].unwrap_or_else(|| {
                    let (x0, y0) = self.pos[a];
                    let (x1, y1) = self.pos[b];
                    (y1 - y0).atan2(x1 - x0)
                });
                around[a].push((key, d));
            }
        }
        let mut rotation = Vec::with_capacity(n);
        for (x, mut list) in around.into_iter().enumerate() {
            list.sort_by(|p, q| p.0.total_cmp(&q.0));
            if list.windows(2).any(|w| w[0].0 == w[1].0) {
                return Err(GraphError::DegenerateDrawing(x));
            }
            rotation.push(list.into_iter().map(|(_, d)| d).collect());
        }
        PlanarGraph::new(n, self.edges, rotation)
    }
}

/// Same graph with every rotation reversed.
pub(crate) fn mirror(g: &PlanarGraph) -> PlanarGraph {
    let rot = g.rotations().iter().map(|r| r.iter().rev().copied().collect()).collect();
    PlanarGraph::new(g.vertex_count(), g.edges().to_vec(), rot).expect("mirror of a plane graph is plane")
}

/// Face of the mirror image that is the region of `face` in `g`.
pub(crate) fn mirrored_face(g: &PlanarGraph, mirrored: &PlanarGraph, face: usize) -> usize {
    mirrored.dart_face(twin(g.face(face).darts[0]))
}
