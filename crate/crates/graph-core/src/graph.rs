//! Plane multigraphs given by a combinatorial embedding.
//!
//! Edge `i` owns two edge-ends ("darts"): `2i` sits at `u` and points to `v`,
//! `2i + 1` sits at `v` and points to `u`.  The rotation at a vertex lists the
//! darts leaving it in counter-clockwise order.  The face walk continues from
//! dart `d` with the rotation successor of `twin(d)`, which keeps the face on
//! the right of every dart.

use std::collections::BTreeSet;

use crate::error::GraphError;
use crate::weight::Weight;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub weight: Weight,
}

impl Edge {
    pub fn new(u: usize, v: usize, weight: Weight) -> Self {
        Edge { u, v, weight }
    }

    pub fn other(&self, x: usize) -> usize {
        if self.u == x {
            self.v
        } else {
            self.u
        }
    }
}

/// Anything that exposes a vertex count and a weighted edge list.
pub trait WeightedGraph {
    fn vertex_count(&self) -> usize;
    fn edge_list(&self) -> &[Edge];

    fn total_weight(&self) -> Weight {
        self.edge_list().iter().map(|e| &e.weight).sum()
    }
}

/// A weighted multigraph without an embedding.
#[derive(Clone, Debug, Default)]
pub struct SimpleGraph {
    pub n: usize,
    pub edges: Vec<Edge>,
}

impl SimpleGraph {
    pub fn new(n: usize) -> Self {
        SimpleGraph { n, edges: Vec::new() }
    }

    pub fn add_vertex(&mut self) -> usize {
        self.n += 1;
        self.n - 1
    }

    pub fn add_edge(&mut self, u: usize, v: usize, w: Weight) -> usize {
        self.edges.push(Edge::new(u, v, w));
        self.edges.len() - 1
    }
}

impl WeightedGraph for SimpleGraph {
    fn vertex_count(&self) -> usize {
        self.n
    }
    fn edge_list(&self) -> &[Edge] {
        &self.edges
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    /// Boundary walk, starting at the smallest dart of the face.
    pub darts: Vec<usize>,
    /// Sorted, deduplicated edge ids on the boundary.
    pub edges: Vec<usize>,
    /// Sorted, deduplicated vertices on the boundary.
    pub vertices: Vec<usize>,
}

impl Face {
    pub fn contains_vertex(&self, v: usize) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }
}

#[derive(Clone, Debug)]
pub struct PlanarGraph {
    n: usize,
    edges: Vec<Edge>,
    rotation: Vec<Vec<usize>>,
    rot_pos: Vec<usize>,
    faces: Vec<Face>,
    dart_face: Vec<usize>,
}

#[inline]
pub fn twin(d: usize) -> usize {
    d ^ 1
}

impl PlanarGraph {
    /// Validates the rotation system and the per-component Euler formula.
    pub fn new(n: usize, edges: Vec<Edge>, rotation: Vec<Vec<usize>>) -> Result<Self, GraphError> {
        for (i, e) in edges.iter().enumerate() {
            if e.u >= n || e.v >= n {
                return Err(GraphError::VertexOutOfRange { edge: i, n });
            }
            if e.u == e.v {
                return Err(GraphError::SelfLoop { edge: i, vertex: e.u });
            }
        }
        if rotation.len() != n {
            return Err(GraphError::MalformedRotation(format!(
                "expected {} rotation lists, got {}",
                n,
                rotation.len()
            )));
        }
        let darts = 2 * edges.len();
        let mut rot_pos = vec![usize::MAX; darts];
        for (x, rot) in rotation.iter().enumerate() {
            for (i, &d) in rot.iter().enumerate() {
                if d >= darts {
                    return Err(GraphError::MalformedRotation(format!(
                        "vertex {x} lists unknown edge-end {d}"
                    )));
                }
                if rot_pos[d] != usize::MAX {
                    return Err(GraphError::MalformedRotation(format!(
                        "edge-end {d} listed twice"
                    )));
                }
                let e = &edges[d / 2];
                let tail = if d % 2 == 0 { e.u } else { e.v };
                if tail != x {
                    return Err(GraphError::MalformedRotation(format!(
                        "edge-end {d} belongs to vertex {tail} but is listed at {x}"
                    )));
                }
                rot_pos[d] = i;
            }
        }
        if let Some(d) = rot_pos.iter().position(|&p| p == usize::MAX) {
            return Err(GraphError::MalformedRotation(format!(
                "edge-end {d} missing from its rotation"
            )));
        }
        let mut g = PlanarGraph {
            n,
            edges,
            rotation,
            rot_pos,
            faces: Vec::new(),
            dart_face: Vec::new(),
        };
        g.trace_faces();
        g.check_euler()?;
        Ok(g)
    }

    fn trace_faces(&mut self) {
        let darts = 2 * self.edges.len();
        let mut dart_face = vec![usize::MAX; darts];
        let mut faces = Vec::new();
        for start in 0..darts {
            if dart_face[start] != usize::MAX {
                continue;
            }
            let id = faces.len();
            let mut walk = Vec::new();
            let mut d = start;
            loop {
                dart_face[d] = id;
                walk.push(d);
                d = self.face_next(d);
                if d == start {
                    break;
                }
            }
            let edges: BTreeSet<usize> = walk.iter().map(|&d| d / 2).collect();
            let vertices: BTreeSet<usize> = walk.iter().map(|&d| self.dart_tail(d)).collect();
            faces.push(Face {
                darts: walk,
                edges: edges.into_iter().collect(),
                vertices: vertices.into_iter().collect(),
            });
        }
        self.faces = faces;
        self.dart_face = dart_face;
    }

    fn check_euler(&self) -> Result<(), GraphError> {
        let comp = self.components();
        let k = comp.iter().copied().max().map_or(0, |m| m + 1);
        let mut v = vec![0i64; k];
        let mut e = vec![0i64; k];
        let mut f = vec![0i64; k];
        for x in 0..self.n {
            if !self.rotation[x].is_empty() {
                v[comp[x]] += 1;
            }
        }
        for ed in &self.edges {
            e[comp[ed.u]] += 1;
        }
        for face in &self.faces {
            f[comp[self.dart_tail(face.darts[0])]] += 1;
        }
        for c in 0..k {
            if e[c] > 0 && v[c] - e[c] + f[c] != 2 {
                return Err(GraphError::EulerViolation {
                    vertices: v[c] as usize,
                    edges: e[c] as usize,
                    faces: f[c] as usize,
                });
            }
        }
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, i: usize) -> &Edge {
        &self.edges[i]
    }

    pub fn rotation(&self, x: usize) -> &[usize] {
        &self.rotation[x]
    }

    pub fn rotations(&self) -> &[Vec<usize>] {
        &self.rotation
    }

    pub fn degree(&self, x: usize) -> usize {
        self.rotation[x].len()
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn face(&self, f: usize) -> &Face {
        &self.faces[f]
    }

    pub fn dart_face(&self, d: usize) -> usize {
        self.dart_face[d]
    }

    pub fn dart_tail(&self, d: usize) -> usize {
        let e = &self.edges[d / 2];
        if d % 2 == 0 {
            e.u
        } else {
            e.v
        }
    }

    pub fn dart_head(&self, d: usize) -> usize {
        self.dart_tail(twin(d))
    }

    /// Counter-clockwise successor of `d` in the rotation at its tail.
    pub fn rot_next(&self, d: usize) -> usize {
        let x = self.dart_tail(d);
        let r = &self.rotation[x];
        r[(self.rot_pos[d] + 1) % r.len()]
    }

    pub fn rot_prev(&self, d: usize) -> usize {
        let x = self.dart_tail(d);
        let r = &self.rotation[x];
        r[(self.rot_pos[d] + r.len() - 1) % r.len()]
    }

    pub fn rot_index(&self, d: usize) -> usize {
        self.rot_pos[d]
    }

    /// Next dart along the face to the right of `d`.
    pub fn face_next(&self, d: usize) -> usize {
        self.rot_next(twin(d))
    }

    /// Component label per vertex; labels are dense and ordered by smallest vertex.
    pub fn components(&self) -> Vec<usize> {
        components_of(self.n, &self.edges)
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().iter().all(|&c| c == 0)
    }

    /// Faces (by id) whose boundary contains `v`.
    pub fn faces_at(&self, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self.rotation[v].iter().map(|&d| self.dart_face[d]).collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Vertices along the boundary walk of face `f`, in walk order, first occurrence only.
    pub fn face_vertex_order(&self, f: usize) -> Vec<usize> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for &d in &self.faces[f].darts {
            let x = self.dart_tail(d);
            if seen.insert(x) {
                out.push(x);
            }
        }
        out
    }

    /// Adjacency as `(neighbor, edge id)` pairs in rotation order.
    pub fn adjacency(&self) -> Vec<Vec<(usize, usize)>> {
        self.rotation
            .iter()
            .map(|r| r.iter().map(|&d| (self.dart_head(d), d / 2)).collect())
            .collect()
    }

    pub fn into_parts(self) -> (usize, Vec<Edge>, Vec<Vec<usize>>) {
        (self.n, self.edges, self.rotation)
    }
}

impl WeightedGraph for PlanarGraph {
    fn vertex_count(&self) -> usize {
        self.n
    }
    fn edge_list(&self) -> &[Edge] {
        &self.edges
    }
}

pub fn components_of(n: usize, edges: &[Edge]) -> Vec<usize> {
    let mut adj = vec![Vec::new(); n];
    for e in edges {
        adj[e.u].push(e.v);
        adj[e.v].push(e.u);
    }
    let mut comp = vec![usize::MAX; n];
    let mut next = 0;
    for s in 0..n {
        if comp[s] != usize::MAX {
            continue;
        }
        comp[s] = next;
        let mut stack = vec![s];
        while let Some(x) = stack.pop() {
            for &y in &adj[x] {
                if comp[y] == usize::MAX {
                    comp[y] = next;
                    stack.push(y);
                }
            }
        }
        next += 1;
    }
    comp
}

/// Union of the boundary edge sets of `faces`, sorted.
pub fn flatten(g: &PlanarGraph, faces: &[usize]) -> Vec<usize> {
    let mut s = BTreeSet::new();
    for &f in faces {
        s.extend(g.face(f).edges.iter().copied());
    }
    s.into_iter().collect()
}

/// Union of the boundary vertex sets of `faces`, sorted.
pub fn flatten_vertices(g: &PlanarGraph, faces: &[usize]) -> Vec<usize> {
    let mut s = BTreeSet::new();
    for &f in faces {
        s.extend(g.face(f).vertices.iter().copied());
    }
    s.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(x: u64) -> Weight {
        Weight::from(x)
    }

    // Triangle 0,1,2 drawn counter-clockwise.
    fn triangle() -> PlanarGraph {
        let edges = vec![Edge::new(0, 1, w(1)), Edge::new(1, 2, w(2)), Edge::new(2, 0, w(3))];
        let rot = vec![vec![0, 5], vec![2, 1], vec![4, 3]];
        PlanarGraph::new(3, edges, rot).unwrap()
    }

    #[test]
    fn triangle_has_two_faces() {
        let g = triangle();
        assert_eq!(g.faces().len(), 2);
        assert_eq!(g.faces()[0].darts, vec![0, 2, 4]);
        assert_eq!(g.faces()[1].darts, vec![1, 5, 3]);
        assert_eq!(g.total_weight(), w(6));
    }

    #[test]
    fn rejects_bad_rotations() {
        let edges = vec![Edge::new(0, 1, w(1))];
        let e = PlanarGraph::new(2, edges.clone(), vec![vec![0], vec![0]]).unwrap_err();
        assert!(matches!(e, GraphError::MalformedRotation(_)));
        let e = PlanarGraph::new(2, edges.clone(), vec![vec![0], vec![]]).unwrap_err();
        assert!(matches!(e, GraphError::MalformedRotation(_)));
        let e = PlanarGraph::new(2, vec![Edge::new(1, 1, w(0))], vec![vec![], vec![0, 1]]).unwrap_err();
        assert!(matches!(e, GraphError::SelfLoop { .. }));
    }

    #[test]
    fn k4_with_twisted_rotation_violates_euler() {
        // K4 with vertex 3 in the middle of triangle 0,1,2.
        let edges = vec![
            Edge::new(0, 1, w(1)),
            Edge::new(1, 2, w(1)),
            Edge::new(2, 0, w(1)),
            Edge::new(0, 3, w(1)),
            Edge::new(1, 3, w(1)),
            Edge::new(2, 3, w(1)),
        ];
        let good = vec![vec![0, 6, 5], vec![2, 8, 1], vec![4, 10, 3], vec![9, 11, 7]];
        let g = PlanarGraph::new(4, edges.clone(), good).unwrap();
        assert_eq!(g.faces().len(), 4);
        let bad = vec![vec![0, 6, 5], vec![2, 8, 1], vec![4, 10, 3], vec![11, 9, 7]];
        let e = PlanarGraph::new(4, edges, bad).unwrap_err();
        assert!(matches!(e, GraphError::EulerViolation { .. }));
    }

    #[test]
    fn isolated_vertices_are_allowed() {
        let g = PlanarGraph::new(3, vec![], vec![vec![], vec![], vec![]]).unwrap();
        assert!(g.faces().is_empty());
        assert!(!g.is_connected());
    }

    #[test]
    fn flatten_collects_face_edges() {
        let g = triangle();
        assert_eq!(flatten(&g, &[0]), vec![0, 1, 2]);
        assert_eq!(flatten_vertices(&g, &[0, 1]), vec![0, 1, 2]);
        assert_eq!(g.face_vertex_order(0), vec![0, 1, 2]);
    }
}
