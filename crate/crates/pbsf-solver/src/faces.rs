//! Faces touched by a vertex set and the arcs a face splits into around it.

use graph_core::{Dsu, Partition, PlanarGraph};

/// Faces of `k` with at least one edge incident to a vertex of `x`.
pub fn faces_hit(g: &PlanarGraph, k: &[usize], x: &[usize]) -> Vec<usize> {
    k.iter()
        .copied()
        .filter(|&f| {
            g.face(f).edges.iter().any(|&e| {
                let ed = g.edge(e);
                x.contains(&ed.u) || x.contains(&ed.v)
            })
        })
        .collect()
}

/// Partition of the vertices of face `f` outside `x` into the connected
/// pieces of the face boundary with `x` removed.
pub fn face_components(g: &PlanarGraph, f: usize, x: &[usize]) -> Partition {
    let face = g.face(f);
    let verts: Vec<usize> = face.vertices.iter().copied().filter(|v| !x.contains(v)).collect();
    let idx = |v: usize| verts.binary_search(&v).ok();
    let mut dsu = Dsu::new(verts.len());
    for &e in &face.edges {
        let ed = g.edge(e);
        if let (Some(a), Some(b)) = (idx(ed.u), idx(ed.v)) {
            dsu.union(a, b);
        }
    }
    let labels: Vec<usize> = (0..verts.len()).map(|i| dsu.find(i)).collect();
    Partition::from_labels(&verts, &labels)
}

/// True if the boundary walk of `f` visits every vertex once.
pub fn is_simple_face(g: &PlanarGraph, f: usize) -> bool {
    let face = g.face(f);
    face.darts.len() >= 2 && face.darts.len() == face.vertices.len()
}
