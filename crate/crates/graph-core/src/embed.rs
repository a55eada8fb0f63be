use crate::error::GraphError;
use crate::graph::{Edge, PlanarGraph};
use crate::weight::Weight;

/// Builds a plane graph from a straight-line drawing.
///
/// Rotations come from sorting incident edges by angle; the result is still
/// validated by the Euler check, so crossing drawings are rejected.
#[derive(Clone, Debug, Default)]
pub struct EmbeddingBuilder {
    pos: Vec<(f64, f64)>,
    edges: Vec<Edge>,
}

impl EmbeddingBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_vertex(&mut self, x: f64, y: f64) -> usize {
        self.pos.push((x, y));
        self.pos.len() - 1
    }

    pub fn add_edge(&mut self, u: usize, v: usize, w: Weight) -> usize {
        self.edges.push(Edge::new(u, v, w));
        self.edges.len() - 1
    }

    pub fn vertex_count(&self) -> usize {
        self.pos.len()
    }

    pub fn position(&self, v: usize) -> (f64, f64) {
        self.pos[v]
    }

    pub fn set_position(&mut self, v: usize, x: f64, y: f64) {
        self.pos[v] = (x, y);
    }

    pub fn positions(&self) -> &[(f64, f64)] {
        &self.pos
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn build(&self) -> Result<PlanarGraph, GraphError> {
        let n = self.pos.len();
        let mut around: Vec<Vec<(f64, usize)>> = vec![Vec::new(); n];
        for (i, e) in self.edges.iter().enumerate() {
            for (d, a, b) in [(2 * i, e.u, e.v), (2 * i + 1, e.v, e.u)] {
                if a >= n || b >= n {
                    return Err(GraphError::VertexOutOfRange { edge: i, n });
                }
                let (x0, y0) = self.pos[a];
                let (x1, y1) = self.pos[b];
                around[a].push(((y1 - y0).atan2(x1 - x0), d));
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
        PlanarGraph::new(n, self.edges.clone(), rotation)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn square_with_diagonal() {
        let mut b = EmbeddingBuilder::new();
        let v: Vec<usize> = [(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)]
            .iter()
            .map(|&(x, y)| b.add_vertex(x, y))
            .collect();
        for i in 0..4 {
            b.add_edge(v[i], v[(i + 1) % 4], Weight::one());
        }
        b.add_edge(v[0], v[2], Weight::one());
        let g = b.build().unwrap();
        assert_eq!(g.faces().len(), 3);
    }

    #[test]
    fn crossing_drawing_fails_euler() {
        let mut b = EmbeddingBuilder::new();
        for &(x, y) in &[(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)] {
            b.add_vertex(x, y);
        }
        for i in 0..4 {
            b.add_edge(i, (i + 1) % 4, Weight::one());
        }
        b.add_edge(0, 2, Weight::one());
        b.add_edge(1, 3, Weight::one());
        assert!(matches!(b.build(), Err(GraphError::EulerViolation { .. })));
    }
}
