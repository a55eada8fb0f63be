//! Finite windows of the unrolled interval grid.

use std::collections::HashMap;

use graph_core::{EmbeddingBuilder, PlanarGraph, Weight};

use crate::interval::{edge_weight, weight_divisor, Interval};
use crate::GadgetError;

/// All intervals inside [x_lo, x_hi] of size at most `max_size`, joined by
/// Hasse edges with weights scaled to integers.
#[derive(Clone, Debug)]
pub struct GammaWindow {
    pub graph: PlanarGraph,
    pub scale: u64,
    pub x_lo: i64,
    pub x_hi: i64,
    pub max_size: i64,
    pub intervals: Vec<Interval>,
    index: HashMap<Interval, usize>,
}

impl GammaWindow {
    pub fn vertex(&self, p: Interval) -> Option<usize> {
        self.index.get(&p).copied()
    }

    pub fn interval(&self, v: usize) -> Interval {
        self.intervals[v]
    }

    pub fn contains(&self, p: &Interval) -> bool {
        self.index.contains_key(p)
    }

    /// The subintervals of `q` present in the window.
    pub fn triangle(&self, q: Interval) -> Vec<usize> {
        (0..self.intervals.len()).filter(|&v| q.contains(&self.intervals[v])).collect()
    }

    pub fn unit(&self) -> Weight {
        Weight::from(self.scale)
    }
}

pub fn gamma_window(x_lo: i64, x_hi: i64, max_size: i64, scale: u64) -> Result<GammaWindow, GadgetError> {
    if x_lo > x_hi || max_size < 1 {
        return Err(GadgetError::BadParameters(format!("window [{x_lo}, {x_hi}] with max size {max_size}")));
    }
    let top = max_size.min(x_hi - x_lo + 1);
    if top >= 2 && scale % weight_divisor(top) != 0 {
        return Err(GadgetError::NonIntegralWeight { scale, divisor: weight_divisor(top) });
    }
    let mut b = EmbeddingBuilder::new();
    let mut intervals = Vec::new();
    let mut index = HashMap::new();
    for size in 1..=top {
        for a in x_lo..=x_hi - size + 1 {
            let p = Interval::new(a, a + size - 1);
            index.insert(p, b.add_vertex((p.a + p.b) as f64, (p.b - p.a) as f64));
            intervals.push(p);
        }
    }
    for (v, p) in intervals.iter().enumerate() {
        if p.size() == 1 {
            continue;
        }
        let w = edge_weight(p.size(), scale);
        for child in [Interval::new(p.a + 1, p.b), Interval::new(p.a, p.b - 1)] {
            b.add_edge(index[&child], v, w.clone());
        }
    }
    let graph = b.build()?;
    Ok(GammaWindow { graph, scale, x_lo, x_hi, max_size: top, intervals, index })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes_and_weights() {
        let w = gamma_window(0, 3, 1, 1).unwrap();
        assert_eq!(w.graph.vertex_count(), 4);
        assert!(w.graph.edges().is_empty());
        let w = gamma_window(0, 5, 3, 2).unwrap();
        let e = |p: Interval, q: Interval| {
            let (u, v) = (w.vertex(p).unwrap(), w.vertex(q).unwrap());
            w.graph.edges().iter().find(|e| (e.u, e.v) == (u, v) || (e.u, e.v) == (v, u)).unwrap().weight.clone()
        };
        assert_eq!(e(Interval::point(1), Interval::new(1, 2)), Weight::from(2u64));
        assert_eq!(e(Interval::new(1, 2), Interval::new(1, 3)), Weight::from(1u64));
        assert!(matches!(gamma_window(0, 9, 6, 2), Err(GadgetError::NonIntegralWeight { .. })));
    }
}
