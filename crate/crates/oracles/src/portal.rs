use graph_core::{SimpleGraph, SteinerSolution, Weight, WeightedGraph};

use crate::dw::{dreyfus_wagner, DwConfig};
use crate::error::OracleError;

/// Cheapest forest in which every terminal shares a component with a portal.
///
/// Solved as one Steiner tree after adding an apex joined to every portal by
/// a zero-weight edge; the apex edges are dropped from the returned forest.
pub fn portal_anchored_forest_min<G: WeightedGraph + ?Sized>(
    g: &G,
    terminals: &[usize],
    portals: &[usize],
    cfg: &DwConfig,
) -> Result<SteinerSolution, OracleError> {
    if portals.is_empty() {
        return Err(OracleError::NoPortals);
    }
    let mut h = SimpleGraph { n: g.vertex_count(), edges: g.edge_list().to_vec() };
    let apex = h.add_vertex();
    let m = h.edges.len();
    for &p in portals {
        h.add_edge(p, apex, Weight::zero());
    }
    let mut t = terminals.to_vec();
    t.push(apex);
    let s = dreyfus_wagner(&h, &t, cfg)?;
    let edges: Vec<usize> = s.edges.into_iter().filter(|&e| e < m).collect();
    Ok(SteinerSolution::from_edges(g, edges))
}
