use graph_core::solution::tidy_forest;
use graph_core::{PlanarGraph, SteinerSolution};

use crate::cost::{fits_u128, BigCost, Cost};
use crate::dw::normalize_terminals;
use crate::engine::{run, Arena, Intervals, SetFamily};
use crate::error::OracleError;

/// Steiner tree for terminals on the boundary of one face.
///
/// Rooting at the last terminal in boundary order, every subtree spans a
/// contiguous run of the remaining terminals, so only intervals are tabled.
/// The face boundary must be a simple cycle (true in 2-connected graphs).
pub fn one_face_steiner(
    g: &PlanarGraph,
    terminals: &[usize],
    face: usize,
) -> Result<SteinerSolution, OracleError> {
    if face >= g.faces().len() {
        return Err(OracleError::NoSuchFace(face));
    }
    let t = normalize_terminals(g.vertex_count(), terminals)?;
    let order = g.face_vertex_order(face);
    let mut pos = Vec::with_capacity(t.len());
    for &x in &t {
        let p = order.iter().position(|&y| y == x).ok_or(OracleError::TerminalOffFace(x))?;
        pos.push((p, x));
    }
    if t.len() <= 1 {
        return Ok(SteinerSolution::empty());
    }
    pos.sort_unstable();
    let seq: Vec<usize> = pos.into_iter().map(|(_, x)| x).collect();
    let edges = if fits_u128(&graph_core::WeightedGraph::total_weight(g)) {
        solve::<u128>(g, &seq)
    } else {
        solve::<BigCost>(g, &seq)
    };
    match edges {
        Some(e) => Ok(SteinerSolution::from_edges(g, tidy_forest(g, &e, &t))),
        None => Err(OracleError::Unreachable(seq[0])),
    }
}

fn solve<C: Cost>(g: &PlanarGraph, seq: &[usize]) -> Option<Vec<usize>> {
    let (lin, root) = seq.split_at(seq.len() - 1);
    let root = root[0];
    let fam = Intervals::new(lin);
    let arena = Arena::<C>::new(g);
    let table = run(&fam, &arena);
    let full = fam.id(0, lin.len() - 1);
    debug_assert_eq!(full, fam.count() - 1);
    if table.value(full, root).is_inf() {
        return None;
    }
    Some(table.tree(&fam, &arena, full, root))
}
