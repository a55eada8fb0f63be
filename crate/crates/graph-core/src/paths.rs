use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::error::PathError;
use crate::graph::WeightedGraph;
use crate::weight::Weight;

pub fn adjacency<G: WeightedGraph + ?Sized>(g: &G) -> Vec<Vec<(usize, usize)>> {
    let mut adj = vec![Vec::new(); g.vertex_count()];
    for (i, e) in g.edge_list().iter().enumerate() {
        adj[e.u].push((e.v, i));
        adj[e.v].push((e.u, i));
    }
    adj
}

/// Multi-source shortest distances; `None` marks unreachable vertices.
pub fn dijkstra<G: WeightedGraph + ?Sized>(g: &G, sources: &[usize]) -> Vec<Option<Weight>> {
    dijkstra_with_hops(g, sources).into_iter().map(|x| x.map(|(d, _)| d)).collect()
}

/// Distances paired with the fewest edges among shortest paths.
fn dijkstra_with_hops<G: WeightedGraph + ?Sized>(
    g: &G,
    sources: &[usize],
) -> Vec<Option<(Weight, usize)>> {
    let adj = adjacency(g);
    let edges = g.edge_list();
    let mut best: Vec<Option<(Weight, usize)>> = vec![None; g.vertex_count()];
    let mut heap = BinaryHeap::new();
    for &s in sources {
        best[s] = Some((Weight::zero(), 0));
        heap.push(Reverse((Weight::zero(), 0usize, s)));
    }
    while let Some(Reverse((d, h, x))) = heap.pop() {
        if best[x].as_ref() != Some(&(d.clone(), h)) {
            continue;
        }
        for &(y, e) in &adj[x] {
            let nd = &d + &edges[e].weight;
            let cand = (nd, h + 1);
            let better = match &best[y] {
                None => true,
                Some(cur) => cand < *cur,
            };
            if better {
                best[y] = Some(cand.clone());
                heap.push(Reverse((cand.0, cand.1, y)));
            }
        }
    }
    best
}

/// A shortest `u`-`v` path as a vertex sequence plus the edges used.
///
/// Among shortest paths with the fewest edges, the lexicographically smallest
/// vertex sequence wins; between parallel edges the smallest id wins.
pub fn shortest_path<G: WeightedGraph + ?Sized>(
    g: &G,
    u: usize,
    v: usize,
) -> Result<(Weight, Vec<usize>, Vec<usize>), PathError> {
    let to_v = dijkstra_with_hops(g, &[v]);
    let (total, _) = to_v[u]
        .clone()
        .ok_or(PathError::Unreachable { from: u, target: v })?;
    let adj = adjacency(g);
    let edges = g.edge_list();
    let mut verts = vec![u];
    let mut used = Vec::new();
    let mut x = u;
    while x != v {
        let (dx, hx) = to_v[x].clone().expect("on a shortest path");
        let mut pick: Option<(usize, usize)> = None;
        for &(y, e) in &adj[x] {
            let Some((dy, hy)) = &to_v[y] else { continue };
            if *hy + 1 != hx || dy + &edges[e].weight != dx {
                continue;
            }
            if pick.map_or(true, |(py, pe)| (y, e) < (py, pe)) {
                pick = Some((y, e));
            }
        }
        let (y, e) = pick.expect("tight neighbor exists");
        verts.push(y);
        used.push(e);
        x = y;
    }
    Ok((total, verts, used))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::SimpleGraph;

    #[test]
    fn tie_break_prefers_smaller_vertices() {
        // Two equal routes 0-1-3 and 0-2-3.
        let mut g = SimpleGraph::new(4);
        g.add_edge(0, 2, Weight::from(1u64));
        g.add_edge(2, 3, Weight::from(1u64));
        g.add_edge(0, 1, Weight::from(1u64));
        g.add_edge(1, 3, Weight::from(1u64));
        let (d, p, e) = shortest_path(&g, 0, 3).unwrap();
        assert_eq!(d, Weight::from(2u64));
        assert_eq!(p, vec![0, 1, 3]);
        assert_eq!(e, vec![2, 3]);
    }

    #[test]
    fn zero_weight_cycles_terminate() {
        let mut g = SimpleGraph::new(3);
        g.add_edge(0, 1, Weight::zero());
        g.add_edge(1, 2, Weight::zero());
        g.add_edge(2, 0, Weight::zero());
        let (d, p, _) = shortest_path(&g, 0, 2).unwrap();
        assert!(d.is_zero());
        assert_eq!(p, vec![0, 2]);
    }

    #[test]
    fn unreachable_is_reported() {
        let g = SimpleGraph::new(2);
        assert_eq!(
            shortest_path(&g, 0, 1).unwrap_err(),
            PathError::Unreachable { from: 0, target: 1 }
        );
        assert_eq!(dijkstra(&g, &[0]), vec![Some(Weight::zero()), None]);
    }
}
