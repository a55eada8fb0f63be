use std::collections::BTreeSet;

use petgraph::unionfind::UnionFind;
use serde::{Deserialize, Serialize};

use crate::graph::WeightedGraph;
use crate::weight::Weight;

/// An edge set with its exact weight.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SteinerSolution {
    pub weight: Weight,
    pub edges: Vec<usize>,
}

impl SteinerSolution {
    pub fn empty() -> Self {
        SteinerSolution { weight: Weight::zero(), edges: Vec::new() }
    }

    pub fn from_edges<G: WeightedGraph + ?Sized>(g: &G, edges: impl IntoIterator<Item = usize>) -> Self {
        let set: BTreeSet<usize> = edges.into_iter().collect();
        let edges: Vec<usize> = set.into_iter().collect();
        let weight = edges.iter().map(|&e| &g.edge_list()[e].weight).sum();
        SteinerSolution { weight, edges }
    }

    pub fn weight_matches<G: WeightedGraph + ?Sized>(&self, g: &G) -> bool {
        let w: Weight = self.edges.iter().map(|&e| &g.edge_list()[e].weight).sum();
        w == self.weight
    }

    pub fn is_forest<G: WeightedGraph + ?Sized>(&self, g: &G) -> bool {
        is_forest(g, &self.edges)
    }

    pub fn connects<G: WeightedGraph + ?Sized>(&self, g: &G, terminals: &[usize]) -> bool {
        connects(g, &self.edges, terminals)
    }
}

/// Union-find over vertex ids.
pub type Dsu = UnionFind<usize>;

pub fn is_forest<G: WeightedGraph + ?Sized>(g: &G, edges: &[usize]) -> bool {
    let mut d = Dsu::new(g.vertex_count());
    edges.iter().all(|&e| {
        let ed = &g.edge_list()[e];
        d.union(ed.u, ed.v)
    })
}

pub fn connects<G: WeightedGraph + ?Sized>(g: &G, edges: &[usize], terminals: &[usize]) -> bool {
    let mut d = Dsu::new(g.vertex_count());
    for &e in edges {
        let ed = &g.edge_list()[e];
        d.union(ed.u, ed.v);
    }
    terminals.windows(2).all(|w| d.equiv(w[0], w[1]))
}

/// Spanning forest of the subgraph formed by `edges`, keeping lower ids first.
pub fn spanning_forest<G: WeightedGraph + ?Sized>(g: &G, edges: &[usize]) -> Vec<usize> {
    let mut sorted: Vec<usize> = edges.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let mut d = Dsu::new(g.vertex_count());
    sorted
        .into_iter()
        .filter(|&e| {
            let ed = &g.edge_list()[e];
            d.union(ed.u, ed.v)
        })
        .collect()
}

/// Repeatedly removes leaves that are not in `keep` (assumes a forest).
pub fn prune_leaves<G: WeightedGraph + ?Sized>(g: &G, edges: &[usize], keep: &[usize]) -> Vec<usize> {
    let n = g.vertex_count();
    let keep: BTreeSet<usize> = keep.iter().copied().collect();
    let mut alive: BTreeSet<usize> = edges.iter().copied().collect();
    let mut deg = vec![0usize; n];
    let mut inc: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &e in &alive {
        let ed = &g.edge_list()[e];
        deg[ed.u] += 1;
        deg[ed.v] += 1;
        inc[ed.u].push(e);
        inc[ed.v].push(e);
    }
    let mut stack: Vec<usize> = (0..n).filter(|&x| deg[x] == 1 && !keep.contains(&x)).collect();
    while let Some(x) = stack.pop() {
        if deg[x] != 1 || keep.contains(&x) {
            continue;
        }
        let e = *inc[x].iter().find(|e| alive.contains(e)).expect("leaf edge");
        alive.remove(&e);
        deg[x] -= 1;
        let y = g.edge_list()[e].other(x);
        deg[y] -= 1;
        if deg[y] == 1 && !keep.contains(&y) {
            stack.push(y);
        }
    }
    alive.into_iter().collect()
}

/// Spanning forest of `edges`, restricted to components touching `keep`, then pruned.
pub fn tidy_forest<G: WeightedGraph + ?Sized>(g: &G, edges: &[usize], keep: &[usize]) -> Vec<usize> {
    let forest = spanning_forest(g, edges);
    let mut d = Dsu::new(g.vertex_count());
    for &e in &forest {
        let ed = &g.edge_list()[e];
        d.union(ed.u, ed.v);
    }
    let roots: BTreeSet<usize> = keep.iter().map(|&k| d.find_mut(k)).collect();
    let kept: Vec<usize> = forest
        .into_iter()
        .filter(|&e| roots.contains(&d.find_mut(g.edge_list()[e].u)))
        .collect();
    prune_leaves(g, &kept, keep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::SimpleGraph;

    #[test]
    fn tidy_drops_cycles_and_dangling_paths() {
        let mut g = SimpleGraph::new(6);
        g.add_edge(0, 1, Weight::from(1u64));
        g.add_edge(1, 2, Weight::from(1u64));
        g.add_edge(2, 0, Weight::from(1u64));
        g.add_edge(2, 3, Weight::from(1u64));
        g.add_edge(4, 5, Weight::from(1u64));
        let t = tidy_forest(&g, &[0, 1, 2, 3, 4], &[0, 1]);
        assert_eq!(t, vec![0]);
        let s = SteinerSolution::from_edges(&g, t);
        assert!(s.is_forest(&g));
        assert!(s.connects(&g, &[0, 1]));
        assert!(s.weight_matches(&g));
    }
}
