use graph_core::solution::tidy_forest;
use graph_core::{SteinerSolution, Weight, WeightedGraph};

use crate::cost::{fits_u128, BigCost, Cost};
use crate::engine::{run, Arena, Subsets, Table};
use crate::error::OracleError;

#[derive(Clone, Debug)]
pub struct DwConfig {
    /// Largest accepted terminal count.
    pub terminal_cap: usize,
}

impl Default for DwConfig {
    fn default() -> Self {
        DwConfig { terminal_cap: 16 }
    }
}

pub(crate) fn normalize_terminals(n: usize, terminals: &[usize]) -> Result<Vec<usize>, OracleError> {
    let mut t = terminals.to_vec();
    t.sort_unstable();
    t.dedup();
    if let Some(&bad) = t.iter().find(|&&x| x >= n) {
        return Err(OracleError::BadTerminal(bad));
    }
    Ok(t)
}

/// Exact minimum Steiner tree by Dreyfus-Wagner.  `g` need not be planar.
pub fn dreyfus_wagner<G: WeightedGraph + ?Sized>(
    g: &G,
    terminals: &[usize],
    cfg: &DwConfig,
) -> Result<SteinerSolution, OracleError> {
    let t = normalize_terminals(g.vertex_count(), terminals)?;
    if t.len() > cfg.terminal_cap {
        return Err(OracleError::TerminalCapExceeded { got: t.len(), cap: cfg.terminal_cap });
    }
    if t.len() <= 1 {
        return Ok(SteinerSolution::empty());
    }
    let root = t[0];
    let table = SteinerTable::build(g, &t[1..])?;
    let full = (1usize << (t.len() - 1)) - 1;
    if table.value(full, root).is_none() {
        let comp = graph_core::graph::components_of(g.vertex_count(), g.edge_list());
        let bad = t.iter().copied().find(|&x| comp[x] != comp[root]).unwrap_or(root);
        return Err(OracleError::Unreachable(bad));
    }
    let edges = table.tree(full, root);
    let edges = tidy_forest(g, &edges, &t);
    Ok(SteinerSolution::from_edges(g, edges))
}

/// Minimum weight of a tree containing `terminals` plus `v`, for every vertex `v`.
pub fn steiner_with_each_vertex<G: WeightedGraph + ?Sized>(
    g: &G,
    terminals: &[usize],
    cfg: &DwConfig,
) -> Result<Vec<Option<Weight>>, OracleError> {
    let t = normalize_terminals(g.vertex_count(), terminals)?;
    if t.len() + 1 > cfg.terminal_cap {
        return Err(OracleError::TerminalCapExceeded { got: t.len() + 1, cap: cfg.terminal_cap });
    }
    if t.is_empty() {
        return Ok(vec![Some(Weight::zero()); g.vertex_count()]);
    }
    let table = SteinerTable::build(g, &t)?;
    let full = (1usize << t.len()) - 1;
    Ok((0..g.vertex_count()).map(|v| table.value(full, v)).collect())
}

enum Inner {
    Fast(Arena<u128>, Table<u128>),
    Big(Arena<BigCost>, Table<BigCost>),
}

/// Full Dreyfus-Wagner table: `value(mask, v)` is the cheapest tree holding
/// the terminals selected by `mask` together with `v`.
pub struct SteinerTable {
    terms: Vec<usize>,
    inner: Inner,
}

impl SteinerTable {
    pub fn build<G: WeightedGraph + ?Sized>(g: &G, terms: &[usize]) -> Result<Self, OracleError> {
        if terms.len() >= 28 {
            return Err(OracleError::TerminalCapExceeded { got: terms.len(), cap: 27 });
        }
        let fam = Subsets { terms };
        let inner = if fits_u128(&g.total_weight()) {
            let arena = Arena::<u128>::new(g);
            let table = run(&fam, &arena);
            Inner::Fast(arena, table)
        } else {
            let arena = Arena::<BigCost>::new(g);
            let table = run(&fam, &arena);
            Inner::Big(arena, table)
        };
        Ok(SteinerTable { terms: terms.to_vec(), inner })
    }

    pub fn terms(&self) -> &[usize] {
        &self.terms
    }

    pub fn value(&self, mask: usize, v: usize) -> Option<Weight> {
        match &self.inner {
            Inner::Fast(_, t) => t.value(mask, v).to_weight(),
            Inner::Big(_, t) => t.value(mask, v).to_weight(),
        }
    }

    pub fn tree(&self, mask: usize, v: usize) -> Vec<usize> {
        let fam = Subsets { terms: &self.terms };
        match &self.inner {
            Inner::Fast(a, t) => t.tree(&fam, a, mask, v),
            Inner::Big(a, t) => t.tree(&fam, a, mask, v),
        }
    }

    pub fn uses_fast_path(&self) -> bool {
        matches!(self.inner, Inner::Fast(..))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use graph_core::SimpleGraph;

    fn w(x: u64) -> Weight {
        Weight::from(x)
    }

    #[test]
    fn star_beats_path() {
        // Three leaves around a hub; pairwise leaf edges are expensive.
        let mut g = SimpleGraph::new(4);
        for leaf in 1..4 {
            g.add_edge(0, leaf, w(2));
        }
        g.add_edge(1, 2, w(5));
        g.add_edge(2, 3, w(5));
        let s = dreyfus_wagner(&g, &[1, 2, 3], &DwConfig::default()).unwrap();
        assert_eq!(s.weight, w(6));
        assert_eq!(s.edges, vec![0, 1, 2]);
        assert!(s.is_forest(&g));
    }

    #[test]
    fn trivial_and_error_cases() {
        let mut g = SimpleGraph::new(3);
        g.add_edge(0, 1, w(4));
        let cfg = DwConfig::default();
        assert_eq!(dreyfus_wagner(&g, &[1, 1], &cfg).unwrap().weight, w(0));
        assert_eq!(dreyfus_wagner(&g, &[0, 2], &cfg).unwrap_err(), OracleError::Unreachable(2));
        let tight = DwConfig { terminal_cap: 1 };
        assert!(matches!(
            dreyfus_wagner(&g, &[0, 1], &tight),
            Err(OracleError::TerminalCapExceeded { got: 2, cap: 1 })
        ));
    }

    #[test]
    fn huge_weights_use_exact_fallback() {
        let big: Weight = "100000000000000000000000000000000000000000".parse().unwrap();
        let mut g = SimpleGraph::new(3);
        g.add_edge(0, 1, big.clone());
        g.add_edge(1, 2, big.clone());
        g.add_edge(0, 2, &big + &big);
        let table = SteinerTable::build(&g, &[1, 2]).unwrap();
        assert!(!table.uses_fast_path());
        let s = dreyfus_wagner(&g, &[0, 1, 2], &DwConfig::default()).unwrap();
        assert_eq!(s.weight, &big + &big);
    }

    #[test]
    fn each_vertex_table() {
        let mut g = SimpleGraph::new(3);
        g.add_edge(0, 1, w(1));
        g.add_edge(1, 2, w(2));
        let v = steiner_with_each_vertex(&g, &[0], &DwConfig::default()).unwrap();
        assert_eq!(v, vec![Some(w(0)), Some(w(1)), Some(w(3))]);
    }
}
